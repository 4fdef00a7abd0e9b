#ifndef PWT_STOCHASTIC_HPP
#define PWT_STOCHASTIC_HPP

#include <string_view>
#include <vector>

namespace pwt {

struct Instance;

enum class TailBound { kHoeffding, kChebyshev, kAuto };

const char* tail_bound_name(TailBound bound);
TailBound tail_bound_from_name(std::string_view name);

// Uncertainty model for chance-constrained runs: item weights are uniform
// on [mu_j - delta, mu_j + delta], so sigma_j^2 = delta^2 / 3. The expected
// weights equal the instance's nominal weights.
struct StochasticSpec {
    double delta = 0.0;
    double alpha = 0.5;
    TailBound bound = TailBound::kAuto;
    std::vector<double> mu;        // per item, indexed by item id - 1
    std::vector<double> sigma_sq;  // per item

    static StochasticSpec uniform(const Instance& instance, double delta, double alpha,
                                  TailBound bound = TailBound::kAuto);

    // kAuto picks Chebyshev below alpha = 0.95 and Hoeffding at or above it.
    TailBound resolved_bound() const;

    void validate() const;  // throws ValidationError
};

}  // namespace pwt

#endif  // PWT_STOCHASTIC_HPP
