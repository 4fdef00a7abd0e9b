#ifndef PWT_VALIDATE_HPP
#define PWT_VALIDATE_HPP

#include <cstdint>

#include "pwt/objective.hpp"
#include "pwt/plan.hpp"
#include "pwt/report.hpp"

namespace pwt {

// Hard cap on brute-force enumeration (2^m subsets).
inline constexpr int kOracleItemCap = 24;

struct OracleOutcome {
    PackingPlan plan;
    SolveReport report;
};

// Exhaustive optimum over all feasible subsets under the mode's constraint.
// Ties break toward fewer items, then the lexicographically smallest id set.
// Subsets whose evaluation stalls the vehicle are treated as infeasible.
// Throws ConfigError when the instance exceeds kOracleItemCap items.
OracleOutcome brute_force_optimal(const TourContext& ctx, const SolveMode& mode);

struct ViolationEstimate {
    double rate = 0.0;       // fraction of draws with total weight > capacity
    double std_error = 0.0;  // sqrt(rate * (1-rate) / samples)
    long long samples = 0;
};

// Empirical chance-constraint check: draws independent weight vectors
// uniform on [mu_j - delta, mu_j + delta] for the selected items. Sample
// streams are split by index, so the result depends only on the seed.
ViolationEstimate monte_carlo_violation(const PackingPlan& plan, const StochasticSpec& spec,
                                        double capacity, long long samples,
                                        std::uint64_t seed);

}  // namespace pwt

#endif  // PWT_VALIDATE_HPP
