#include "pwt/stochastic.hpp"

#include <string>

#include "pwt/errors.hpp"
#include "pwt/model.hpp"

namespace pwt {

const char* tail_bound_name(TailBound bound) {
    switch (bound) {
    case TailBound::kHoeffding:
        return "hoeffding";
    case TailBound::kChebyshev:
        return "chebyshev";
    case TailBound::kAuto:
        return "auto";
    }
    return "auto";
}

TailBound tail_bound_from_name(std::string_view name) {
    if (name == "hoeffding") return TailBound::kHoeffding;
    if (name == "chebyshev") return TailBound::kChebyshev;
    if (name == "auto") return TailBound::kAuto;
    throw ConfigError("unknown tail bound '" + std::string(name) +
                      "' (expected auto, hoeffding or chebyshev)");
}

StochasticSpec StochasticSpec::uniform(const Instance& instance, double delta, double alpha,
                                       TailBound bound) {
    StochasticSpec spec;
    spec.delta = delta;
    spec.alpha = alpha;
    spec.bound = bound;
    spec.mu.reserve(instance.items.size());
    for (const Item& item : instance.items) spec.mu.push_back(item.weight);
    // Uniform on [mu - delta, mu + delta] has variance delta^2 / 3.
    spec.sigma_sq.assign(instance.items.size(), delta * delta / 3.0);
    spec.validate();
    return spec;
}

TailBound StochasticSpec::resolved_bound() const {
    if (bound != TailBound::kAuto) return bound;
    return alpha < 0.95 ? TailBound::kChebyshev : TailBound::kHoeffding;
}

void StochasticSpec::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw ValidationError("alpha must lie in (0, 1), got " + std::to_string(alpha));
    if (delta < 0.0) throw ValidationError("delta must be nonnegative");
    if (mu.size() != sigma_sq.size())
        throw ValidationError("mu and sigma_sq must have one entry per item");
}

}  // namespace pwt
