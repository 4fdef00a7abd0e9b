#include "pwt/validate.hpp"

#include <chrono>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "pwt/errors.hpp"
#include "pwt/rng.hpp"

namespace pwt {

OracleOutcome brute_force_optimal(const TourContext& ctx, const SolveMode& mode) {
    const auto start = std::chrono::steady_clock::now();
    const int m = ctx.num_items();
    if (m > kOracleItemCap)
        throw ConfigError("brute force caps at " + std::to_string(kOracleItemCap) +
                          " items; instance has " + std::to_string(m));

    const StochasticSpec* spec = mode.chance ? &mode.spec : nullptr;
    const WeightView view = mode.weight_view();

    PackingPlan current(ctx.instance, spec);
    PackingPlan best = current;
    double best_z = evaluate(ctx, best, view);
    long long evaluated = 1;

    const std::uint32_t subsets = 1u << m;
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
        PackingPlan plan(ctx.instance, spec);
        for (int j = 0; j < m; ++j)
            if (mask & (1u << j)) plan.add(j + 1);
        if (!is_feasible(plan, ctx, mode)) continue;
        double z = 0.0;
        try {
            z = evaluate(ctx, plan, view);
        } catch (const EvalError&) {
            continue;  // stalled evaluation = infeasible, never a candidate
        }
        ++evaluated;
        bool better = z > best_z;
        if (z == best_z) {
            // Prefer fewer items, then the lexicographically smallest id set.
            if (plan.count() != best.count()) {
                better = plan.count() < best.count();
            } else {
                better = plan.selected_ids() < best.selected_ids();
            }
        }
        if (better) {
            best = std::move(plan);
            best_z = z;
        }
    }

    OracleOutcome outcome{std::move(best), SolveReport{}};
    SolveReport& report = outcome.report;
    report.algorithm = "oracle";
    report.reward = "exhaustive";
    report.mode = mode.chance ? "chance" : "deterministic";
    if (mode.chance) {
        report.alpha = mode.spec.alpha;
        report.delta = mode.spec.delta;
        report.bound = tail_bound_name(mode.spec.resolved_bound());
        report.surrogate_weight = surrogate_weight(outcome.plan, mode.spec);
    }
    report.objective = best_z;
    report.total_weight = outcome.plan.total_weight();
    report.items = outcome.plan.selected_ids();
    report.evaluations = evaluated;
    report.runtime_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return outcome;
}

ViolationEstimate monte_carlo_violation(const PackingPlan& plan, const StochasticSpec& spec,
                                        double capacity, long long samples,
                                        std::uint64_t seed) {
    if (samples < 1) throw ValidationError("monte carlo needs at least one sample");
    const std::vector<int> ids = plan.selected_ids();
    long long violations = 0;
    for (long long s = 0; s < samples; ++s) {
        // One child stream per sample index: the estimate is independent of
        // any batching or parallel split.
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(s)));
        double total = 0.0;
        for (int id : ids) {
            const double u = rng.next_double();
            total += spec.mu[id - 1] + spec.delta * (2.0 * u - 1.0);
        }
        if (total > capacity) ++violations;
    }
    ViolationEstimate estimate;
    estimate.samples = samples;
    estimate.rate = static_cast<double>(violations) / static_cast<double>(samples);
    estimate.std_error =
        std::sqrt(estimate.rate * (1.0 - estimate.rate) / static_cast<double>(samples));
    return estimate;
}

}  // namespace pwt
