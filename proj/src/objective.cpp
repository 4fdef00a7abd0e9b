#include "pwt/objective.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "pwt/errors.hpp"

namespace pwt {
namespace {

const std::vector<double>& city_weights(const PackingPlan& plan, WeightView view) {
    return view == WeightView::kExpected ? plan.mu_at_city() : plan.weight_at_city();
}

double hoeffding_slack(double count, double alpha) {
    return std::sqrt(2.0 * count * std::log(1.0 / (1.0 - alpha)));
}

// An unloaded vehicle rides at v_max even when nu is infinite (B = 0).
double speed_at(double v_max, double nu, double load) {
    return load > 0.0 ? v_max - nu * load : v_max;
}

}  // namespace

SolveMode SolveMode::chance_constrained(StochasticSpec spec) {
    spec.validate();
    SolveMode mode;
    mode.chance = true;
    mode.spec = std::move(spec);
    return mode;
}

double evaluate(const TourContext& ctx, const PackingPlan& plan, WeightView view) {
    const std::vector<double>& at_city = city_weights(plan, view);
    const Instance& inst = ctx.instance;
    const int n = ctx.num_cities();
    double load = 0.0;
    double time = 0.0;
    for (int k = 0; k < n; ++k) {
        load += at_city[ctx.tour[k]];
        const double speed = speed_at(inst.v_max, ctx.nu, load);
        if (!(speed > 0.0))
            throw EvalError("vehicle stalls leaving tour position " + std::to_string(k) +
                                " (city " + std::to_string(ctx.tour[k]) + "): load " +
                                std::to_string(load) + " at speed " + std::to_string(speed),
                            k);
        time += ctx.leg_length[k] / speed;
    }
    return plan.total_profit() - inst.renting_rate * time;
}

double evaluate_delta(const TourContext& ctx, const PackingPlan& plan, int item_id,
                      double current_z, WeightView view) {
    if (plan.selected(item_id))
        throw ValidationError("evaluate_delta: item " + std::to_string(item_id) +
                              " is already selected");
    const Item& item = ctx.instance.items[item_id - 1];
    const double extra = view == WeightView::kExpected && plan.spec()
                             ? plan.spec()->mu[item_id - 1]
                             : item.weight;
    const std::vector<double>& at_city = city_weights(plan, view);
    const Instance& inst = ctx.instance;
    const int n = ctx.num_cities();
    const int from = ctx.pos_of_city[item.city];

    // Legs before the item's city are unaffected; accumulate their load only.
    double load = 0.0;
    for (int k = 0; k < from; ++k) load += at_city[ctx.tour[k]];

    double time_diff = 0.0;
    for (int k = from; k < n; ++k) {
        load += at_city[ctx.tour[k]];
        const double old_speed = speed_at(inst.v_max, ctx.nu, load);
        const double new_speed = speed_at(inst.v_max, ctx.nu, load + extra);
        if (!(new_speed > 0.0))
            throw EvalError("vehicle stalls leaving tour position " + std::to_string(k) +
                                " (city " + std::to_string(ctx.tour[k]) +
                                ") after adding item " + std::to_string(item_id),
                            k);
        time_diff += ctx.leg_length[k] * (1.0 / new_speed - 1.0 / old_speed);
    }
    return current_z + item.profit - inst.renting_rate * time_diff;
}

bool check_capacity(const PackingPlan& plan, double capacity) {
    return plan.total_weight() <= capacity;
}

double surrogate_weight_hoeffding(const PackingPlan& plan, const StochasticSpec& spec) {
    return plan.mu() + spec.delta * hoeffding_slack(plan.count(), spec.alpha);
}

double surrogate_weight_chebyshev(const PackingPlan& plan, const StochasticSpec& spec) {
    return plan.mu() + std::sqrt(spec.alpha / (1.0 - spec.alpha)) * std::sqrt(plan.variance());
}

double surrogate_weight(const PackingPlan& plan, const StochasticSpec& spec) {
    return spec.resolved_bound() == TailBound::kHoeffding
               ? surrogate_weight_hoeffding(plan, spec)
               : surrogate_weight_chebyshev(plan, spec);
}

double surrogate_weight_with(const PackingPlan& plan, const StochasticSpec& spec, int item_id) {
    const double mu = plan.mu() + spec.mu[item_id - 1];
    if (spec.resolved_bound() == TailBound::kHoeffding)
        return mu + spec.delta * hoeffding_slack(plan.count() + 1, spec.alpha);
    return mu + std::sqrt(spec.alpha / (1.0 - spec.alpha)) *
                    std::sqrt(plan.variance() + spec.sigma_sq[item_id - 1]);
}

bool is_feasible(const PackingPlan& plan, const TourContext& ctx, const SolveMode& mode) {
    if (!mode.chance) return check_capacity(plan, ctx.instance.capacity);
    return surrogate_weight(plan, mode.spec) <= ctx.instance.capacity;
}

std::vector<double> segment_speeds(const TourContext& ctx, const PackingPlan& plan,
                                   WeightView view) {
    const std::vector<double>& at_city = city_weights(plan, view);
    const int n = ctx.num_cities();
    std::vector<double> speeds(n, 0.0);
    double load = 0.0;
    for (int k = 0; k < n; ++k) {
        load += at_city[ctx.tour[k]];
        speeds[k] = speed_at(ctx.instance.v_max, ctx.nu, load);
    }
    return speeds;
}

}  // namespace pwt
