#ifndef PWT_OBJECTIVE_HPP
#define PWT_OBJECTIVE_HPP

#include <vector>

#include "pwt/model.hpp"
#include "pwt/plan.hpp"
#include "pwt/stochastic.hpp"

namespace pwt {

// Which per-item weights drive the travel-time term. Chance-constrained
// runs price travel with expected weights; by the uncertainty model these
// equal the nominal weights, so the two views agree numerically.
enum class WeightView { kNominal, kExpected };

// Constraint regime for a solver run.
struct SolveMode {
    bool chance = false;
    StochasticSpec spec;  // meaningful only when chance

    static SolveMode deterministic() { return SolveMode{}; }
    static SolveMode chance_constrained(StochasticSpec spec);

    WeightView weight_view() const { return chance ? WeightView::kExpected : WeightView::kNominal; }
};

// Total benefit of a packing plan on a fixed tour: total profit minus the
// rent for the travel time, where each leg is ridden at
// v_max - nu * (weight collected so far). Plans heavier than the capacity
// are evaluated as long as every leg speed stays positive; a nonpositive
// speed throws EvalError carrying the tour position.
double evaluate(const TourContext& ctx, const PackingPlan& plan,
                WeightView view = WeightView::kNominal);

// Objective of (plan + item) without mutating the plan, re-timing only the
// legs at or after the item's city. Agrees with a full evaluate of the
// extended plan to 1e-9 relative. The item must not be selected.
double evaluate_delta(const TourContext& ctx, const PackingPlan& plan, int item_id,
                      double current_z, WeightView view = WeightView::kNominal);

bool check_capacity(const PackingPlan& plan, double capacity);

// Eq.-style Hoeffding surrogate: mu(y) + delta * sqrt(2 |y|_1 ln(1/(1-alpha))).
double surrogate_weight_hoeffding(const PackingPlan& plan, const StochasticSpec& spec);

// Chebyshev surrogate: mu(y) + sqrt(alpha/(1-alpha)) * sqrt(var(y)).
double surrogate_weight_chebyshev(const PackingPlan& plan, const StochasticSpec& spec);

// Dispatches on spec.resolved_bound().
double surrogate_weight(const PackingPlan& plan, const StochasticSpec& spec);

// Surrogate weight of (plan + item) from the plan's cached aggregates.
double surrogate_weight_with(const PackingPlan& plan, const StochasticSpec& spec, int item_id);

// Deterministic mode: total weight <= B. Chance mode: surrogate <= B.
bool is_feasible(const PackingPlan& plan, const TourContext& ctx, const SolveMode& mode);

// Speed ridden on each tour leg under the plan, in tour order.
std::vector<double> segment_speeds(const TourContext& ctx, const PackingPlan& plan,
                                   WeightView view = WeightView::kNominal);

}  // namespace pwt

#endif  // PWT_OBJECTIVE_HPP
