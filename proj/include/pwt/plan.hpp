#ifndef PWT_PLAN_HPP
#define PWT_PLAN_HPP

#include <string>
#include <vector>

#include "pwt/model.hpp"
#include "pwt/stochastic.hpp"

namespace pwt {

// Binary item selection with cached aggregates (total weight/profit, mu(y),
// var(y), |y|_1) and per-city selected weight, maintained on add/remove.
//
// The plan borrows the instance (and optional stochastic spec); both must
// outlive it. add() is O(1); remove() recomputes the aggregates from the
// selection so that a long add/remove history cannot drift away from a
// from-scratch recomputation.
class PackingPlan {
 public:
    explicit PackingPlan(const Instance& instance, const StochasticSpec* spec = nullptr);

    void add(int item_id);     // throws ValidationError if unknown or already selected
    void remove(int item_id);  // throws ValidationError if unknown or not selected

    bool selected(int item_id) const;
    int count() const { return count_; }
    double total_weight() const { return total_weight_; }
    double total_profit() const { return total_profit_; }
    double mu() const { return mu_; }
    double variance() const { return var_; }

    // Selected weight aggregated per city (index = city id, entry 0 unused).
    const std::vector<double>& weight_at_city() const { return weight_at_city_; }
    // Same aggregation over expected weights.
    const std::vector<double>& mu_at_city() const { return mu_at_city_; }

    std::vector<int> selected_ids() const;  // ascending item ids

    const Instance& instance() const { return *instance_; }
    const StochasticSpec* spec() const { return spec_; }

    bool operator==(const PackingPlan& other) const { return selected_ == other.selected_; }

 private:
    void recompute();

    const Instance* instance_;
    const StochasticSpec* spec_;
    std::vector<char> selected_;
    std::vector<double> weight_at_city_;
    std::vector<double> mu_at_city_;
    double total_weight_ = 0.0;
    double total_profit_ = 0.0;
    double mu_ = 0.0;
    double var_ = 0.0;
    int count_ = 0;
};

// {"selected": [ids], "objective": z, "weight": w, "surrogate_weight": x|null}
std::string plan_to_json(const PackingPlan& plan, double objective,
                         const double* surrogate_weight);

// Reads the "selected" id list of a serialized plan into a fresh plan.
// Throws ParseError on malformed JSON, ValidationError on unknown ids.
PackingPlan plan_from_json(std::string_view json_text, const Instance& instance,
                           const StochasticSpec* spec = nullptr);

}  // namespace pwt

#endif  // PWT_PLAN_HPP
