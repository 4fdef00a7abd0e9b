#include "pwt/plan.hpp"

#include <string>

#include <json.hpp>

#include "pwt/errors.hpp"

namespace pwt {

PackingPlan::PackingPlan(const Instance& instance, const StochasticSpec* spec)
    : instance_(&instance), spec_(spec) {
    if (spec_ && static_cast<int>(spec_->mu.size()) != instance.num_items())
        throw ValidationError("stochastic spec does not match the instance's item count");
    selected_.assign(instance.num_items(), 0);
    weight_at_city_.assign(instance.num_cities() + 1, 0.0);
    mu_at_city_.assign(instance.num_cities() + 1, 0.0);
}

void PackingPlan::add(int item_id) {
    if (item_id < 1 || item_id > instance_->num_items())
        throw ValidationError("unknown item id " + std::to_string(item_id));
    if (selected_[item_id - 1])
        throw ValidationError("item " + std::to_string(item_id) + " is already selected");
    selected_[item_id - 1] = 1;
    const Item& it = instance_->items[item_id - 1];
    const double mu_j = spec_ ? spec_->mu[item_id - 1] : it.weight;
    const double var_j = spec_ ? spec_->sigma_sq[item_id - 1] : 0.0;
    total_weight_ += it.weight;
    total_profit_ += it.profit;
    mu_ += mu_j;
    var_ += var_j;
    count_ += 1;
    weight_at_city_[it.city] += it.weight;
    mu_at_city_[it.city] += mu_j;
}

void PackingPlan::remove(int item_id) {
    if (item_id < 1 || item_id > instance_->num_items())
        throw ValidationError("unknown item id " + std::to_string(item_id));
    if (!selected_[item_id - 1])
        throw ValidationError("item " + std::to_string(item_id) + " is not selected");
    selected_[item_id - 1] = 0;
    // Rebuild instead of subtracting, so caches always equal a from-scratch
    // recomputation regardless of the add/remove history.
    recompute();
}

void PackingPlan::recompute() {
    total_weight_ = 0.0;
    total_profit_ = 0.0;
    mu_ = 0.0;
    var_ = 0.0;
    count_ = 0;
    weight_at_city_.assign(weight_at_city_.size(), 0.0);
    mu_at_city_.assign(mu_at_city_.size(), 0.0);
    for (size_t j = 0; j < selected_.size(); ++j) {
        if (!selected_[j]) continue;
        const Item& it = instance_->items[j];
        const double mu_j = spec_ ? spec_->mu[j] : it.weight;
        const double var_j = spec_ ? spec_->sigma_sq[j] : 0.0;
        total_weight_ += it.weight;
        total_profit_ += it.profit;
        mu_ += mu_j;
        var_ += var_j;
        count_ += 1;
        weight_at_city_[it.city] += it.weight;
        mu_at_city_[it.city] += mu_j;
    }
}

bool PackingPlan::selected(int item_id) const {
    if (item_id < 1 || item_id > instance_->num_items())
        throw ValidationError("unknown item id " + std::to_string(item_id));
    return selected_[item_id - 1] != 0;
}

std::vector<int> PackingPlan::selected_ids() const {
    std::vector<int> ids;
    for (size_t j = 0; j < selected_.size(); ++j)
        if (selected_[j]) ids.push_back(static_cast<int>(j) + 1);
    return ids;
}

std::string plan_to_json(const PackingPlan& plan, double objective,
                         const double* surrogate_weight) {
    nlohmann::json j;
    j["selected"] = plan.selected_ids();
    j["objective"] = objective;
    j["weight"] = plan.total_weight();
    j["surrogate_weight"] = surrogate_weight ? nlohmann::json(*surrogate_weight)
                                             : nlohmann::json(nullptr);
    return j.dump();
}

PackingPlan plan_from_json(std::string_view json_text, const Instance& instance,
                           const StochasticSpec* spec) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("plan JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("selected") || !j["selected"].is_array())
        throw ParseError("plan JSON must be an object with a 'selected' array");
    PackingPlan plan(instance, spec);
    for (const auto& v : j["selected"]) {
        if (!v.is_number_integer())
            throw ParseError("plan 'selected' entries must be integer item ids");
        plan.add(v.get<int>());
    }
    return plan;
}

}  // namespace pwt
