#include "pwt/rewards.hpp"

#include <cmath>
#include <string>

#include "pwt/errors.hpp"

namespace pwt {
namespace {

void require_positive_speed(double speed, const Item& item, const char* fn) {
    if (!(speed > 0.0))
        throw ScoreError(std::string(fn) + ": item " + std::to_string(item.id) +
                         " would stall the vehicle (speed " + std::to_string(speed) + ")");
}

}  // namespace

const char* reward_name(RewardKind kind) {
    switch (kind) {
    case RewardKind::kR1: return "r1";
    case RewardKind::kR2: return "r2";
    case RewardKind::kR3: return "r3";
    case RewardKind::kR4: return "r4";
    case RewardKind::kR5: return "r5";
    case RewardKind::kR6: return "r6";
    case RewardKind::kR7: return "r7";
    }
    return "r1";
}

RewardKind reward_from_name(std::string_view name) {
    if (name.size() == 2 && name[0] == 'r' && name[1] >= '1' && name[1] <= '7')
        return static_cast<RewardKind>(name[1] - '1');
    throw ConfigError("unknown reward '" + std::string(name) + "' (expected r1..r7)");
}

bool reward_is_iterative(RewardKind kind) { return kind >= RewardKind::kR4; }

bool reward_is_stochastic(RewardKind kind) { return kind >= RewardKind::kR6; }

void RewardSpec::validate() const {
    if (!(gamma > 0.0)) throw ConfigError("reward exponent gamma must be positive");
    if (gamma != 1.0 && kind != RewardKind::kR1)
        throw ConfigError("the gamma exponent applies to r1 only");
}

ScoreState::ScoreState(const TourContext& ctx, const StochasticSpec* spec)
    : ctx_(&ctx), spec_(spec), plan_(ctx.instance, spec) {
    suffix_by_pos_.assign(ctx.num_cities() + 1, 0.0);
}

void ScoreState::mark_picked(int item_id) {
    plan_.add(item_id);
    const Item& item = ctx_->instance.items[item_id - 1];
    const double w = spec_ ? spec_->mu[item_id - 1] : item.weight;
    const int pos = ctx_->pos_of_city[item.city];
    // The pick contributes to every city at tour position <= its own.
    for (int k = 0; k <= pos; ++k) suffix_by_pos_[k] += w;
}

double ScoreState::suffix_weight(int city) const {
    const int pos = ctx_->pos_of_city.at(city);
    if (pos < 0) throw ValidationError("city " + std::to_string(city) + " is not on the tour");
    return suffix_by_pos_[pos];
}

double score_r1(const Item& item, double d_i, double gamma) {
    if (!(d_i > 0.0))
        throw ScoreError("r1 needs a positive remaining distance for item " +
                         std::to_string(item.id));
    return std::pow(item.profit, gamma) / (std::pow(item.weight, gamma) * d_i);
}

double score_r2(const Item& item, double d_i, double renting_rate, double v_max, double nu) {
    const double loaded = v_max - nu * item.weight;
    require_positive_speed(loaded, item, "r2");
    return item.profit - renting_rate * (d_i / loaded - d_i / v_max);
}

double score_r3(const Item& item, double d_i, double renting_rate, double v_max, double nu) {
    return score_r2(item, d_i, renting_rate, v_max, nu) / item.weight;
}

double score_r4(const Item& item, double d_i, double suffix_weight, double renting_rate,
                double v_max, double nu) {
    const double with_item = v_max - nu * (suffix_weight + item.weight);
    const double without_item = v_max - nu * suffix_weight;
    require_positive_speed(with_item, item, "r4");
    require_positive_speed(without_item, item, "r4");
    return item.profit - renting_rate * (d_i / with_item - d_i / without_item);
}

double score_r5(const Item& item, double d_i, double suffix_weight, double renting_rate,
                double v_max, double nu) {
    return score_r4(item, d_i, suffix_weight, renting_rate, v_max, nu) / item.weight;
}

double increased_expected_weight(const Item& item, const ScoreState& state,
                                 const StochasticSpec& spec) {
    const double mu_k = spec.mu[item.id - 1];
    if (spec.resolved_bound() == TailBound::kHoeffding) {
        const double ln_term = std::log(1.0 / (1.0 - spec.alpha));
        const double count = state.plan().count();
        const double u = spec.delta * (std::sqrt(2.0 * (count + 1.0) * ln_term) -
                                       std::sqrt(2.0 * count * ln_term));
        return mu_k + u;
    }
    const double var = state.plan().variance();
    const double sigma_sq_k = spec.sigma_sq[item.id - 1];
    const double u = std::sqrt(spec.alpha / (1.0 - spec.alpha)) *
                     (std::sqrt(var + sigma_sq_k) - std::sqrt(var));
    return mu_k + u;
}

double score_r6(const Item& item, double d_i, double suffix_weight, double w_prime,
                double renting_rate, double v_max, double nu) {
    const double with_item = v_max - nu * (suffix_weight + w_prime);
    const double without_item = v_max - nu * suffix_weight;
    require_positive_speed(with_item, item, "r6");
    require_positive_speed(without_item, item, "r6");
    return item.profit - renting_rate * (d_i / with_item - d_i / without_item);
}

double score_r7(const Item& item, double d_i, double suffix_weight, double w_prime,
                double renting_rate, double v_max, double nu) {
    return score_r6(item, d_i, suffix_weight, w_prime, renting_rate, v_max, nu) / w_prime;
}

double score_item(const Item& item, const RewardSpec& reward, const ScoreState& state) {
    const TourContext& ctx = state.ctx();
    const Instance& inst = ctx.instance;
    const double d_i = ctx.suffix_distance[item.city];
    switch (reward.kind) {
    case RewardKind::kR1:
        return score_r1(item, d_i, reward.gamma);
    case RewardKind::kR2:
        return score_r2(item, d_i, inst.renting_rate, inst.v_max, ctx.nu);
    case RewardKind::kR3:
        return score_r3(item, d_i, inst.renting_rate, inst.v_max, ctx.nu);
    case RewardKind::kR4:
        return score_r4(item, d_i, state.suffix_weight(item.city), inst.renting_rate,
                        inst.v_max, ctx.nu);
    case RewardKind::kR5:
        return score_r5(item, d_i, state.suffix_weight(item.city), inst.renting_rate,
                        inst.v_max, ctx.nu);
    case RewardKind::kR6:
    case RewardKind::kR7: {
        if (!state.spec())
            throw ConfigError(std::string(reward_name(reward.kind)) +
                              " requires a stochastic spec");
        const double w_prime = increased_expected_weight(item, state, *state.spec());
        const double suffix = state.suffix_weight(item.city);
        if (reward.kind == RewardKind::kR6)
            return score_r6(item, d_i, suffix, w_prime, inst.renting_rate, inst.v_max, ctx.nu);
        return score_r7(item, d_i, suffix, w_prime, inst.renting_rate, inst.v_max, ctx.nu);
    }
    }
    throw ConfigError("unhandled reward kind");
}

}  // namespace pwt
