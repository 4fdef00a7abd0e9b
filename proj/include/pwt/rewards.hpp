#ifndef PWT_REWARDS_HPP
#define PWT_REWARDS_HPP

#include <string_view>
#include <vector>

#include "pwt/model.hpp"
#include "pwt/plan.hpp"
#include "pwt/stochastic.hpp"

namespace pwt {

enum class RewardKind { kR1, kR2, kR3, kR4, kR5, kR6, kR7 };

const char* reward_name(RewardKind kind);
RewardKind reward_from_name(std::string_view name);
bool reward_is_iterative(RewardKind kind);   // r4..r7 depend on the picked set
bool reward_is_stochastic(RewardKind kind);  // r6/r7 need a StochasticSpec

struct RewardSpec {
    RewardKind kind = RewardKind::kR1;
    double gamma = 1.0;  // exponent, r1 only

    void validate() const;  // gamma > 0; gamma != 1 only for r1
    bool operator==(const RewardSpec&) const = default;
};

// One re-sortable schedule entry per future acceptance.
using HeuristicSequence = std::vector<RewardSpec>;

// Per-run scoring state: the picked plan plus, for every city, the weight of
// picked items at tour positions at or after that city. Only items behind an
// item on the remaining tour count toward its reward, so picks at earlier
// positions are deliberately excluded even though the vehicle physically
// carries them; the physical marginal cost lives in evaluate_delta.
class ScoreState {
 public:
    explicit ScoreState(const TourContext& ctx, const StochasticSpec* spec = nullptr);

    // Adds the item to the plan and folds its weight (expected weight under a
    // stochastic spec) into the suffix accumulation.
    void mark_picked(int item_id);

    double suffix_weight(int city) const;

    PackingPlan& plan() { return plan_; }
    const PackingPlan& plan() const { return plan_; }
    const TourContext& ctx() const { return *ctx_; }
    const StochasticSpec* spec() const { return spec_; }

 private:
    const TourContext* ctx_;
    const StochasticSpec* spec_;
    PackingPlan plan_;
    std::vector<double> suffix_by_pos_;  // suffix_by_pos_[k] = picked weight at positions >= k
};

// r1 = p^gamma / (w^gamma * d_i)
double score_r1(const Item& item, double d_i, double gamma);

// r2 = p - R * (d_i/(v_max - nu*w) - d_i/v_max)
double score_r2(const Item& item, double d_i, double renting_rate, double v_max, double nu);

// r3 = r2 / w
double score_r3(const Item& item, double d_i, double renting_rate, double v_max, double nu);

// r4 = p - R * (d_i/(v_max - nu*(W_i + w)) - d_i/(v_max - nu*W_i))
double score_r4(const Item& item, double d_i, double suffix_weight, double renting_rate,
                double v_max, double nu);

// r5 = r4 / w
double score_r5(const Item& item, double d_i, double suffix_weight, double renting_rate,
                double v_max, double nu);

// Expected weight inflated by the item's marginal contribution to the
// surrogate's uncertainty term. Hoeffding:
//   w' = mu_k + delta * (sqrt(2(|y|+1) L) - sqrt(2|y| L)),  L = ln(1/(1-alpha)),
// which reduces to mu_k + delta*sqrt(2L) on an empty plan. Chebyshev:
//   w' = mu_k + sqrt(alpha/(1-alpha)) * (sqrt(var(y)+sigma_k^2) - sqrt(var(y))).
double increased_expected_weight(const Item& item, const ScoreState& state,
                                 const StochasticSpec& spec);

// r6/r7: r4/r5 with the deterministic weight swapped for w'.
double score_r6(const Item& item, double d_i, double suffix_weight, double w_prime,
                double renting_rate, double v_max, double nu);
double score_r7(const Item& item, double d_i, double suffix_weight, double w_prime,
                double renting_rate, double v_max, double nu);

// Scores an item under any reward kind, resolving d_i, W_i and w' from the
// state. Throws ScoreError when a hypothetical load stalls the vehicle.
double score_item(const Item& item, const RewardSpec& reward, const ScoreState& state);

}  // namespace pwt

#endif  // PWT_REWARDS_HPP
