#include "pwt/pack.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "pwt/errors.hpp"

namespace pwt {
namespace {

struct Scored {
    double score = 0.0;
    int item_id = 0;
};

class Stopwatch {
 public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

 private:
    std::chrono::steady_clock::time_point start_;
};

// Items that cannot be scored without stalling the vehicle are provably
// over capacity as well, so they are parked at the considered-last end of
// the order rather than aborting the run.
double score_or_sentinel(const Item& item, const RewardSpec& reward, const ScoreState& state,
                         bool ascending) {
    try {
        return score_item(item, reward, state);
    } catch (const ScoreError&) {
        return ascending ? std::numeric_limits<double>::infinity()
                         : -std::numeric_limits<double>::infinity();
    }
}

void sort_scored(std::vector<Scored>& scored, bool ascending) {
    std::sort(scored.begin(), scored.end(), [ascending](const Scored& a, const Scored& b) {
        if (a.score != b.score) return ascending ? a.score < b.score : a.score > b.score;
        return a.item_id < b.item_id;  // deterministic tie-break
    });
}

// Feasibility of (plan + item) under the run's constraint.
bool candidate_fits(const PackingPlan& plan, const TourContext& ctx, const SolveMode& mode,
                    const Item& item) {
    if (!mode.chance) return plan.total_weight() + item.weight <= ctx.instance.capacity;
    return surrogate_weight_with(plan, mode.spec, item.id) <= ctx.instance.capacity;
}

struct EngineSetup {
    const char* algorithm;
    std::string reward_label;
    SolveMode mode;
    // Reward in effect once `acceptances` items have been accepted.
    const HeuristicSequence* schedule = nullptr;  // nullptr -> constant reward
    RewardSpec constant_reward;
    bool rescore = true;  // false: single-pass greedy, cursor never resets
};

PackOutcome run_greedy(const TourContext& ctx, const EngineSetup& setup,
                       const PackOptions& options) {
    const Stopwatch timer;
    const SolveMode& mode = setup.mode;
    const StochasticSpec* spec = mode.chance ? &mode.spec : nullptr;
    const WeightView view = mode.weight_view();
    const int m = ctx.num_items();

    auto reward_at = [&](int acceptances) -> const RewardSpec& {
        if (!setup.schedule) return setup.constant_reward;
        return (*setup.schedule)[std::min<size_t>(acceptances, setup.schedule->size() - 1)];
    };

    ScoreState state(ctx, spec);
    long long evaluations = 1;
    double z = evaluate(ctx, state.plan(), view);
    int acceptances = 0;

    std::vector<Scored> remaining;
    remaining.reserve(m);
    for (const Item& item : ctx.instance.items)
        remaining.push_back({score_or_sentinel(item, reward_at(0), state, options.ascending),
                             item.id});
    sort_scored(remaining, options.ascending);

    std::vector<TraceEntry> trace;
    int step = 0;
    size_t cursor = 0;
    while (!remaining.empty() && cursor < remaining.size()) {
        const int item_id = remaining[cursor].item_id;
        const Item& item = ctx.instance.items[item_id - 1];

        if (!candidate_fits(state.plan(), ctx, mode, item)) {
            ++cursor;  // skipped without evaluation
            continue;
        }

        ++evaluations;
        const double candidate_z = evaluate_delta(ctx, state.plan(), item_id, z, view);
        ++step;
        const bool accept = candidate_z >= z;  // ties are kept
        if (options.record_trace) trace.push_back({step, item_id, accept, accept ? candidate_z : z});

        if (!accept) {
            ++cursor;
            continue;
        }

        state.mark_picked(item_id);
        z = candidate_z;
        ++acceptances;
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(cursor));
        if (setup.rescore) {
            const RewardSpec& reward = reward_at(acceptances);
            for (Scored& entry : remaining)
                entry.score = score_or_sentinel(ctx.instance.items[entry.item_id - 1], reward,
                                                state, options.ascending);
            sort_scored(remaining, options.ascending);
            cursor = 0;
        }
        // Single-pass mode: the cursor already points at the next item after
        // the erase, so it stays put.
    }

    PackOutcome outcome{std::move(state.plan()), SolveReport{}, std::move(trace)};
    SolveReport& report = outcome.report;
    report.algorithm = setup.algorithm;
    report.reward = setup.reward_label;
    report.mode = mode.chance ? "chance" : "deterministic";
    if (mode.chance) {
        report.alpha = mode.spec.alpha;
        report.delta = mode.spec.delta;
        report.bound = tail_bound_name(mode.spec.resolved_bound());
        report.surrogate_weight = surrogate_weight(outcome.plan, mode.spec);
    }
    report.seed = options.seed;
    report.objective = z;
    report.total_weight = outcome.plan.total_weight();
    report.items = outcome.plan.selected_ids();
    report.evaluations = evaluations;
    report.runtime_ms = timer.elapsed_ms();
    return outcome;
}

}  // namespace

PackOutcome pack_static(const TourContext& ctx, const RewardSpec& reward,
                        const PackOptions& options) {
    reward.validate();
    if (reward_is_iterative(reward.kind))
        throw ConfigError(std::string(reward_name(reward.kind)) +
                          " needs the rescoring algorithm; pack_static takes r1..r3");
    EngineSetup setup{"pack", reward_name(reward.kind), SolveMode::deterministic(), nullptr,
                      reward, /*rescore=*/false};
    return run_greedy(ctx, setup, options);
}

PackOutcome pack_iterative(const TourContext& ctx, const RewardSpec& reward,
                           const PackOptions& options) {
    reward.validate();
    if (reward_is_stochastic(reward.kind))
        throw ConfigError(std::string(reward_name(reward.kind)) +
                          " is chance-constrained; pack_iterative takes r1..r5");
    EngineSetup setup{"pack_ih", reward_name(reward.kind), SolveMode::deterministic(), nullptr,
                      reward, /*rescore=*/true};
    return run_greedy(ctx, setup, options);
}

PackOutcome pack_surrogate(const TourContext& ctx, const RewardSpec& reward,
                           const StochasticSpec& spec, const PackOptions& options) {
    reward.validate();
    if (reward.kind != RewardKind::kR1 && !reward_is_stochastic(reward.kind))
        throw ConfigError(std::string(reward_name(reward.kind)) +
                          " is not a chance-mode reward; pack_surrogate takes r1, r6 or r7");
    if (static_cast<int>(spec.mu.size()) != ctx.num_items())
        throw ConfigError("stochastic spec does not match the instance's item count");
    EngineSetup setup{"pack_sf", reward_name(reward.kind),
                      SolveMode::chance_constrained(spec), nullptr, reward, /*rescore=*/true};
    return run_greedy(ctx, setup, options);
}

PackOutcome pack_sequence(const TourContext& ctx, const HeuristicSequence& sequence,
                          const SolveMode& mode, const PackOptions& options) {
    if (static_cast<int>(sequence.size()) != ctx.num_items())
        throw ConfigError("heuristic sequence has " + std::to_string(sequence.size()) +
                          " entries, expected one per item (" +
                          std::to_string(ctx.num_items()) + ")");
    for (const RewardSpec& entry : sequence) {
        entry.validate();
        if (reward_is_stochastic(entry.kind) && !mode.chance)
            throw ConfigError(std::string(reward_name(entry.kind)) +
                              " in the sequence requires chance mode");
    }
    EngineSetup setup{"pack_hh", "hh", mode, &sequence, RewardSpec{}, /*rescore=*/true};
    return run_greedy(ctx, setup, options);
}

}  // namespace pwt
