#include "pwt/hyper.hpp"

#include <chrono>
#include <string>
#include <utility>

#include "pwt/errors.hpp"

namespace pwt {
namespace {

PackOutcome run_single(const TourContext& ctx, const RewardSpec& reward, const SolveMode& mode) {
    if (mode.chance) return pack_surrogate(ctx, reward, mode.spec);
    if (reward_is_iterative(reward.kind)) return pack_iterative(ctx, reward);
    return pack_static(ctx, reward);
}

}  // namespace

const char* hh_variant_name(HHVariant variant) {
    switch (variant) {
    case HHVariant::kHH1: return "HH1";
    case HHVariant::kHH2: return "HH2";
    case HHVariant::kHH3: return "HH3";
    case HHVariant::kHH4: return "HH4";
    case HHVariant::kHH5: return "HH5";
    case HHVariant::kHH6: return "HH6";
    }
    return "HH1";
}

HHVariant hh_variant_from_name(std::string_view name) {
    std::string upper(name);
    for (char& c : upper)
        if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    if (upper.size() == 3 && upper.rfind("HH", 0) == 0 && upper[2] >= '1' && upper[2] <= '6')
        return static_cast<HHVariant>(upper[2] - '1');
    throw ConfigError("unknown hyper-heuristic variant '" + std::string(name) +
                      "' (expected HH1..HH6)");
}

std::vector<RewardSpec> hh_pool(HHVariant variant) {
    using K = RewardKind;
    switch (variant) {
    case HHVariant::kHH1:
    case HHVariant::kHH2:
        return {{K::kR1}, {K::kR2}, {K::kR3}};
    case HHVariant::kHH3:
    case HHVariant::kHH4:
        return {{K::kR1}, {K::kR2}, {K::kR3}, {K::kR4}, {K::kR5}};
    case HHVariant::kHH5:
    case HHVariant::kHH6:
        return {{K::kR1}, {K::kR6}, {K::kR7}};
    }
    return {};
}

bool hh_best_init(HHVariant variant) {
    return variant == HHVariant::kHH2 || variant == HHVariant::kHH4 ||
           variant == HHVariant::kHH6;
}

bool hh_requires_chance(HHVariant variant) {
    return variant == HHVariant::kHH5 || variant == HHVariant::kHH6;
}

void HHConfig::validate() const {
    if (iterations < 0) throw ConfigError("iteration budget must be nonnegative");
    if (mutation_rate < 0.0 || mutation_rate > 1.0)
        throw ConfigError("mutation rate must lie in [0, 1]");
    if (hh_requires_chance(variant) && !mode.chance)
        throw ConfigError(std::string(hh_variant_name(variant)) +
                          " uses stochastic rewards and requires chance mode");
    if (!hh_requires_chance(variant) && mode.chance)
        throw ConfigError(std::string(hh_variant_name(variant)) +
                          " is a deterministic variant; use HH5/HH6 under chance constraints");
    if (mode.chance) mode.spec.validate();
}

HeuristicSequence init_sequence(const HHConfig& cfg, const TourContext& ctx) {
    cfg.validate();
    const std::vector<RewardSpec> pool = hh_pool(cfg.variant);
    RewardSpec chosen = pool.front();  // r1 leads every pool
    if (hh_best_init(cfg.variant)) {
        double best_z = 0.0;
        bool first = true;
        for (const RewardSpec& candidate : pool) {
            const PackOutcome outcome = run_single(ctx, candidate, cfg.mode);
            // Strictly-better keeps the earliest pool member on ties.
            if (first || outcome.report.objective > best_z) {
                best_z = outcome.report.objective;
                chosen = candidate;
                first = false;
            }
        }
    }
    return HeuristicSequence(static_cast<size_t>(ctx.num_items()), chosen);
}

HeuristicSequence mutate(const HeuristicSequence& sequence, double omega,
                         const std::vector<RewardSpec>& pool, Rng& rng) {
    if (pool.size() < 2) throw ConfigError("mutation needs a pool of at least 2 heuristics");
    HeuristicSequence mutated = sequence;
    for (RewardSpec& entry : mutated) {
        const double draw = rng.next_double();
        if (draw >= omega) continue;
        size_t current = pool.size();
        for (size_t i = 0; i < pool.size(); ++i)
            if (pool[i] == entry) current = i;
        // Draw uniformly among the *other* pool members.
        size_t pick = rng.next_below(pool.size() - (current < pool.size() ? 1 : 0));
        if (current < pool.size() && pick >= current) ++pick;
        entry = pool[pick];
    }
    return mutated;
}

HHOutcome run_hh(const HHConfig& cfg, const TourContext& ctx) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    const std::vector<RewardSpec> pool = hh_pool(cfg.variant);

    HeuristicSequence hh = init_sequence(cfg, ctx);
    PackOutcome incumbent = pack_sequence(ctx, hh, cfg.mode);
    long long evaluations = incumbent.report.evaluations;

    std::vector<double> trajectory;
    trajectory.reserve(static_cast<size_t>(cfg.iterations) + 1);
    trajectory.push_back(incumbent.report.objective);

    Rng rng(cfg.seed);
    for (int iter = 0; iter < cfg.iterations; ++iter) {
        HeuristicSequence candidate_hh = mutate(hh, cfg.mutation_rate, pool, rng);
        PackOutcome candidate = pack_sequence(ctx, candidate_hh, cfg.mode);
        evaluations += candidate.report.evaluations;
        if (candidate.report.objective >= incumbent.report.objective) {
            hh = std::move(candidate_hh);
            incumbent = std::move(candidate);
        }
        trajectory.push_back(incumbent.report.objective);
    }

    HHOutcome outcome{std::move(incumbent.plan), std::move(hh), std::move(incumbent.report)};
    SolveReport& report = outcome.report;
    report.algorithm = "pack_hh";
    report.reward = hh_variant_name(cfg.variant);
    report.seed = cfg.seed;
    report.evaluations = evaluations;
    report.trajectory = std::move(trajectory);
    report.sequence.reserve(outcome.sequence.size());
    for (const RewardSpec& entry : outcome.sequence)
        report.sequence.push_back(reward_name(entry.kind));
    report.runtime_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return outcome;
}

}  // namespace pwt
