#ifndef PWT_HYPER_HPP
#define PWT_HYPER_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "pwt/pack.hpp"
#include "pwt/rewards.hpp"
#include "pwt/rng.hpp"

namespace pwt {

// The six selection hyper-heuristics: initialisation style x heuristic pool.
//   HH1 r1-init {r1,r2,r3}      HH2 best-init {r1,r2,r3}
//   HH3 r1-init {r1..r5}        HH4 best-init {r1..r5}
//   HH5 r1-init {r1,r6,r7}      HH6 best-init {r1,r6,r7}   (HH5/HH6 chance only)
enum class HHVariant { kHH1, kHH2, kHH3, kHH4, kHH5, kHH6 };

const char* hh_variant_name(HHVariant variant);
HHVariant hh_variant_from_name(std::string_view name);

std::vector<RewardSpec> hh_pool(HHVariant variant);  // in listing order
bool hh_best_init(HHVariant variant);
bool hh_requires_chance(HHVariant variant);

struct HHConfig {
    HHVariant variant = HHVariant::kHH1;
    int iterations = 1000;
    double mutation_rate = 0.1;
    std::uint64_t seed = 0;
    SolveMode mode;

    void validate() const;  // throws ConfigError on variant/mode mismatch
};

// Constant-r1 schedule, or a constant schedule of the pool member whose
// single-heuristic pack run scores highest (ties go to pool listing order).
HeuristicSequence init_sequence(const HHConfig& cfg, const TourContext& ctx);

// Independently per position, with probability omega replace the entry by a
// uniformly drawn *different* pool member. The input stays untouched.
HeuristicSequence mutate(const HeuristicSequence& sequence, double omega,
                         const std::vector<RewardSpec>& pool, Rng& rng);

struct HHOutcome {
    PackingPlan plan;
    HeuristicSequence sequence;
    SolveReport report;
};

// (1+1) elitist loop over heuristic schedules: mutate, re-pack, keep the
// mutant iff its objective is at least the incumbent's.
HHOutcome run_hh(const HHConfig& cfg, const TourContext& ctx);

}  // namespace pwt

#endif  // PWT_HYPER_HPP
