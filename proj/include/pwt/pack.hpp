#ifndef PWT_PACK_HPP
#define PWT_PACK_HPP

#include <cstdint>
#include <vector>

#include "pwt/objective.hpp"
#include "pwt/plan.hpp"
#include "pwt/report.hpp"
#include "pwt/rewards.hpp"

namespace pwt {

struct TraceEntry {
    int step = 0;
    int item_id = 0;
    bool accepted = false;
    double objective = 0.0;  // objective after the accept/reject decision
};

struct PackOptions {
    // Consider items in literal non-decreasing score order instead of the
    // default best-first order (ablation switch).
    bool ascending = false;
    bool record_trace = false;
    std::uint64_t seed = 0;  // recorded in the report; the algorithms draw nothing
};

struct PackOutcome {
    PackingPlan plan;
    SolveReport report;
    std::vector<TraceEntry> trace;
};

// Single-pass greedy: score all items once with r1/r2/r3, walk the sorted
// list, keep an addition iff the objective does not drop and capacity holds.
PackOutcome pack_static(const TourContext& ctx, const RewardSpec& reward,
                        const PackOptions& options = {});

// Rescoring greedy: after every acceptance the remaining items are rescored
// against the new suffix weights, re-sorted, and the cursor returns to the
// front. Rejected and capacity-skipped items stay in the list. r1..r5.
PackOutcome pack_iterative(const TourContext& ctx, const RewardSpec& reward,
                           const PackOptions& options = {});

// Chance-constrained rescoring greedy: feasibility checks use the tail-bound
// surrogate weight, r6/r7 score with increased expected weights recomputed
// after every acceptance, and travel is priced with expected weights. r1/r6/r7.
PackOutcome pack_surrogate(const TourContext& ctx, const RewardSpec& reward,
                           const StochasticSpec& spec, const PackOptions& options = {});

// Rescoring greedy driven by a heuristic schedule: the reward in effect is
// sequence[a] where a counts acceptances so far; the pointer advances only on
// acceptance. The sequence length must equal the item count.
PackOutcome pack_sequence(const TourContext& ctx, const HeuristicSequence& sequence,
                          const SolveMode& mode, const PackOptions& options = {});

}  // namespace pwt

#endif  // PWT_PACK_HPP
