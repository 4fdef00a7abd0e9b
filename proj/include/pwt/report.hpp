#ifndef PWT_REPORT_HPP
#define PWT_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pwt {

// The result record every solver emits; serialized as JSON and flattened
// into the experiment CSVs.
struct SolveReport {
    std::string algorithm;  // pack | pack_ih | pack_sf | pack_hh | oracle
    std::string reward;     // r1..r7, or HH1..HH6 for pack_hh
    std::string mode;       // deterministic | chance
    std::optional<double> alpha;
    std::optional<double> delta;
    std::optional<std::string> bound;
    std::uint64_t seed = 0;
    double objective = 0.0;
    double total_weight = 0.0;
    std::optional<double> surrogate_weight;
    std::vector<int> items;  // packed item ids, ascending
    long long evaluations = 0;
    double runtime_ms = 0.0;

    // Hyper-heuristic extras; empty elsewhere.
    std::vector<double> trajectory;       // best z after each iteration
    std::vector<std::string> sequence;    // final heuristic per acceptance slot

    std::string to_json(int indent = -1) const;
};

}  // namespace pwt

#endif  // PWT_REPORT_HPP
