#ifndef PWT_HARNESS_HPP
#define PWT_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pwt {

// Arithmetic mean and sample standard deviation (n-1 denominator, 0 for a
// single value). Throws ValidationError on empty input.
std::pair<double, double> summarize(std::span<const double> values);

// One experiment cell description: a deterministic reward/HH variant, or a
// chance-mode one paired with each configured alpha.
struct AlgorithmToken {
    std::string token;   // r1..r7 or HH1..HH6
    bool chance = false;

    bool is_hh() const { return token.size() > 2 && (token[0] == 'H' || token[0] == 'h'); }
};

// Flat key-value experiment description; see parse_experiment_config for the
// accepted keys.
struct ExperimentConfig {
    std::vector<std::string> instances;       // instance file paths
    std::vector<std::string> tour_files;      // used when non-empty
    int generate_tours = 30;                  // tours per instance otherwise
    std::uint64_t tour_seed = 1;
    std::vector<AlgorithmToken> algorithms;
    std::vector<double> alphas;               // chance-mode confidence levels
    double delta = 0.0;
    std::string bound = "auto";
    int iterations = 1000;                    // HH iteration budget
    double mutation_rate = 0.1;
    std::uint64_t seed = 1;
    int repetitions = 1;
    std::string output = "results";           // prefix for _raw/_agg files
    std::string format = "csv";               // csv | json

    void validate() const;  // throws ConfigError
};

// Accepted keys (one `key = value` per line, '#' comments, repeated keys and
// space-separated value lists both accumulate):
//   instance, tour_file, generate_tours, tour_seed, heuristic,
//   chance_heuristic, alpha, delta, bound, iterations, mutation_rate, seed,
//   repetitions, output, format
ExperimentConfig parse_experiment_config(std::string_view text);

struct RawRow {
    std::string instance;
    int tour_id = 0;           // 1-based
    std::string algorithm;     // pack | pack_ih | pack_sf | pack_hh | <error>
    std::string reward;        // r1..r7 | HH1..HH6
    std::optional<double> alpha;
    double delta = 0.0;
    std::string bound;
    std::uint64_t seed = 0;
    double objective = 0.0;
    double total_weight = 0.0;
    std::optional<double> surrogate_weight;
    int items_packed = 0;
    long long evaluations = 0;
    double runtime_ms = 0.0;
    std::string error;         // empty on success
};

struct AggRow {
    std::string instance;
    std::string algorithm;  // the reward/variant identity token
    std::optional<double> alpha;
    int runs = 0;
    double mean_objective = 0.0;
    double std_objective = 0.0;
};

struct ExperimentResult {
    std::vector<RawRow> raw;
    std::vector<AggRow> aggregate;
    std::string raw_path;
    std::string agg_path;
    int failures = 0;
};

// Runs every instance x tour x algorithm (x alpha) cell, writes the raw and
// aggregate tables next to `output`, and dumps generated tours alongside for
// replay. Per-row failures land in the error column instead of aborting.
ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace pwt

#endif  // PWT_HARNESS_HPP
