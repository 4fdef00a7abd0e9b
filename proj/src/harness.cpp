#include "pwt/harness.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "pwt/errors.hpp"
#include "pwt/hyper.hpp"
#include "pwt/model.hpp"
#include "pwt/pack.hpp"
#include "pwt/rng.hpp"

namespace pwt {
namespace {

constexpr const char* kRawHeader =
    "instance,tour_id,algorithm,reward,alpha,delta,bound,seed,objective,total_weight,"
    "surrogate_weight,items_packed,evaluations,runtime_ms,error";
constexpr const char* kAggHeader =
    "instance,algorithm,alpha,runs,mean_objective,std_objective";

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string num(double v, int precision = 17) {
    std::ostringstream os;
    os.precision(precision);
    os << v;
    return os.str();
}

std::string opt_num(const std::optional<double>& v, int precision = 17) {
    return v ? num(*v, precision) : std::string();
}

bool is_hh_token(const std::string& token) {
    return token.size() == 3 && (token[0] == 'H' || token[0] == 'h') &&
           (token[1] == 'H' || token[1] == 'h');
}

void check_token(const AlgorithmToken& algo) {
    if (is_hh_token(algo.token)) {
        const HHVariant v = hh_variant_from_name(algo.token);
        if (hh_requires_chance(v) != algo.chance)
            throw ConfigError("variant " + algo.token + " belongs under the " +
                              (hh_requires_chance(v) ? "chance_heuristic" : "heuristic") +
                              " key");
        return;
    }
    const RewardKind kind = reward_from_name(algo.token);
    if (algo.chance) {
        if (kind != RewardKind::kR1 && !reward_is_stochastic(kind))
            throw ConfigError("chance-mode rewards are r1, r6 and r7; got " + algo.token);
    } else if (reward_is_stochastic(kind)) {
        throw ConfigError(algo.token + " requires chance mode; list it under chance_heuristic");
    }
}

struct Cell {
    int instance_idx = 0;
    int tour_id = 0;  // 1-based
    AlgorithmToken algo;
    std::optional<double> alpha;
    int repetition = 0;
};

RawRow run_cell(const TourContext& ctx, const std::string& instance_label, const Cell& cell,
                const ExperimentConfig& config, std::uint64_t seed) {
    RawRow row;
    row.instance = instance_label;
    row.tour_id = cell.tour_id;
    row.reward = cell.algo.token;
    row.alpha = cell.alpha;
    row.delta = cell.algo.chance ? config.delta : 0.0;
    row.seed = seed;

    SolveReport report;
    if (is_hh_token(cell.algo.token)) {
        HHConfig hh;
        hh.variant = hh_variant_from_name(cell.algo.token);
        hh.iterations = config.iterations;
        hh.mutation_rate = config.mutation_rate;
        hh.seed = seed;
        if (cell.algo.chance)
            hh.mode = SolveMode::chance_constrained(StochasticSpec::uniform(
                ctx.instance, config.delta, *cell.alpha, tail_bound_from_name(config.bound)));
        report = run_hh(hh, ctx).report;
    } else {
        const RewardSpec reward{reward_from_name(cell.algo.token), 1.0};
        PackOptions options;
        options.seed = seed;
        if (cell.algo.chance) {
            const StochasticSpec spec = StochasticSpec::uniform(
                ctx.instance, config.delta, *cell.alpha, tail_bound_from_name(config.bound));
            report = pack_surrogate(ctx, reward, spec, options).report;
        } else if (reward_is_iterative(reward.kind)) {
            report = pack_iterative(ctx, reward, options).report;
        } else {
            report = pack_static(ctx, reward, options).report;
        }
    }

    row.algorithm = report.algorithm;
    row.bound = report.bound.value_or("");
    row.objective = report.objective;
    row.total_weight = report.total_weight;
    row.surrogate_weight = report.surrogate_weight;
    row.items_packed = static_cast<int>(report.items.size());
    row.evaluations = report.evaluations;
    row.runtime_ms = report.runtime_ms;
    return row;
}

void write_raw_csv(const std::string& path, const std::vector<RawRow>& rows) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << kRawHeader << "\n";
    for (const RawRow& r : rows) {
        out << csv_escape(r.instance) << ',' << r.tour_id << ',' << r.algorithm << ','
            << r.reward << ',' << opt_num(r.alpha, 10) << ','
            << (r.alpha ? num(r.delta, 10) : std::string()) << ',' << r.bound << ',' << r.seed
            << ',' << num(r.objective) << ',' << num(r.total_weight) << ','
            << opt_num(r.surrogate_weight) << ',' << r.items_packed << ',' << r.evaluations
            << ',' << num(r.runtime_ms, 6) << ',' << csv_escape(r.error) << "\n";
    }
}

void write_agg_csv(const std::string& path, const std::vector<AggRow>& rows) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << kAggHeader << "\n";
    for (const AggRow& r : rows) {
        out << csv_escape(r.instance) << ',' << r.algorithm << ',' << opt_num(r.alpha, 10)
            << ',' << r.runs << ',' << num(r.mean_objective) << ',' << num(r.std_objective)
            << "\n";
    }
}

nlohmann::json raw_row_json(const RawRow& r) {
    nlohmann::json j;
    j["instance"] = r.instance;
    j["tour_id"] = r.tour_id;
    j["algorithm"] = r.algorithm;
    j["reward"] = r.reward;
    j["alpha"] = r.alpha ? nlohmann::json(*r.alpha) : nlohmann::json(nullptr);
    j["delta"] = r.alpha ? nlohmann::json(r.delta) : nlohmann::json(nullptr);
    j["bound"] = r.bound.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.bound);
    j["seed"] = r.seed;
    j["objective"] = r.objective;
    j["total_weight"] = r.total_weight;
    j["surrogate_weight"] =
        r.surrogate_weight ? nlohmann::json(*r.surrogate_weight) : nlohmann::json(nullptr);
    j["items_packed"] = r.items_packed;
    j["evaluations"] = r.evaluations;
    j["runtime_ms"] = r.runtime_ms;
    j["error"] = r.error;
    return j;
}

void write_raw_json(const std::string& path, const std::vector<RawRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const RawRow& r : rows) arr.push_back(raw_row_json(r));
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << arr.dump(2) << "\n";
}

void write_agg_json(const std::string& path, const std::vector<AggRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const AggRow& r : rows) {
        nlohmann::json j;
        j["instance"] = r.instance;
        j["algorithm"] = r.algorithm;
        j["alpha"] = r.alpha ? nlohmann::json(*r.alpha) : nlohmann::json(nullptr);
        j["runs"] = r.runs;
        j["mean_objective"] = r.mean_objective;
        j["std_objective"] = r.std_objective;
        arr.push_back(j);
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << arr.dump(2) << "\n";
}

}  // namespace

std::pair<double, double> summarize(std::span<const double> values) {
    if (values.empty()) throw ValidationError("summarize needs at least one value");
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(values.size());
    if (values.size() == 1) return {mean, 0.0};
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return {mean, std::sqrt(ss / static_cast<double>(values.size() - 1))};
}

void ExperimentConfig::validate() const {
    if (instances.empty()) throw ConfigError("experiment needs at least one instance");
    if (algorithms.empty()) throw ConfigError("experiment needs at least one heuristic");
    if (tour_files.empty() && generate_tours < 1)
        throw ConfigError("experiment needs tour files or a positive generate_tours count");
    if (repetitions < 1) throw ConfigError("repetitions must be at least 1");
    if (format != "csv" && format != "json")
        throw ConfigError("format must be csv or json, got '" + format + "'");
    tail_bound_from_name(bound);
    bool any_chance = false;
    for (const AlgorithmToken& algo : algorithms) {
        check_token(algo);
        any_chance = any_chance || algo.chance;
    }
    if (any_chance) {
        if (alphas.empty())
            throw ConfigError("chance-mode heuristics need at least one alpha");
        for (double a : alphas)
            if (!(a > 0.0 && a < 1.0))
                throw ConfigError("alpha must lie in (0, 1), got " + std::to_string(a));
        if (delta < 0.0) throw ConfigError("delta must be nonnegative");
    }
}

ExperimentConfig parse_experiment_config(std::string_view text) {
    ExperimentConfig config;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    bool saw_generate = false;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line = trim(line.substr(0, hash));
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("config line " + std::to_string(line_no) +
                             ": expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        auto as_double = [&](const std::string& v) {
            try {
                return std::stod(v);
            } catch (const std::exception&) {
                throw ParseError("config line " + std::to_string(line_no) + ": '" + v +
                                 "' is not a number");
            }
        };
        auto as_int = [&](const std::string& v) {
            try {
                return std::stol(v);
            } catch (const std::exception&) {
                throw ParseError("config line " + std::to_string(line_no) + ": '" + v +
                                 "' is not an integer");
            }
        };
        if (key == "instance") {
            config.instances.push_back(value);
        } else if (key == "tour_file") {
            for (const std::string& tok : split_ws(value)) config.tour_files.push_back(tok);
        } else if (key == "generate_tours") {
            config.generate_tours = static_cast<int>(as_int(value));
            saw_generate = true;
        } else if (key == "tour_seed") {
            config.tour_seed = static_cast<std::uint64_t>(as_int(value));
        } else if (key == "heuristic") {
            for (const std::string& tok : split_ws(value))
                config.algorithms.push_back({tok, false});
        } else if (key == "chance_heuristic") {
            for (const std::string& tok : split_ws(value))
                config.algorithms.push_back({tok, true});
        } else if (key == "alpha") {
            for (const std::string& tok : split_ws(value))
                config.alphas.push_back(as_double(tok));
        } else if (key == "delta") {
            config.delta = as_double(value);
        } else if (key == "bound") {
            config.bound = value;
        } else if (key == "iterations") {
            config.iterations = static_cast<int>(as_int(value));
        } else if (key == "mutation_rate") {
            config.mutation_rate = as_double(value);
        } else if (key == "seed") {
            config.seed = static_cast<std::uint64_t>(as_int(value));
        } else if (key == "repetitions") {
            config.repetitions = static_cast<int>(as_int(value));
        } else if (key == "output") {
            config.output = value;
        } else if (key == "format") {
            config.format = value;
        } else {
            throw ParseError("config line " + std::to_string(line_no) + ": unknown key '" +
                             key + "'");
        }
    }
    if (!config.tour_files.empty() && saw_generate)
        throw ConfigError("give either tour_file or generate_tours, not both");
    config.validate();
    return config;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    config.validate();
    namespace fs = std::filesystem;

    ExperimentResult result;
    const std::string suffix = config.format == "csv" ? ".csv" : ".json";
    result.raw_path = config.output + "_raw" + suffix;
    result.agg_path = config.output + "_agg" + suffix;
    const fs::path parent = fs::path(config.output).parent_path();
    if (!parent.empty()) fs::create_directories(parent);

    std::uint64_t cell_counter = 0;
    for (int i = 0; i < static_cast<int>(config.instances.size()); ++i) {
        const std::string& path = config.instances[i];
        Instance instance;
        std::string label = fs::path(path).stem().string();
        std::vector<TourContext> contexts;
        std::string load_error;
        try {
            std::ifstream in(path);
            if (!in) throw IoError("cannot read instance file " + path);
            std::stringstream buffer;
            buffer << in.rdbuf();
            instance = parse_instance(buffer.str());
            if (!instance.name.empty()) label = instance.name;

            if (!config.tour_files.empty()) {
                for (const std::string& tour_path : config.tour_files) {
                    std::ifstream tin(tour_path);
                    if (!tin) throw IoError("cannot read tour file " + tour_path);
                    std::stringstream tbuf;
                    tbuf << tin.rdbuf();
                    contexts.push_back(build_context(
                        instance, parse_tour(tbuf.str(), instance.num_cities())));
                }
            } else {
                const fs::path tours_dir = config.output + "_tours";
                fs::create_directories(tours_dir);
                for (int t = 1; t <= config.generate_tours; ++t) {
                    std::vector<int> tour =
                        nn_tour(instance, mix_seed(config.tour_seed,
                                                   static_cast<std::uint64_t>(i) * 100000 + t));
                    std::ofstream tout(tours_dir / (label + "_t" + std::to_string(t) + ".tour"));
                    for (size_t k = 0; k < tour.size(); ++k)
                        tout << tour[k] << (k + 1 == tour.size() ? "\n" : " ");
                    contexts.push_back(build_context(instance, std::move(tour)));
                }
            }
        } catch (const std::exception& e) {
            load_error = e.what();
        }

        const int tours = load_error.empty() ? static_cast<int>(contexts.size()) : 1;
        for (int t = 1; t <= tours; ++t) {
            for (const AlgorithmToken& algo : config.algorithms) {
                const std::vector<double> cell_alphas =
                    algo.chance ? config.alphas : std::vector<double>{0.0};
                for (size_t a = 0; a < cell_alphas.size(); ++a) {
                    for (int rep = 0; rep < config.repetitions; ++rep) {
                        const std::uint64_t cell_seed = mix_seed(config.seed, cell_counter++);
                        Cell cell{i, t, algo,
                                  algo.chance ? std::optional<double>(cell_alphas[a])
                                              : std::nullopt,
                                  rep};
                        RawRow row;
                        if (!load_error.empty()) {
                            row.instance = label;
                            row.tour_id = t;
                            row.algorithm = "-";
                            row.reward = algo.token;
                            row.alpha = cell.alpha;
                            row.seed = cell_seed;
                            row.error = load_error;
                        } else {
                            try {
                                row = run_cell(contexts[t - 1], label, cell, config, cell_seed);
                            } catch (const std::exception& e) {
                                row.instance = label;
                                row.tour_id = t;
                                row.algorithm = "-";
                                row.reward = algo.token;
                                row.alpha = cell.alpha;
                                row.seed = cell_seed;
                                row.error = e.what();
                            }
                        }
                        if (!row.error.empty()) ++result.failures;
                        result.raw.push_back(std::move(row));
                    }
                }
            }
        }
    }

    auto key = [](const RawRow& r) {
        return std::make_tuple(r.instance, r.reward, r.alpha.value_or(-1.0), r.tour_id, r.seed);
    };
    std::sort(result.raw.begin(), result.raw.end(),
              [&](const RawRow& a, const RawRow& b) { return key(a) < key(b); });

    // Aggregate over tours (and repetitions) per instance x identity x alpha,
    // mirroring the reward/variant columns of the result tables.
    std::map<std::tuple<std::string, std::string, double>, std::vector<double>> groups;
    for (const RawRow& r : result.raw) {
        if (!r.error.empty()) continue;
        groups[{r.instance, r.reward, r.alpha.value_or(-1.0)}].push_back(r.objective);
    }
    for (const auto& [group_key, objectives] : groups) {
        const auto [mean, std_dev] = summarize(objectives);
        AggRow agg;
        agg.instance = std::get<0>(group_key);
        agg.algorithm = std::get<1>(group_key);
        if (std::get<2>(group_key) >= 0.0) agg.alpha = std::get<2>(group_key);
        agg.runs = static_cast<int>(objectives.size());
        agg.mean_objective = mean;
        agg.std_objective = std_dev;
        result.aggregate.push_back(std::move(agg));
    }

    if (config.format == "csv") {
        write_raw_csv(result.raw_path, result.raw);
        write_agg_csv(result.agg_path, result.aggregate);
    } else {
        write_raw_json(result.raw_path, result.raw);
        write_agg_json(result.agg_path, result.aggregate);
    }
    return result;
}

}  // namespace pwt
