#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "pwt/errors.hpp"
#include "pwt/harness.hpp"
#include "pwt/hyper.hpp"
#include "pwt/model.hpp"
#include "pwt/pack.hpp"
#include "support/fixtures.hpp"

using namespace pwt;
namespace fs = std::filesystem;

namespace {

// Scratch directory under the build tree, fresh per test run.
fs::path work_dir() {
    const fs::path dir = fs::current_path() / "harness_work";
    fs::create_directories(dir);
    return dir;
}

std::string write_toy4(const fs::path& dir) {
    const fs::path path = dir / "toy4.ttp";
    std::ofstream out(path);
    out << pwt::testing::toy4_file_text();
    return path.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("summarize means and sample deviations") {
    const std::vector<double> same{64.0, 64.0, 64.0};
    CHECK(summarize(same) == std::pair<double, double>{64.0, 0.0});
    const std::vector<double> steps{1.0, 2.0, 3.0};
    const auto [mean, sd] = summarize(steps);
    CHECK(mean == doctest::Approx(2.0));
    CHECK(sd == doctest::Approx(1.0));
    const std::vector<double> single{5.0};
    CHECK(summarize(single) == std::pair<double, double>{5.0, 0.0});
    const std::vector<double> empty;
    CHECK_THROWS_AS(summarize(empty), ValidationError);
}

TEST_CASE("experiment config parsing") {
    const char* text =
        "# toy experiment\n"
        "instance = a.ttp\n"
        "instance = b.ttp\n"
        "generate_tours = 5\n"
        "tour_seed = 9\n"
        "heuristic = r1 r3\n"
        "heuristic = HH2\n"
        "chance_heuristic = r1 r7 HH6\n"
        "alpha = 0.9 0.999\n"
        "delta = 20\n"
        "bound = auto\n"
        "iterations = 200\n"
        "mutation_rate = 0.05\n"
        "seed = 4\n"
        "output = out/run\n"
        "format = csv\n";
    const ExperimentConfig config = parse_experiment_config(text);
    CHECK(config.instances == std::vector<std::string>{"a.ttp", "b.ttp"});
    CHECK(config.generate_tours == 5);
    CHECK(config.tour_seed == 9);
    REQUIRE(config.algorithms.size() == 6);
    CHECK(config.algorithms[0].token == "r1");
    CHECK(!config.algorithms[0].chance);
    CHECK(config.algorithms[2].token == "HH2");
    CHECK(config.algorithms[3].chance);
    CHECK(config.algorithms[5].token == "HH6");
    CHECK(config.alphas == std::vector<double>{0.9, 0.999});
    CHECK(config.delta == 20.0);
    CHECK(config.iterations == 200);
    CHECK(config.mutation_rate == 0.05);
}

TEST_CASE("experiment config rejections") {
    CHECK_THROWS_AS(parse_experiment_config("instance a.ttp\n"), ParseError);
    CHECK_THROWS_AS(parse_experiment_config("nonsense = 1\n"), ParseError);
    // r6 is chance-only.
    CHECK_THROWS_AS(parse_experiment_config("instance = a.ttp\nheuristic = r6\n"
                                            "generate_tours = 1\n"),
                    ConfigError);
    // chance heuristics need alphas.
    CHECK_THROWS_AS(parse_experiment_config("instance = a.ttp\nchance_heuristic = r7\n"
                                            "delta = 2\ngenerate_tours = 1\n"),
                    ConfigError);
    // tour files and generated tours are mutually exclusive.
    CHECK_THROWS_AS(parse_experiment_config("instance = a.ttp\nheuristic = r1\n"
                                            "tour_file = t.tour\ngenerate_tours = 3\n"),
                    ConfigError);
    // HH5 under the deterministic key.
    CHECK_THROWS_AS(parse_experiment_config("instance = a.ttp\nheuristic = HH5\n"
                                            "generate_tours = 1\n"),
                    ConfigError);
}

TEST_CASE("toy4 experiment produces the expected tables") {
    const fs::path dir = work_dir();
    const std::string instance_path = write_toy4(dir);
    ExperimentConfig config;
    config.instances = {instance_path};
    config.generate_tours = 3;
    config.tour_seed = 5;
    config.algorithms = {{"r1", false}, {"r3", false}};
    config.seed = 11;
    config.output = (dir / "toy_run").string();
    const ExperimentResult result = run_experiment(config);

    CHECK(result.failures == 0);
    CHECK(result.raw.size() == 6);       // 3 tours x 2 heuristics
    CHECK(result.aggregate.size() == 2);  // r1 and r3

    // Aggregates equal summarize() over the matching raw rows.
    for (const AggRow& agg : result.aggregate) {
        std::vector<double> values;
        for (const RawRow& raw : result.raw)
            if (raw.reward == agg.algorithm) values.push_back(raw.objective);
        const auto [mean, sd] = summarize(values);
        CHECK(agg.runs == 3);
        CHECK(agg.mean_objective == doctest::Approx(mean).epsilon(1e-12));
        CHECK(agg.std_objective == doctest::Approx(sd).epsilon(1e-12));
    }

    // Rows are sorted by (instance, algorithm identity, alpha, tour).
    for (size_t i = 1; i < result.raw.size(); ++i) {
        const RawRow& a = result.raw[i - 1];
        const RawRow& b = result.raw[i];
        CHECK(std::make_tuple(a.instance, a.reward, a.tour_id) <=
              std::make_tuple(b.instance, b.reward, b.tour_id));
    }

    // The CSV headers are pinned.
    const std::string raw_text = slurp(result.raw_path);
    CHECK(lines_of(raw_text)[0] ==
          "instance,tour_id,algorithm,reward,alpha,delta,bound,seed,objective,total_weight,"
          "surrogate_weight,items_packed,evaluations,runtime_ms,error");
    CHECK(lines_of(raw_text).size() == 7);
    const std::string agg_text = slurp(result.agg_path);
    CHECK(lines_of(agg_text)[0] == "instance,algorithm,alpha,runs,mean_objective,std_objective");

    // Generated tours are persisted for replay; replaying a row reproduces
    // its objective.
    for (const RawRow& row : result.raw) {
        const fs::path tour_path =
            fs::path(config.output + "_tours") / ("toy4_t" + std::to_string(row.tour_id) +
                                                  ".tour");
        REQUIRE(fs::exists(tour_path));
        const Instance instance = parse_instance(slurp(instance_path));
        const TourContext ctx = build_context(
            instance, parse_tour(slurp(tour_path.string()), instance.num_cities()));
        const RewardSpec reward{reward_from_name(row.reward), 1.0};
        const PackOutcome replay = pack_static(ctx, reward);
        CHECK(replay.report.objective == doctest::Approx(row.objective).epsilon(1e-9));
    }
}

TEST_CASE("repeating one tour file gives identical rows and zero deviation") {
    const fs::path dir = work_dir();
    const std::string instance_path = write_toy4(dir);
    const fs::path tour_path = dir / "toy4.tour";
    {
        std::ofstream out(tour_path);
        out << "1 2 3 4\n";
    }
    ExperimentConfig config;
    config.instances = {instance_path};
    config.tour_files = {tour_path.string(), tour_path.string(), tour_path.string()};
    config.algorithms = {{"r3", false}};
    config.output = (dir / "repeat_run").string();
    const ExperimentResult result = run_experiment(config);
    REQUIRE(result.aggregate.size() == 1);
    CHECK(result.aggregate[0].runs == 3);
    CHECK(result.aggregate[0].mean_objective == doctest::Approx(64.0).epsilon(1e-12));
    CHECK(result.aggregate[0].std_objective == doctest::Approx(0.0));
}

TEST_CASE("hyper-heuristic cells replay from their recorded seed") {
    const fs::path dir = work_dir();
    const std::string instance_path = write_toy4(dir);
    const fs::path tour_path = dir / "toy4_hh.tour";
    {
        std::ofstream out(tour_path);
        out << "1 2 3 4\n";
    }
    ExperimentConfig config;
    config.instances = {instance_path};
    config.tour_files = {tour_path.string()};
    config.algorithms = {{"HH2", false}};
    config.iterations = 25;
    config.seed = 31;
    config.output = (dir / "hh_run").string();
    const ExperimentResult result = run_experiment(config);
    REQUIRE(result.raw.size() == 1);
    const RawRow& row = result.raw[0];
    CHECK(row.algorithm == "pack_hh");

    HHConfig hh;
    hh.variant = HHVariant::kHH2;
    hh.iterations = 25;
    hh.seed = row.seed;  // the recorded per-cell seed
    const TourContext ctx = pwt::testing::toy4_context();
    CHECK(run_hh(hh, ctx).report.objective == doctest::Approx(row.objective).epsilon(1e-12));
}

TEST_CASE("chance cells fan out over alphas") {
    const fs::path dir = work_dir();
    const std::string instance_path = write_toy4(dir);
    ExperimentConfig config;
    config.instances = {instance_path};
    config.generate_tours = 2;
    config.algorithms = {{"r7", true}};
    config.alphas = {0.9, 0.999};
    config.delta = 2.0;
    config.output = (dir / "chance_run").string();
    const ExperimentResult result = run_experiment(config);
    CHECK(result.raw.size() == 4);       // 2 tours x 2 alphas
    CHECK(result.aggregate.size() == 2);  // one per alpha
    for (const RawRow& row : result.raw) {
        REQUIRE(row.alpha.has_value());
        CHECK(row.algorithm == "pack_sf");
        CHECK((row.bound == "chebyshev" || row.bound == "hoeffding"));
        REQUIRE(row.surrogate_weight.has_value());
        CHECK(*row.surrogate_weight <= 15.0 + 1e-9);
    }
}

TEST_CASE("per-row failures are recorded, not fatal") {
    const fs::path dir = work_dir();
    ExperimentConfig config;
    config.instances = {(dir / "missing.ttp").string()};
    config.generate_tours = 2;
    config.algorithms = {{"r1", false}};
    config.output = (dir / "fail_run").string();
    const ExperimentResult result = run_experiment(config);
    CHECK(result.failures > 0);
    REQUIRE(!result.raw.empty());
    CHECK(!result.raw[0].error.empty());
    CHECK(fs::exists(result.raw_path));
}

TEST_CASE("json output format is well-formed") {
    const fs::path dir = work_dir();
    const std::string instance_path = write_toy4(dir);
    ExperimentConfig config;
    config.instances = {instance_path};
    config.generate_tours = 1;
    config.algorithms = {{"r1", false}};
    config.format = "json";
    config.output = (dir / "json_run").string();
    const ExperimentResult result = run_experiment(config);
    const std::string text = slurp(result.raw_path);
    CHECK(text.find("\"objective\"") != std::string::npos);
    CHECK(result.raw_path.ends_with("_raw.json"));
}
