// pwt command-line front end. Everything goes through the C API in pwt.h;
// exit codes: 0 success, 1 I/O or data error, 2 usage error.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "pwt.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

int exit_code_for(pwt_status status) {
    switch (status) {
    case PWT_OK:
        return kExitOk;
    case PWT_ERROR_CONFIG:
    case PWT_ERROR_UNSUPPORTED:
        return kExitUsage;
    default:
        return kExitData;
    }
}

int report_failure(pwt_status status) {
    std::fprintf(stderr, "pwt: %s: %s\n", pwt_status_name(status), pwt_last_error());
    return exit_code_for(status);
}

struct InstanceDeleter {
    void operator()(pwt_instance* p) const { pwt_instance_free(p); }
};
struct ContextDeleter {
    void operator()(pwt_context* p) const { pwt_context_free(p); }
};
struct ReportDeleter {
    void operator()(pwt_report* p) const { pwt_report_free(p); }
};
using InstancePtr = std::unique_ptr<pwt_instance, InstanceDeleter>;
using ContextPtr = std::unique_ptr<pwt_context, ContextDeleter>;
using ReportPtr = std::unique_ptr<pwt_report, ReportDeleter>;

// Shared --instance/--tour handling for the solver subcommands.
struct ContextArgs {
    std::string instance_path;
    std::string tour_path;
    std::uint64_t gen_tour_seed = 0;
    CLI::Option* tour_opt = nullptr;
    CLI::Option* gen_opt = nullptr;

    void attach(CLI::App& cmd) {
        cmd.add_option("--instance", instance_path, "TTP benchmark instance file")->required();
        tour_opt = cmd.add_option("--tour", tour_path,
                                  "tour file (index list or TSPLIB TOUR_SECTION)");
        gen_opt = cmd.add_option("--gen-tour", gen_tour_seed,
                                 "generate a nearest-neighbour+2-opt tour with this seed");
        tour_opt->excludes(gen_opt);
    }

    int build(InstancePtr& instance, ContextPtr& context) const {
        if (tour_opt->count() == 0 && gen_opt->count() == 0) {
            std::fprintf(stderr, "pwt: config_error: --tour or --gen-tour is required\n");
            return kExitUsage;
        }
        pwt_instance* raw_instance = nullptr;
        pwt_status status = pwt_instance_from_file(instance_path.c_str(), &raw_instance);
        if (status != PWT_OK) return report_failure(status);
        instance.reset(raw_instance);
        pwt_context* raw_context = nullptr;
        status = gen_opt->count() > 0
                     ? pwt_context_from_generated_tour(raw_instance, gen_tour_seed, &raw_context)
                     : pwt_context_from_tour_file(raw_instance, tour_path.c_str(), &raw_context);
        if (status != PWT_OK) return report_failure(status);
        context.reset(raw_context);
        return kExitOk;
    }
};

int print_report(const pwt_report* report) {
    char* json = nullptr;
    const pwt_status status = pwt_report_to_json(report, 2, &json);
    if (status != PWT_OK) return report_failure(status);
    std::printf("%s\n", json);
    pwt_string_free(json);
    return kExitOk;
}

std::string read_text_file(const std::string& path, bool& ok) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) {
        ok = false;
        return {};
    }
    std::string text;
    char buffer[4096];
    size_t n = 0;
    while ((n = std::fread(buffer, 1, sizeof buffer, f)) > 0) text.append(buffer, n);
    std::fclose(f);
    ok = true;
    return text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"packing-while-travelling solver"};
    app.require_subcommand(1);
    app.set_version_flag("--version", pwt_version());

    // ---- solve ----
    auto* solve = app.add_subcommand("solve", "run the greedy solver matched to a reward");
    ContextArgs solve_ctx;
    solve_ctx.attach(*solve);
    std::string heuristic = "r1";
    double gamma = 1.0;
    bool chance = false;
    double alpha = 0.0;
    double delta = 0.0;
    std::string bound = "auto";
    bool ascending = false;
    bool trace = false;
    std::uint64_t seed = 0;
    solve->add_option("--heuristic", heuristic, "reward function r1..r7")->required();
    auto* gamma_opt = solve->add_option("--gamma", gamma, "r1 exponent (default 1)");
    solve->add_flag("--chance", chance, "chance-constrained run (needs --alpha and --delta)");
    auto* alpha_opt = solve->add_option("--alpha", alpha, "confidence level in (0,1)");
    auto* delta_opt = solve->add_option("--delta", delta, "weight uncertainty half-width");
    solve->add_option("--bound", bound, "auto | hoeffding | chebyshev");
    solve->add_flag("--ascending", ascending, "consider items in ascending score order");
    solve->add_flag("--trace", trace, "record the per-step trace");
    solve->add_option("--seed", seed, "seed recorded in the report");
    solve->callback([&] {
        if (chance && (alpha_opt->count() == 0 || delta_opt->count() == 0))
            throw CLI::RequiredError("--chance needs --alpha and --delta");
        if (!chance && (alpha_opt->count() > 0 || delta_opt->count() > 0))
            throw CLI::ValidationError("--alpha/--delta only apply with --chance");
        if (gamma_opt->count() > 0 && heuristic != "r1")
            throw CLI::ValidationError("--gamma applies to r1 only");
    });

    // ---- hh ----
    auto* hh = app.add_subcommand("hh", "run a selection hyper-heuristic (HH1..HH6)");
    ContextArgs hh_ctx;
    hh_ctx.attach(*hh);
    std::string variant;
    int iters = 1000;
    double mutation = 0.1;
    std::uint64_t hh_seed = 0;
    double hh_alpha = 0.0;
    double hh_delta = 0.0;
    std::string hh_bound = "auto";
    hh->add_option("--variant", variant, "HH1..HH6")->required();
    hh->add_option("--iters", iters, "iteration budget (default 1000)");
    hh->add_option("--mutation", mutation, "per-position flip probability (default 0.1)");
    hh->add_option("--seed", hh_seed, "random seed")->required();
    auto* hh_alpha_opt = hh->add_option("--alpha", hh_alpha, "confidence level (HH5/HH6)");
    auto* hh_delta_opt = hh->add_option("--delta", hh_delta, "weight uncertainty (HH5/HH6)");
    hh->add_option("--bound", hh_bound, "auto | hoeffding | chebyshev");
    hh->callback([&] {
        const bool needs_chance = variant == "HH5" || variant == "HH6" || variant == "hh5" ||
                                  variant == "hh6";
        if (needs_chance && (hh_alpha_opt->count() == 0 || hh_delta_opt->count() == 0))
            throw CLI::RequiredError(variant + " needs --alpha and --delta");
    });

    // ---- oracle ----
    auto* oracle = app.add_subcommand("oracle", "exhaustive optimum (instances up to 24 items)");
    ContextArgs oracle_ctx;
    oracle_ctx.attach(*oracle);
    bool oracle_chance = false;
    double oracle_alpha = 0.0;
    double oracle_delta = 0.0;
    std::string oracle_bound = "auto";
    oracle->add_flag("--chance", oracle_chance, "optimise under the chance constraint");
    auto* oracle_alpha_opt = oracle->add_option("--alpha", oracle_alpha, "confidence level");
    auto* oracle_delta_opt = oracle->add_option("--delta", oracle_delta, "weight uncertainty");
    oracle->add_option("--bound", oracle_bound, "auto | hoeffding | chebyshev");
    oracle->callback([&] {
        if (oracle_chance && (oracle_alpha_opt->count() == 0 || oracle_delta_opt->count() == 0))
            throw CLI::RequiredError("--chance needs --alpha and --delta");
    });

    // ---- validate ----
    auto* validate = app.add_subcommand("validate",
                                        "Monte Carlo chance-constraint check of a plan JSON");
    std::string val_instance;
    std::string plan_path;
    double val_alpha = 0.0;
    double val_delta = 0.0;
    long long samples = 100000;
    std::uint64_t val_seed = 0;
    validate->add_option("--instance", val_instance, "TTP benchmark instance file")->required();
    validate->add_option("--plan", plan_path, "plan JSON file ({\"selected\":[ids],...})")
        ->required();
    validate->add_option("--alpha", val_alpha, "confidence level in (0,1)")->required();
    validate->add_option("--delta", val_delta, "weight uncertainty half-width")->required();
    validate->add_option("--samples", samples, "Monte Carlo samples (default 100000)");
    validate->add_option("--seed", val_seed, "sampling seed");

    // ---- experiment ----
    auto* experiment = app.add_subcommand("experiment", "run a benchmark experiment config");
    std::string config_path;
    experiment->add_option("--config", config_path, "flat key=value experiment config file")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    if (solve->parsed()) {
        InstancePtr instance;
        ContextPtr context;
        if (int rc = solve_ctx.build(instance, context); rc != kExitOk) return rc;
        pwt_solve_options options;
        pwt_solve_options_init(&options);
        options.heuristic = heuristic.c_str();
        options.gamma = gamma;
        options.chance = chance ? 1 : 0;
        options.alpha = alpha;
        options.delta = delta;
        options.bound = bound.c_str();
        options.ascending = ascending ? 1 : 0;
        options.trace = trace ? 1 : 0;
        options.seed = seed;
        pwt_report* raw = nullptr;
        const pwt_status status = pwt_solve(context.get(), &options, &raw);
        if (status != PWT_OK) return report_failure(status);
        ReportPtr report(raw);
        return print_report(report.get());
    }

    if (hh->parsed()) {
        InstancePtr instance;
        ContextPtr context;
        if (int rc = hh_ctx.build(instance, context); rc != kExitOk) return rc;
        pwt_hh_options options;
        pwt_hh_options_init(&options);
        options.variant = variant.c_str();
        options.iterations = iters;
        options.mutation_rate = mutation;
        options.seed = hh_seed;
        options.alpha = hh_alpha;
        options.delta = hh_delta;
        options.bound = hh_bound.c_str();
        pwt_report* raw = nullptr;
        const pwt_status status = pwt_run_hh(context.get(), &options, &raw);
        if (status != PWT_OK) return report_failure(status);
        ReportPtr report(raw);
        return print_report(report.get());
    }

    if (oracle->parsed()) {
        InstancePtr instance;
        ContextPtr context;
        if (int rc = oracle_ctx.build(instance, context); rc != kExitOk) return rc;
        pwt_solve_options options;
        pwt_solve_options_init(&options);
        options.chance = oracle_chance ? 1 : 0;
        options.alpha = oracle_alpha;
        options.delta = oracle_delta;
        options.bound = oracle_bound.c_str();
        pwt_report* raw = nullptr;
        const pwt_status status = pwt_oracle(context.get(), &options, &raw);
        if (status != PWT_OK) return report_failure(status);
        ReportPtr report(raw);
        return print_report(report.get());
    }

    if (validate->parsed()) {
        pwt_instance* raw_instance = nullptr;
        pwt_status status = pwt_instance_from_file(val_instance.c_str(), &raw_instance);
        if (status != PWT_OK) return report_failure(status);
        InstancePtr instance(raw_instance);
        bool ok = false;
        const std::string plan_json = read_text_file(plan_path, ok);
        if (!ok) {
            std::fprintf(stderr, "pwt: io_error: cannot read %s\n", plan_path.c_str());
            return kExitData;
        }
        char* out_json = nullptr;
        status = pwt_validate_plan(instance.get(), plan_json.c_str(), val_alpha, val_delta,
                                   samples, val_seed, &out_json);
        if (status != PWT_OK) return report_failure(status);
        std::printf("%s\n", out_json);
        pwt_string_free(out_json);
        return kExitOk;
    }

    if (experiment->parsed()) {
        char* summary = nullptr;
        const pwt_status status = pwt_run_experiment_file(config_path.c_str(), &summary);
        if (status != PWT_OK) return report_failure(status);
        std::printf("%s\n", summary);
        const bool failed = std::string(summary).find("\"failures\":0") == std::string::npos;
        pwt_string_free(summary);
        return failed ? kExitData : kExitOk;
    }

    return kExitUsage;
}
