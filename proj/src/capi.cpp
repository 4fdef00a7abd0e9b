#include "pwt.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "pwt/errors.hpp"
#include "pwt/harness.hpp"
#include "pwt/hyper.hpp"
#include "pwt/model.hpp"
#include "pwt/pack.hpp"
#include "pwt/validate.hpp"

struct pwt_instance {
    pwt::Instance value;
};

struct pwt_context {
    pwt::TourContext value;
};

struct pwt_report {
    pwt::SolveReport value;
};

namespace {

thread_local std::string g_last_error;

pwt_status fail(pwt_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

// Runs `fn` and folds any thrown library error into a status code.
template <typename Fn>
pwt_status guarded(Fn&& fn) {
    try {
        fn();
        return PWT_OK;
    } catch (const pwt::IoError& e) {
        return fail(PWT_ERROR_IO, e.what());
    } catch (const pwt::ParseError& e) {
        return fail(PWT_ERROR_PARSE, e.what());
    } catch (const pwt::ValidationError& e) {
        return fail(PWT_ERROR_VALIDATION, e.what());
    } catch (const pwt::EvalError& e) {
        return fail(PWT_ERROR_EVAL, e.what());
    } catch (const pwt::ScoreError& e) {
        return fail(PWT_ERROR_EVAL, e.what());
    } catch (const pwt::ConfigError& e) {
        return fail(PWT_ERROR_CONFIG, e.what());
    } catch (const std::exception& e) {
        return fail(PWT_ERROR_INTERNAL, e.what());
    } catch (...) {
        return fail(PWT_ERROR_INTERNAL, "unknown error");
    }
}

std::string read_file(const char* path) {
    std::ifstream in(path);
    if (!in) throw pwt::IoError(std::string("cannot read ") + (path ? path : "(null)"));
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

char* copy_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

void require(const void* pointer, const char* what) {
    if (!pointer) throw pwt::ConfigError(std::string(what) + " must not be NULL");
}

pwt::SolveMode mode_from(const pwt_solve_options& options, const pwt::Instance& instance) {
    if (!options.chance) return pwt::SolveMode::deterministic();
    return pwt::SolveMode::chance_constrained(pwt::StochasticSpec::uniform(
        instance, options.delta, options.alpha,
        pwt::tail_bound_from_name(options.bound ? options.bound : "auto")));
}

}  // namespace

extern "C" {

const char* pwt_version(void) { return "1.0.0"; }

const char* pwt_status_name(pwt_status status) {
    switch (status) {
    case PWT_OK: return "ok";
    case PWT_ERROR_IO: return "io_error";
    case PWT_ERROR_PARSE: return "parse_error";
    case PWT_ERROR_VALIDATION: return "validation_error";
    case PWT_ERROR_EVAL: return "evaluation_error";
    case PWT_ERROR_CONFIG: return "config_error";
    case PWT_ERROR_UNSUPPORTED: return "unsupported";
    case PWT_ERROR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* pwt_last_error(void) { return g_last_error.c_str(); }

void pwt_string_free(char* text) { std::free(text); }

pwt_status pwt_instance_from_file(const char* path, pwt_instance** out) {
    return guarded([&] {
        require(out, "out");
        *out = new pwt_instance{pwt::parse_instance(read_file(path))};
    });
}

pwt_status pwt_instance_from_string(const char* text, pwt_instance** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new pwt_instance{pwt::parse_instance(text)};
    });
}

void pwt_instance_free(pwt_instance* instance) { delete instance; }

int pwt_instance_cities(const pwt_instance* instance) {
    return instance ? instance->value.num_cities() : 0;
}

int pwt_instance_items(const pwt_instance* instance) {
    return instance ? instance->value.num_items() : 0;
}

pwt_status pwt_context_create(const pwt_instance* instance, const int* tour, int tour_len,
                              pwt_context** out) {
    return guarded([&] {
        require(instance, "instance");
        require(tour, "tour");
        require(out, "out");
        std::vector<int> cities(tour, tour + tour_len);
        *out = new pwt_context{pwt::build_context(instance->value, std::move(cities))};
    });
}

pwt_status pwt_context_from_tour_file(const pwt_instance* instance, const char* path,
                                      pwt_context** out) {
    return guarded([&] {
        require(instance, "instance");
        require(out, "out");
        std::vector<int> tour =
            pwt::parse_tour(read_file(path), instance->value.num_cities());
        *out = new pwt_context{pwt::build_context(instance->value, std::move(tour))};
    });
}

pwt_status pwt_context_from_generated_tour(const pwt_instance* instance, uint64_t seed,
                                           pwt_context** out) {
    return guarded([&] {
        require(instance, "instance");
        require(out, "out");
        std::vector<int> tour = pwt::nn_tour(instance->value, seed);
        *out = new pwt_context{pwt::build_context(instance->value, std::move(tour))};
    });
}

void pwt_context_free(pwt_context* context) { delete context; }

pwt_status pwt_context_tour_string(const pwt_context* context, char** out) {
    return guarded([&] {
        require(context, "context");
        require(out, "out");
        std::ostringstream os;
        const std::vector<int>& tour = context->value.tour;
        for (size_t k = 0; k < tour.size(); ++k) os << tour[k] << (k + 1 == tour.size() ? "" : " ");
        *out = copy_string(os.str());
    });
}

void pwt_solve_options_init(pwt_solve_options* options) {
    if (!options) return;
    options->heuristic = "r1";
    options->gamma = 1.0;
    options->chance = 0;
    options->alpha = 0.0;
    options->delta = 0.0;
    options->bound = "auto";
    options->ascending = 0;
    options->trace = 0;
    options->seed = 0;
}

pwt_status pwt_solve(const pwt_context* context, const pwt_solve_options* options,
                     pwt_report** out) {
    return guarded([&] {
        require(context, "context");
        require(options, "options");
        require(out, "out");
        const pwt::RewardKind kind =
            pwt::reward_from_name(options->heuristic ? options->heuristic : "");
        const pwt::RewardSpec reward{kind, options->gamma};
        pwt::PackOptions pack_options;
        pack_options.ascending = options->ascending != 0;
        pack_options.record_trace = options->trace != 0;
        pack_options.seed = options->seed;

        pwt::PackOutcome outcome = [&] {
            if (options->chance) {
                if (kind != pwt::RewardKind::kR1 && !pwt::reward_is_stochastic(kind))
                    throw pwt::ConfigError(std::string(pwt::reward_name(kind)) +
                                           " cannot run under chance constraints; use r1, r6 "
                                           "or r7");
                const pwt::SolveMode mode = mode_from(*options, context->value.instance);
                return pwt::pack_surrogate(context->value, reward, mode.spec, pack_options);
            }
            if (pwt::reward_is_stochastic(kind))
                throw pwt::ConfigError(std::string(pwt::reward_name(kind)) +
                                       " requires chance mode (--chance)");
            if (pwt::reward_is_iterative(kind))
                return pwt::pack_iterative(context->value, reward, pack_options);
            return pwt::pack_static(context->value, reward, pack_options);
        }();
        *out = new pwt_report{std::move(outcome.report)};
    });
}

pwt_status pwt_oracle(const pwt_context* context, const pwt_solve_options* options,
                      pwt_report** out) {
    if (context && context->value.num_items() > pwt::kOracleItemCap)
        return fail(PWT_ERROR_UNSUPPORTED,
                    "brute force caps at " + std::to_string(pwt::kOracleItemCap) +
                        " items; instance has " + std::to_string(context->value.num_items()));
    return guarded([&] {
        require(context, "context");
        require(options, "options");
        require(out, "out");
        const pwt::SolveMode mode = mode_from(*options, context->value.instance);
        pwt::OracleOutcome outcome = pwt::brute_force_optimal(context->value, mode);
        outcome.report.seed = options->seed;
        *out = new pwt_report{std::move(outcome.report)};
    });
}

void pwt_hh_options_init(pwt_hh_options* options) {
    if (!options) return;
    options->variant = "HH1";
    options->iterations = 1000;
    options->mutation_rate = 0.1;
    options->seed = 0;
    options->alpha = 0.0;
    options->delta = 0.0;
    options->bound = "auto";
}

pwt_status pwt_run_hh(const pwt_context* context, const pwt_hh_options* options,
                      pwt_report** out) {
    return guarded([&] {
        require(context, "context");
        require(options, "options");
        require(out, "out");
        pwt::HHConfig config;
        config.variant = pwt::hh_variant_from_name(options->variant ? options->variant : "");
        config.iterations = options->iterations;
        config.mutation_rate = options->mutation_rate;
        config.seed = options->seed;
        if (pwt::hh_requires_chance(config.variant)) {
            config.mode = pwt::SolveMode::chance_constrained(pwt::StochasticSpec::uniform(
                context->value.instance, options->delta, options->alpha,
                pwt::tail_bound_from_name(options->bound ? options->bound : "auto")));
        }
        pwt::HHOutcome outcome = pwt::run_hh(config, context->value);
        *out = new pwt_report{std::move(outcome.report)};
    });
}

double pwt_report_objective(const pwt_report* report) {
    return report ? report->value.objective : 0.0;
}

pwt_status pwt_report_to_json(const pwt_report* report, int indent, char** out) {
    return guarded([&] {
        require(report, "report");
        require(out, "out");
        *out = copy_string(report->value.to_json(indent));
    });
}

void pwt_report_free(pwt_report* report) { delete report; }

pwt_status pwt_validate_plan(const pwt_instance* instance, const char* plan_json, double alpha,
                             double delta, long long samples, uint64_t seed, char** out_json) {
    return guarded([&] {
        require(instance, "instance");
        require(plan_json, "plan_json");
        require(out_json, "out_json");
        const pwt::StochasticSpec spec =
            pwt::StochasticSpec::uniform(instance->value, delta, alpha);
        const pwt::PackingPlan plan =
            pwt::plan_from_json(plan_json, instance->value, &spec);
        const pwt::ViolationEstimate estimate = pwt::monte_carlo_violation(
            plan, spec, instance->value.capacity, samples, seed);
        const double threshold = (1.0 - alpha) + 3.0 * estimate.std_error;
        nlohmann::json j;
        j["rate"] = estimate.rate;
        j["std_error"] = estimate.std_error;
        j["samples"] = estimate.samples;
        j["alpha"] = alpha;
        j["delta"] = delta;
        j["threshold"] = threshold;
        j["pass"] = estimate.rate <= threshold;
        j["capacity"] = instance->value.capacity;
        j["selected"] = plan.selected_ids();
        *out_json = copy_string(j.dump());
    });
}

pwt_status pwt_run_experiment_string(const char* config_text, char** out_summary_json) {
    return guarded([&] {
        require(config_text, "config_text");
        require(out_summary_json, "out_summary_json");
        const pwt::ExperimentConfig config = pwt::parse_experiment_config(config_text);
        const pwt::ExperimentResult result = pwt::run_experiment(config);
        nlohmann::json j;
        j["raw_path"] = result.raw_path;
        j["agg_path"] = result.agg_path;
        j["rows"] = result.raw.size();
        j["aggregate_rows"] = result.aggregate.size();
        j["failures"] = result.failures;
        *out_summary_json = copy_string(j.dump());
    });
}

pwt_status pwt_run_experiment_file(const char* config_path, char** out_summary_json) {
    std::string text;
    const pwt_status status = guarded([&] { text = read_file(config_path); });
    if (status != PWT_OK) return status;
    return pwt_run_experiment_string(text.c_str(), out_summary_json);
}

}  // extern "C"
