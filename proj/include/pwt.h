/*
 * pwt — packing-while-travelling solver, C API.
 *
 * All objects are opaque handles created and destroyed through this
 * interface. Functions return PWT_OK or an error code; a human-readable
 * message for the most recent failure on the calling thread is available
 * via pwt_last_error(). Strings returned through char** out-parameters are
 * heap-allocated and must be released with pwt_string_free().
 *
 * Handles are immutable once created: a context may be shared by any number
 * of concurrent solver calls. A context takes its own copy of the instance,
 * so the instance handle may be freed once the contexts are built.
 */
#ifndef PWT_H
#define PWT_H

#include <stdint.h>

#if defined(_WIN32)
#if defined(PWT_BUILD_SHARED)
#define PWT_API __declspec(dllexport)
#else
#define PWT_API __declspec(dllimport)
#endif
#elif defined(__GNUC__)
#define PWT_API __attribute__((visibility("default")))
#else
#define PWT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pwt_status {
    PWT_OK = 0,
    PWT_ERROR_IO = 1,          /* file not readable/writable */
    PWT_ERROR_PARSE = 2,       /* malformed instance/tour/config/plan text */
    PWT_ERROR_VALIDATION = 3,  /* well-formed input violating an invariant */
    PWT_ERROR_EVAL = 4,        /* nonpositive speed during evaluation */
    PWT_ERROR_CONFIG = 5,      /* illegal pairing or option combination */
    PWT_ERROR_UNSUPPORTED = 6, /* out-of-contract request (e.g. oracle cap) */
    PWT_ERROR_INTERNAL = 7
} pwt_status;

typedef struct pwt_instance pwt_instance;
typedef struct pwt_context pwt_context;
typedef struct pwt_report pwt_report;

PWT_API const char* pwt_version(void);
PWT_API const char* pwt_status_name(pwt_status status);

/* Message for the last failure on this thread; valid until the next
 * failing call. Never NULL. */
PWT_API const char* pwt_last_error(void);

PWT_API void pwt_string_free(char* text);

/* ---- instances ---- */

PWT_API pwt_status pwt_instance_from_file(const char* path, pwt_instance** out);
PWT_API pwt_status pwt_instance_from_string(const char* text, pwt_instance** out);
PWT_API void pwt_instance_free(pwt_instance* instance);
PWT_API int pwt_instance_cities(const pwt_instance* instance);
PWT_API int pwt_instance_items(const pwt_instance* instance);

/* ---- tours and solve contexts ---- */

/* tour: 1-based city ids; any rotation of a valid cyclic tour is accepted. */
PWT_API pwt_status pwt_context_create(const pwt_instance* instance, const int* tour,
                                      int tour_len, pwt_context** out);
PWT_API pwt_status pwt_context_from_tour_file(const pwt_instance* instance, const char* path,
                                              pwt_context** out);
/* Seeded nearest-neighbour + 2-opt tour. */
PWT_API pwt_status pwt_context_from_generated_tour(const pwt_instance* instance, uint64_t seed,
                                                   pwt_context** out);
PWT_API void pwt_context_free(pwt_context* context);
/* Tour as whitespace-separated city ids (for persisting generated tours). */
PWT_API pwt_status pwt_context_tour_string(const pwt_context* context, char** out);

/* ---- solving ---- */

typedef struct pwt_solve_options {
    const char* heuristic; /* r1..r7 */
    double gamma;          /* r1 exponent; must be 1.0 for r2..r7 */
    int chance;            /* 0 deterministic, 1 chance-constrained */
    double alpha;          /* chance only, in (0,1) */
    double delta;          /* chance only, >= 0 */
    const char* bound;     /* "auto" | "hoeffding" | "chebyshev" */
    int ascending;         /* literal non-decreasing score order (ablation) */
    int trace;             /* record per-step trace in the report JSON */
    uint64_t seed;         /* recorded in the report */
} pwt_solve_options;

PWT_API void pwt_solve_options_init(pwt_solve_options* options);

/* Picks the matching algorithm: r1-r3 single-pass greedy, r4-r5 rescoring
 * greedy, r1/r6/r7 with chance=1 the surrogate-constrained greedy. Other
 * pairings fail with PWT_ERROR_CONFIG. */
PWT_API pwt_status pwt_solve(const pwt_context* context, const pwt_solve_options* options,
                             pwt_report** out);

/* Exhaustive optimum (instances up to 24 items; PWT_ERROR_UNSUPPORTED
 * beyond). Uses only the chance/alpha/delta/bound fields of options. */
PWT_API pwt_status pwt_oracle(const pwt_context* context, const pwt_solve_options* options,
                              pwt_report** out);

typedef struct pwt_hh_options {
    const char* variant; /* HH1..HH6 */
    int iterations;
    double mutation_rate;
    uint64_t seed;
    double alpha; /* HH5/HH6 */
    double delta;
    const char* bound;
} pwt_hh_options;

PWT_API void pwt_hh_options_init(pwt_hh_options* options);
PWT_API pwt_status pwt_run_hh(const pwt_context* context, const pwt_hh_options* options,
                              pwt_report** out);

/* ---- reports ---- */

PWT_API double pwt_report_objective(const pwt_report* report);
PWT_API pwt_status pwt_report_to_json(const pwt_report* report, int indent, char** out);
PWT_API void pwt_report_free(pwt_report* report);

/* ---- verification ---- */

/* Monte Carlo chance-constraint check of a serialized plan
 * ({"selected":[item ids],...}). Writes a JSON object with the empirical
 * violation rate, its standard error, the (1-alpha)+3*stderr threshold and
 * a pass flag. */
PWT_API pwt_status pwt_validate_plan(const pwt_instance* instance, const char* plan_json,
                                     double alpha, double delta, long long samples,
                                     uint64_t seed, char** out_json);

/* ---- experiment harness ---- */

/* Runs the experiment described by a flat key-value config file and writes
 * the raw/aggregate tables. On success writes a JSON summary (row counts,
 * output paths, failures). Per-row failures are recorded in the tables and
 * reported in the summary, not turned into an error return. */
PWT_API pwt_status pwt_run_experiment_file(const char* config_path, char** out_summary_json);
PWT_API pwt_status pwt_run_experiment_string(const char* config_text, char** out_summary_json);

#ifdef __cplusplus
}
#endif

#endif /* PWT_H */
