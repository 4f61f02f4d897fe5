/*
 * C interface to the nonlocal traffic-flow library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an nlf_status; on
 * failure nlf_last_error() describes the problem. The message buffer is
 * thread-local and valid until the next failing call on the same thread.
 *
 * Handles are not synchronised: distinct handles may be used from different
 * threads concurrently, a single handle may only be read concurrently.
 */
#ifndef NLF_NLF_H
#define NLF_NLF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(NLF_BUILDING_LIBRARY)
#    define NLF_API __declspec(dllexport)
#  else
#    define NLF_API __declspec(dllimport)
#  endif
#else
#  define NLF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nlf_status {
    NLF_OK = 0,
    NLF_ERR_PARSE = 1,      /* config text is not valid JSON */
    NLF_ERR_CONFIG = 2,     /* config or parameters violate a constraint */
    NLF_ERR_DIVERGED = 3,   /* non-finite state during a simulation */
    NLF_ERR_ANALYSIS = 4,   /* diagnostic undefined for the data */
    NLF_ERR_USAGE = 5,      /* bad handle, index or argument combination */
    NLF_ERR_IO = 6,         /* file could not be read */
    NLF_ERR_INTERNAL = 7
} nlf_status;

typedef enum nlf_boundary { NLF_BOUNDARY_PERIODIC = 0, NLF_BOUNDARY_CONSTANT_EXTENSION = 1 } nlf_boundary;

typedef enum nlf_threshold_kind {
    NLF_THRESHOLD_CONST_AB = 0,
    NLF_THRESHOLD_LIN_AB = 1,
    NLF_THRESHOLD_CONST_A = 2
} nlf_threshold_kind;

typedef enum nlf_verdict { NLF_VERDICT_BLOWUP_GUARANTEED = 0, NLF_VERDICT_INCONCLUSIVE = 1 } nlf_verdict;

typedef enum nlf_front_side { NLF_FRONT_LEADING = 0, NLF_FRONT_TRAILING = 1 } nlf_front_side;

typedef enum nlf_shock_class {
    NLF_SHOCK_SUSPECTED = 0,
    NLF_SHOCK_SMOOTH = 1,
    NLF_SHOCK_INDETERMINATE = 2
} nlf_shock_class;

typedef struct nlf_config nlf_config;
typedef struct nlf_result nlf_result;
typedef struct nlf_study nlf_study;

typedef struct nlf_grid_info {
    double x_min;
    double x_max;
    double dx;
    size_t n;
    nlf_boundary boundary;
} nlf_grid_info;

typedef struct nlf_snapshot_info {
    double t;
    double mass;
    double u_min;
    double u_max;
    double max_grad;
    size_t n;
} nlf_snapshot_info;

typedef struct nlf_diagnostic {
    uint64_t step;
    double t;
    double mass;
    double u_min;
    double u_max;
    double max_grad;
} nlf_diagnostic;

typedef struct nlf_run_stats {
    uint64_t steps_taken;
    double dt_min;
    double dt_max;
} nlf_run_stats;

typedef struct nlf_divergence {
    double t;
    uint64_t step;
    uint64_t node;
} nlf_divergence;

typedef struct nlf_threshold_report {
    nlf_threshold_kind kind;
    double gamma_a;
    double gamma_b; /* NaN for NLF_THRESHOLD_CONST_A */
    double sup_d0;
    double inf_d0;
    double rhs;
    nlf_verdict verdict;
    int hypotheses_met;
    int closed_form_derivative;
} nlf_threshold_report;

typedef struct nlf_study_row {
    double dx;
    double l1_error; /* NaN when no exact solution is available */
    double max_grad;
    nlf_status status;
} nlf_study_row;

NLF_API const char* nlf_version(void);
NLF_API const char* nlf_last_error(void);
NLF_API const char* nlf_status_name(nlf_status status);

/* ---- configuration ---------------------------------------------------- */

NLF_API nlf_status nlf_config_parse(const char* json_text, nlf_config** out);
NLF_API nlf_status nlf_config_load(const char* path, nlf_config** out);
NLF_API nlf_status nlf_config_clone(const nlf_config* config, nlf_config** out);
NLF_API void nlf_config_free(nlf_config* config);

/* Writes the resolved JSON document including the terminating NUL when it
 * fits in `capacity`. Returns the required buffer size (length + 1). */
NLF_API size_t nlf_config_to_json(const nlf_config* config, char* buffer, size_t capacity);

/* Model label such as "lwr" or "look_ab_linear"; same sizing contract. */
NLF_API size_t nlf_config_label(const nlf_config* config, char* buffer, size_t capacity);

NLF_API nlf_status nlf_config_grid(const nlf_config* config, nlf_grid_info* out);
NLF_API nlf_status nlf_config_set_dx(nlf_config* config, double dx);
NLF_API nlf_status nlf_config_set_schedule(nlf_config* config, double t_end,
                                           const double* snapshot_times, size_t count);
/* Nonzero when both configs share grid and scenario. */
NLF_API int nlf_config_same_setup(const nlf_config* a, const nlf_config* b);

/* ---- simulation ------------------------------------------------------- */

NLF_API nlf_status nlf_simulate(const nlf_config* config, nlf_result** out);
/* Details of the most recent NLF_ERR_DIVERGED on this thread. */
NLF_API nlf_status nlf_last_divergence(nlf_divergence* out);

NLF_API void nlf_result_free(nlf_result* result);
NLF_API nlf_status nlf_result_grid(const nlf_result* result, nlf_grid_info* out);
NLF_API nlf_status nlf_result_stats(const nlf_result* result, nlf_run_stats* out);
NLF_API size_t nlf_result_snapshot_count(const nlf_result* result);
/* `values` (optional) receives a pointer owned by the result. */
NLF_API nlf_status nlf_result_snapshot(const nlf_result* result, size_t index,
                                       nlf_snapshot_info* info, const double** values);
NLF_API size_t nlf_result_diagnostic_count(const nlf_result* result);
NLF_API nlf_status nlf_result_diagnostic(const nlf_result* result, size_t index,
                                         nlf_diagnostic* out);

/* ---- blow-up thresholds ----------------------------------------------- */

NLF_API nlf_status nlf_threshold_kind_parse(const char* name, nlf_threshold_kind* out);
NLF_API const char* nlf_threshold_kind_name(nlf_threshold_kind kind);
NLF_API const char* nlf_verdict_name(nlf_verdict verdict);
NLF_API nlf_status nlf_threshold_const_ab(double gamma_a, double gamma_b, double inf_d0,
                                          double* out);
NLF_API nlf_status nlf_threshold_lin_ab(double gamma_a, double gamma_b, double* out);
NLF_API nlf_status nlf_threshold_const_a(double gamma_a, double inf_d0, double* out);
NLF_API nlf_status nlf_threshold_assess(const nlf_config* config, nlf_threshold_kind kind,
                                        nlf_threshold_report* out);

/* ---- analysis --------------------------------------------------------- */

NLF_API nlf_status nlf_front_position(const double* values, size_t n, double x_min, double dx,
                                      double level, nlf_front_side side, double* out);
NLF_API nlf_status nlf_max_gradient(const double* values, size_t n, double dx, double* out);
NLF_API double nlf_riccati_blowup_time(double d0);

/* Refinement study over dx_list (descending). threads == 0 runs sequentially. */
NLF_API nlf_status nlf_study_run(const nlf_config* config, const double* dx_list, size_t count,
                                 double t_probe, unsigned threads, nlf_study** out);
NLF_API void nlf_study_free(nlf_study* study);
NLF_API size_t nlf_study_row_count(const nlf_study* study);
NLF_API nlf_status nlf_study_get_row(const nlf_study* study, size_t index, nlf_study_row* out);
NLF_API nlf_shock_class nlf_study_class(const nlf_study* study);
NLF_API const char* nlf_shock_class_name(nlf_shock_class c);

#ifdef __cplusplus
}
#endif

#endif /* NLF_NLF_H */
