/* C interface to the piilab core. Strings returned through char** are owned
 * by the caller and released with piilab_string_free. Rationals cross the
 * boundary as "p/q" strings. */
#ifndef PIILAB_PIILAB_H
#define PIILAB_PIILAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PIILAB_API __declspec(dllexport)
#else
#define PIILAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum piilab_status {
    PIILAB_OK = 0,
    PIILAB_ERR_INVALID_ARGUMENT = 1,
    PIILAB_ERR_DIVISION_BY_ZERO = 2,
    PIILAB_ERR_ZERO_DENOMINATOR = 3,
    PIILAB_ERR_NOT_POLYNOMIAL = 4,
    PIILAB_ERR_UNKNOWN_VARIABLE = 5,
    PIILAB_ERR_PARSE = 6,
    PIILAB_ERR_NOT_IN_LATTICE = 7,
    PIILAB_ERR_DEGENERATE = 8,
    PIILAB_ERR_NOT_ISOMETRY = 9,
    PIILAB_ERR_NOT_SQUAREFREE = 10,
    PIILAB_ERR_REGIME_SPLIT = 11,
    PIILAB_ERR_DENOMINATOR_VANISHES = 12,
    PIILAB_ERR_STEP_FAILURE = 13,
    PIILAB_ERR_NO_CHART = 14,
    PIILAB_ERR_INTERNAL = 15,
    PIILAB_ERR_NULL = 100
} piilab_status;

typedef enum piilab_check_status {
    PIILAB_CHECK_PASS = 0,
    PIILAB_CHECK_FAIL = 1,
    PIILAB_CHECK_KNOWN_DISCREPANCY = 2
} piilab_check_status;

typedef enum piilab_chart { PIILAB_W1 = 0, PIILAB_W3 = 1, PIILAB_W12 = 2 } piilab_chart;

typedef struct piilab_report piilab_report;
typedef struct piilab_trajectory piilab_trajectory;

/* Message of the last failed call on this thread. */
PIILAB_API const char* piilab_last_error(void);
PIILAB_API const char* piilab_status_name(piilab_status s);
PIILAB_API void piilab_string_free(char* s);

/* Suites: "lattice", "backlund", "atlas", "all". */
PIILAB_API piilab_status piilab_verify(const char* suite, piilab_report** out);
PIILAB_API void piilab_report_free(piilab_report* r);
PIILAB_API size_t piilab_report_size(const piilab_report* r);
PIILAB_API size_t piilab_report_count(const piilab_report* r, piilab_check_status s);
/* Borrowed pointers, valid while the report lives. */
PIILAB_API piilab_status piilab_report_check(const piilab_report* r, size_t i, const char** id, const char** paper_ref,
                                             piilab_check_status* status, const char** computed,
                                             const char** expected);
PIILAB_API piilab_status piilab_report_json(const piilab_report* r, char** out);
PIILAB_API piilab_status piilab_report_text(const piilab_report* r, char** out);

/* Regimes: "generic", "c0", "cm1". */
PIILAB_API piilab_status piilab_intersection_csv(const char* regime, char** out);
PIILAB_API piilab_status piilab_discrepancy_json(char** out);
PIILAB_API piilab_status piilab_class_table(const char* regime, char** out);

PIILAB_API piilab_status piilab_gamma_mod(int n, int64_t* a, int64_t* b);
PIILAB_API piilab_status piilab_gamma_full(int n, int64_t coeffs[10]);

/* Coefficients of 2 pi i. */
PIILAB_API piilab_status piilab_periods(const char* c, char** c2_minus_c1, char** c4_minus_c3);

typedef struct piilab_integrator_config {
    double rtol, atol, R, h_max, h0;
    int64_t max_steps;
} piilab_integrator_config;

typedef struct piilab_sample {
    double t;
    piilab_chart chart;
    double y, z;
    int w1_finite; /* q, p valid */
    double q, p;
    int switched;
} piilab_sample;

typedef struct piilab_switch {
    double t;
    piilab_chart from, to;
    double y_before, z_before, y_after, z_after;
} piilab_switch;

PIILAB_API void piilab_integrator_config_default(piilab_integrator_config* cfg);
/* Starts in W1 at (q0, p0); c is a rational string. cfg may be NULL. */
PIILAB_API piilab_status piilab_integrate(const char* c, double t0, double t1, double q0, double p0,
                                          const piilab_integrator_config* cfg, piilab_trajectory** out);
PIILAB_API void piilab_trajectory_free(piilab_trajectory* tr);
PIILAB_API size_t piilab_trajectory_size(const piilab_trajectory* tr);
PIILAB_API piilab_status piilab_trajectory_sample(const piilab_trajectory* tr, size_t i, piilab_sample* out);
PIILAB_API size_t piilab_trajectory_switch_count(const piilab_trajectory* tr);
PIILAB_API piilab_status piilab_trajectory_switch(const piilab_trajectory* tr, size_t i, piilab_switch* out);
PIILAB_API const char* piilab_chart_name(piilab_chart c);

#ifdef __cplusplus
}
#endif

#endif
