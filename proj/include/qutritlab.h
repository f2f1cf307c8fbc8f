/*
 * qutritlab — entanglement dynamics of two-qutrit Jurkowski-family states
 * under a Dzyaloshinskii–Moriya (DM) coupling.
 *
 * C interface of the shared library. All functions are thread-safe; handles
 * are opaque and must be released with the matching destroy/free call.
 * Functions returning qtl_status report QTL_OK on success; on failure
 * qtl_last_error() carries a human-readable message for the calling thread.
 */

#ifndef QUTRITLAB_H
#define QUTRITLAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qtl_status {
    QTL_OK = 0,
    QTL_ERR_SHAPE = 1,   /* structural mismatch (matrix/grid shapes) */
    QTL_ERR_DOMAIN = 2,  /* value precondition violated */
    QTL_ERR_NUMERIC = 3, /* solver failure or unresolved generator */
    QTL_ERR_CONFIG = 4,  /* invalid sweep configuration */
    QTL_ERR_IO = 5,      /* file writing failed */
    QTL_ERR_INVALID = 6  /* null handle or bad argument */
} qtl_status;

typedef enum qtl_case {
    QTL_CASE_CUSTOM = 0,
    QTL_CASE_1 = 1, /* eps1 = eps2 = 1, eps3 sweeps */
    QTL_CASE_2 = 2, /* eps1 = eps2 = eps3 */
    QTL_CASE_3 = 3  /* eps1 = 1, eps2 and eps3 sweep */
} qtl_case;

typedef enum qtl_generator {
    QTL_GEN_AUTO = 0,
    QTL_GEN_GELLMANN = 1,
    QTL_GEN_SPIN1 = 2
} qtl_generator;

typedef enum qtl_format {
    QTL_FORMAT_CSV = 0,
    QTL_FORMAT_JSON = 1
} qtl_format;

typedef enum qtl_classification {
    QTL_CLASS_FREE = 0,
    QTL_CLASS_BOUND = 1,
    QTL_CLASS_UNDETECTED = 2
} qtl_classification;

/* One row of a sweep: scores of the reduced pair state at one lattice
 * point. n1 is the negativity, n2 the CCNR score. */
typedef struct qtl_record {
    double t;
    double d;
    double eps1;
    double eps2;
    double eps3;
    double n1;
    double n2;
    int classification; /* qtl_classification */
} qtl_record;

typedef struct qtl_config qtl_config;
typedef struct qtl_result qtl_result;

/* ----- configuration ----- */

/* Fresh config: custom case, generator auto, environment (1,0,0),
 * t_max 30, t_steps 1001, strengths {0.2}, every eps axis {1}. */
qtl_config* qtl_config_create(void);
void qtl_config_destroy(qtl_config* config);

qtl_status qtl_config_set_case(qtl_config* config, int case_id);
qtl_status qtl_config_set_eps_axis(qtl_config* config, int axis /* 1,2,3 */,
                                   const double* values, size_t count);
qtl_status qtl_config_set_dm_strengths(qtl_config* config, const double* values,
                                       size_t count);
qtl_status qtl_config_set_time_grid(qtl_config* config, double t_max,
                                    size_t t_steps);
qtl_status qtl_config_set_generator(qtl_config* config, int generator);
/* Pure environment amplitudes c0, c1, c2 (real and imaginary parts);
 * |c0|^2+|c1|^2+|c2|^2 must equal 1 within 1e-12. */
qtl_status qtl_config_set_env(qtl_config* config, const double re[3],
                              const double im[3]);

/* ----- running ----- */

/* Evaluate the sweep lattice. On success *out owns the records and summary.
 * Parallelism is capped by the QUTRIT_LAB_THREADS environment variable. */
qtl_status qtl_run_sweep(const qtl_config* config, qtl_result** out);
void qtl_result_destroy(qtl_result* result);

size_t qtl_result_record_count(const qtl_result* result);
qtl_status qtl_result_record(const qtl_result* result, size_t index,
                             qtl_record* out);
/* Generator actually used for the sweep (QTL_GEN_GELLMANN or QTL_GEN_SPIN1). */
int qtl_result_generator(const qtl_result* result);

/* Write the record table to a file (CSV header:
 * t,D,eps1,eps2,eps3,n1,n2,class — 12 significant digits, LF endings). */
qtl_status qtl_result_write(const qtl_result* result, int format,
                            const char* path);
/* Render the table or the human-readable summary into a newly allocated
 * string; release it with qtl_string_free. */
qtl_status qtl_result_render(const qtl_result* result, int format, char** out);
qtl_status qtl_result_render_summary(const qtl_result* result, char** out);

void qtl_string_free(char* str);

/* ----- one-shot evaluation ----- */

/* Scores of the reduced pair state for a single (eps triple, D, t) point.
 * QTL_GEN_AUTO resolves the generator first. Any output pointer may be
 * NULL. */
qtl_status qtl_eval_point(double eps1, double eps2, double eps3, double d,
                          double t, int generator, double* n1, double* n2,
                          int* classification);

/* ----- diagnostics ----- */

/* Message of the most recent failure on this thread; empty string if none. */
const char* qtl_last_error(void);

const char* qtl_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QUTRITLAB_H */
