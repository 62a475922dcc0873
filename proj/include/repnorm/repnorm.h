/* C interface of the repnorm library. All functions return a status code;
 * on failure repnorm_last_error() describes the error of the calling thread. */
#ifndef REPNORM_H
#define REPNORM_H

#include <stddef.h>

#if defined(REPNORM_BUILDING_LIBRARY)
#define REPNORM_API __attribute__((visibility("default")))
#else
#define REPNORM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum repnorm_status {
  REPNORM_OK = 0,
  REPNORM_E_DOMAIN = 1,
  REPNORM_E_POLE = 2,
  REPNORM_E_CONVERGENCE = 3,
  REPNORM_E_PRECONDITION = 4,
  REPNORM_E_NORMALIZATION = 5,
  REPNORM_E_SCAN = 6,
  REPNORM_E_FIT = 7,
  REPNORM_E_CONFIG = 8,
  REPNORM_E_IO = 9,
  REPNORM_E_INTERNAL = 10
} repnorm_status;

REPNORM_API const char* repnorm_last_error(void);
REPNORM_API const char* repnorm_status_name(repnorm_status s);

/* Receives output text in chunks. */
typedef void (*repnorm_write_fn)(const char* data, size_t len, void* user);

typedef struct repnorm_rep repnorm_rep;

/* "principal:<sigma>:<lambda>", "complementary:<lambda>", "discrete:<ell>". */
REPNORM_API repnorm_status repnorm_rep_parse(const char* descriptor, repnorm_rep** out);
REPNORM_API void repnorm_rep_free(repnorm_rep* rep);
REPNORM_API repnorm_status repnorm_rep_k_character(const repnorm_rep* rep, double n, long* out);
REPNORM_API repnorm_status repnorm_rep_default_m(const repnorm_rep* rep, double* out);
REPNORM_API int repnorm_rep_unitary(const repnorm_rep* rep);

typedef enum repnorm_coordinate { REPNORM_COORD_X = 0, REPNORM_COORD_T = 1 } repnorm_coordinate;
typedef enum repnorm_coef_method { REPNORM_CLOSED_FORM = 0, REPNORM_ORACLE = 1 } repnorm_coef_method;

typedef struct repnorm_coef {
  double re, im;
  double err_est;
  repnorm_coef_method method;
  const char* route; /* static string naming the hypergeometric route */
} repnorm_coef;

/* <pi(a) f_m, f_n> at the Cartan point given by x in [0,1) or t >= 0. With
 * use_oracle the value is taken from the circle/disc quadrature instead. */
REPNORM_API repnorm_status repnorm_coef_eval(const repnorm_rep* rep, double n, double m, double coord,
                                             repnorm_coordinate kind, int use_oracle, repnorm_coef* out);

typedef struct repnorm_norm_sample {
  double n;
  long kappa;
  double value;
  double x_argmax, t_argmax;
  double err_est;
} repnorm_norm_sample;

REPNORM_API repnorm_status repnorm_pmin_scan(const repnorm_rep* rep, double m, double n,
                                             repnorm_norm_sample* out);

typedef struct repnorm_fit {
  double alpha, beta, amplitude, residual_rms, n_min, n_max;
} repnorm_fit;

REPNORM_API repnorm_status repnorm_fit_exponent(const double* n, const double* values, size_t count, int with_log,
                                                repnorm_fit* out);

/* Runners. Text output goes to the configured output_path when set, else
 * to write. */
REPNORM_API repnorm_status repnorm_norm_scan(const char* config_json, repnorm_write_fn write, void* user);
REPNORM_API repnorm_status repnorm_fit_csv(const char* csv_text, const char* column, int with_log,
                                           repnorm_write_fn write, void* user);
REPNORM_API repnorm_status repnorm_integral_table(const repnorm_rep* rep, double m, const double* ns, size_t count,
                                                  double epsilon, double tol, repnorm_write_fn write, void* user);
/* has_c = 0 omits the numeric bound column. */
REPNORM_API repnorm_status repnorm_constants_table(const char* const* families, size_t count, int has_c, double c,
                                                   double R, repnorm_write_fn write, void* user);

/* Writes the JSON report to output_path (default "acceptance_report.json"),
 * streams one summary line per criterion to progress and sets *all_pass. */
REPNORM_API repnorm_status repnorm_acceptance(const char* config_json, repnorm_write_fn progress, void* user,
                                              int* all_pass);

#ifdef __cplusplus
}
#endif

#endif
