/*
 * sqz -- squeezed-state toolkit, C interface.
 *
 * Every function returns a status code (SQZ_OK on success) and reports
 * results through out-parameters.  On failure sqz_last_error() returns a
 * human-readable message for the calling thread.  States are opaque
 * handles created by sqz_state_create and released by sqz_state_destroy.
 */

#ifndef SQZ_H
#define SQZ_H

#include <stddef.h>

#if defined(_WIN32)
#define SQZ_API __declspec(dllexport)
#else
#define SQZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sqz_status {
  SQZ_OK = 0,
  SQZ_ERR_DOMAIN = 1,  /* invalid parameter or state domain */
  SQZ_ERR_NUMERIC = 2, /* overflow, non-convergence, pole, truncation */
  SQZ_ERR_IO = 3       /* file system failure */
} sqz_status;

typedef struct sqz_state sqz_state;

SQZ_API const char* sqz_version(void);
SQZ_API const char* sqz_last_error(void);

/*
 * family: glauber | sqvac | oddsq | squeezed | assoc | distorted |
 *         fock:<n> | added:<n>.  n_cut = 0 picks the family-aware
 * automatic cutoff.
 */
SQZ_API int sqz_state_create(const char* family, double alpha_re,
                             double alpha_im, double xi_re, double xi_im,
                             int n_cut, sqz_state** out);
SQZ_API void sqz_state_destroy(sqz_state* state);

SQZ_API int sqz_auto_n_cut(const char* family, double alpha_re, double alpha_im,
                           double xi_re, double xi_im, int* out);

SQZ_API int sqz_state_n_cut(const sqz_state* state, int* out);
SQZ_API int sqz_state_norm_defect(const sqz_state* state, double* out);
/* Interleaved re/im pairs; capacity counts doubles and must be >= 2*(n_cut+1). */
SQZ_API int sqz_state_amplitudes(const sqz_state* state, double* buffer,
                                 size_t capacity);
/* capacity must be >= n_cut + 1. */
SQZ_API int sqz_state_probabilities(const sqz_state* state, double* buffer,
                                    size_t capacity);
SQZ_API int sqz_state_mean_photon(const sqz_state* state, double* out);
SQZ_API int sqz_state_quadrature_stats(const sqz_state* state, int distorted,
                                       double* var_x, double* var_p,
                                       double* cov_xp);
SQZ_API int sqz_state_eigen_residual(const sqz_state* state, double alpha_re,
                                     double alpha_im, double xi_re,
                                     double xi_im, int distorted, double* out);
/* Plain-text amplitude rows with an n_cut / norm-defect header line. */
SQZ_API int sqz_state_write(const sqz_state* state, const char* path);

/* tau = |1-xi|/|1+xi| with regime 'a' (tau = 1), 'b' (< 1) or 'c' (> 1). */
SQZ_API int sqz_tau(double xi_re, double xi_im, double* tau, char* regime);

/* sign '+' or '-' selects the polynomial family; recurrence evaluation. */
SQZ_API int sqz_poly(char sign, int n, double alpha_re, double alpha_im,
                     double xi_re, double xi_im, double* out_re,
                     double* out_im);
/* Closed-form validator route (Hermite form for '+', hypergeometric for '-');
 * requires xi != 0. */
SQZ_API int sqz_poly_closed(char sign, int n, double alpha_re, double alpha_im,
                            double xi_re, double xi_im, double* out_re,
                            double* out_im);

SQZ_API int sqz_mean_photon_plus_closed(double alpha_re, double alpha_im,
                                        double xi_re, double xi_im,
                                        double* out);
SQZ_API int sqz_mean_photon_minus_alpha0(double xi_re, double xi_im,
                                         double* out);
SQZ_API int sqz_mean_photon_minus_xi0(double alpha_re, double alpha_im,
                                      double* out);

SQZ_API int sqz_wigner_point(const sqz_state* state, double z_re, double z_im,
                             double* out);
/* Row-major values with the imaginary axis outer; capacity counts doubles
 * and must be >= re_steps * im_steps. */
SQZ_API int sqz_wigner_grid(const sqz_state* state, double re_min,
                            double re_max, int re_steps, double im_min,
                            double im_max, int im_steps, double* values,
                            size_t capacity);

SQZ_API int sqz_trace_distance(const sqz_state* a, const sqz_state* b,
                               double* out);
SQZ_API int sqz_trace_distance_oracle(const sqz_state* a, const sqz_state* b,
                                      double* out);
SQZ_API int sqz_linear_entropy_bs(const sqz_state* state, double* out);

/*
 * Runs the full invariant suite.  profile is "default" or a numeric scale
 * multiplying every bound.  The JSON report is returned through an
 * allocated string (release with sqz_string_free); all_pass is 1 when every
 * invariant holds.
 */
SQZ_API int sqz_verify(const char* profile, char** report_json, int* all_pass);
SQZ_API void sqz_string_free(char* str);

#ifdef __cplusplus
}
#endif

#endif /* SQZ_H */
