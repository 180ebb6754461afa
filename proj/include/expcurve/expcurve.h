#ifndef EXPCURVE_H
#define EXPCURVE_H

/*
 * C interface to the exp-algebraic curve library.
 *
 * Every function returns an expc_status. On failure the thread-local
 * expc_last_error() holds a message; parse failures also set a 1-based
 * line/column (0 when unknown). Strings returned through char** must be
 * released with expc_string_free. Handles are opaque and owned by the caller.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EXPC_API __declspec(dllexport)
#else
#define EXPC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum expc_status {
  EXPC_OK = 0,
  EXPC_ERR_INVALID_ARGUMENT = 1,
  EXPC_ERR_PARSE = 2,
  EXPC_ERR_DOMAIN = 3,
  /* Result produced but an error estimate exceeds the requested tolerance. */
  EXPC_ERR_TOLERANCE = 4,
  EXPC_ERR_CONVERGENCE = 5,
  /* Result produced but a numerical check (rank, kernel) failed. */
  EXPC_ERR_VERIFICATION = 6,
  EXPC_ERR_INTERNAL = 7
} expc_status;

typedef struct expc_poly expc_poly;
typedef struct expc_curve expc_curve;
typedef struct expc_period_matrix expc_period_matrix;

EXPC_API const char* expc_last_error(void);
EXPC_API size_t expc_last_error_line(void);
EXPC_API size_t expc_last_error_column(void);
EXPC_API const char* expc_status_name(expc_status s);
EXPC_API void expc_string_free(char* s);

/* Default period tolerance, honouring the EXP_PERIODS_TOL environment variable. */
EXPC_API double expc_default_tolerance(void);

/* Polynomials. Coefficients are interleaved (re, im) pairs, lowest power first. */
EXPC_API expc_status expc_poly_parse(const char* literal, expc_poly** out);
EXPC_API expc_status expc_poly_from_coeffs(const double* re_im, size_t count, expc_poly** out);
EXPC_API expc_status expc_poly_random_monic(int degree, uint64_t seed, expc_poly** out);
EXPC_API void expc_poly_free(expc_poly* p);
/* -1 for the zero polynomial. */
EXPC_API int expc_poly_degree(const expc_poly* p);
/* Writes up to capacity pairs into re_im; *count receives the number of coefficients. */
EXPC_API expc_status expc_poly_coeffs(const expc_poly* p, double* re_im, size_t capacity, size_t* count);
EXPC_API expc_status expc_poly_to_string(const expc_poly* p, char** out);

/* Curves. */
EXPC_API expc_status expc_curve_from_json(const char* text, expc_curve** out);
EXPC_API expc_status expc_curve_from_poly(const expc_poly* exponent, expc_curve** out);
EXPC_API void expc_curve_free(expc_curve* c);
EXPC_API expc_status expc_curve_to_json(const expc_curve* c, char** out);
/* Fails with EXPC_ERR_DOMAIN unless the curve has a single puncture at infinity. */
EXPC_API expc_status expc_curve_exponent(const expc_curve* c, expc_poly** out);

/* Integral of form * exp(P) along standard basis cycle `cycle` (0-based). */
EXPC_API expc_status expc_period(const expc_poly* form, const expc_poly* exponent, int cycle, double tol,
                                 double* re, double* im, double* abs_error);
EXPC_API expc_status expc_h1_dimension(const expc_poly* exponent, int* out);
/* Reduced class coefficients (d-1 pairs) of form modulo exact forms. */
EXPC_API expc_status expc_reduce(const expc_poly* form, const expc_poly* exponent, double* re_im, size_t capacity,
                                 size_t* count, double* certificate_residual);

/* Period matrix of the standard basis against z^0 .. z^(d-1). */
EXPC_API expc_status expc_period_matrix_build(const expc_poly* exponent, double tol, expc_period_matrix** out);
EXPC_API void expc_period_matrix_free(expc_period_matrix* m);
EXPC_API expc_status expc_period_matrix_shape(const expc_period_matrix* m, int* rows, int* cols);
EXPC_API expc_status expc_period_matrix_entry(const expc_period_matrix* m, int row, int col, double* re, double* im,
                                              double* abs_error);
EXPC_API expc_status expc_period_matrix_rank(const expc_period_matrix* m, int* rank, double* min_singular_ratio);
/* Recovered P' (monic convention) as a new polynomial. */
EXPC_API expc_status expc_period_matrix_recover(const expc_period_matrix* m, expc_poly** derivative);

/*
 * JSON reports. On EXPC_OK, EXPC_ERR_TOLERANCE and EXPC_ERR_VERIFICATION the
 * report is still written to *out_json; for other statuses *out_json is NULL.
 * maxpow < 0 selects d-1, base_radius <= 0 selects the default radius.
 */
EXPC_API expc_status expc_report_surface_info(const expc_curve* c, const char* g_literal, char** out_json);
EXPC_API expc_status expc_report_periods(const expc_poly* exponent, int maxpow, double tol, double base_radius,
                                         char** out_json);
EXPC_API expc_status expc_report_reduce(const expc_poly* form, const expc_poly* exponent, char** out_json);
EXPC_API expc_status expc_report_recover(const expc_poly* exponent, double tol, char** out_json);
EXPC_API expc_status expc_report_verify(const expc_poly* p1, const expc_poly* p2, double tol, char** out_json);
EXPC_API expc_status expc_report_case2(const char* h_literal, const char* omega_literal, const char* multiplier_literal,
                                       int kmax, int trunc, char** out_json);

EXPC_API expc_status expc_plot_svg(const expc_poly* exponent, double base_radius, char** out_svg);

#ifdef __cplusplus
}
#endif

#endif
