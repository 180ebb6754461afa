/* Exercises the C interface from plain C. */

#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "expcurve/expcurve.h"

static int failures = 0;

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: expectation failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

static void test_poly(void) {
  expc_poly* p = NULL;
  EXPECT(expc_poly_parse("(0,1)*z^3 - 0.5z + 1", &p) == EXPC_OK);
  EXPECT(expc_poly_degree(p) == 3);
  double c[8];
  size_t n = 0;
  EXPECT(expc_poly_coeffs(p, c, 4, &n) == EXPC_OK);
  EXPECT(n == 4);
  EXPECT(c[0] == 1.0 && c[2] == -0.5 && c[7] == 1.0);

  char* s = NULL;
  EXPECT(expc_poly_to_string(p, &s) == EXPC_OK);
  expc_poly* q = NULL;
  EXPECT(expc_poly_parse(s, &q) == EXPC_OK);
  double d[8];
  EXPECT(expc_poly_coeffs(q, d, 4, &n) == EXPC_OK);
  EXPECT(memcmp(c, d, sizeof c) == 0);
  expc_string_free(s);
  expc_poly_free(q);
  expc_poly_free(p);

  EXPECT(expc_poly_parse("z^2 + + 1", &p) == EXPC_ERR_PARSE);
  EXPECT(expc_last_error_column() > 0);
  EXPECT(strlen(expc_last_error()) > 0);
  EXPECT(expc_poly_parse(NULL, &p) == EXPC_ERR_INVALID_ARGUMENT);

  const double zero[2] = {0.0, 0.0};
  EXPECT(expc_poly_from_coeffs(zero, 1, &p) == EXPC_OK);
  EXPECT(expc_poly_degree(p) == -1);
  expc_poly_free(p);

  expc_poly* r1 = NULL;
  expc_poly* r2 = NULL;
  EXPECT(expc_poly_random_monic(4, 42, &r1) == EXPC_OK);
  EXPECT(expc_poly_random_monic(4, 42, &r2) == EXPC_OK);
  double a[10], b[10];
  EXPECT(expc_poly_coeffs(r1, a, 5, &n) == EXPC_OK);
  EXPECT(expc_poly_coeffs(r2, b, 5, &n) == EXPC_OK);
  EXPECT(memcmp(a, b, sizeof a) == 0);
  EXPECT(a[8] == 1.0 && a[9] == 0.0);
  expc_poly_free(r1);
  expc_poly_free(r2);
}

static void test_periods(void) {
  expc_poly* P = NULL;
  expc_poly* one = NULL;
  EXPECT(expc_poly_parse("z^2", &P) == EXPC_OK);
  EXPECT(expc_poly_parse("1", &one) == EXPC_OK);
  double re = 0, im = 0, err = 0;
  EXPECT(expc_period(one, P, 0, 1e-12, &re, &im, &err) == EXPC_OK);
  EXPECT(fabs(re) < 1e-12 && fabs(im - sqrt(acos(-1.0))) < 1e-11);
  EXPECT(err <= 1e-12);
  EXPECT(expc_period(one, P, 1, 1e-12, &re, &im, &err) == EXPC_ERR_INVALID_ARGUMENT);
  EXPECT(expc_period(one, P, 0, 1e-40, &re, &im, &err) == EXPC_ERR_TOLERANCE);

  int dim = 0;
  EXPECT(expc_h1_dimension(P, &dim) == EXPC_OK && dim == 1);

  expc_poly* Q = NULL;
  EXPECT(expc_poly_parse("z^2", &Q) == EXPC_OK);
  expc_poly* G = NULL;
  EXPECT(expc_poly_parse("-z^2", &G) == EXPC_OK);
  double cls[4];
  size_t n = 0;
  double resid = 1;
  EXPECT(expc_reduce(Q, G, cls, 2, &n, &resid) == EXPC_OK);
  EXPECT(n == 1 && fabs(cls[0] - 0.5) < 1e-15 && resid == 0.0);
  expc_poly_free(G);
  expc_poly_free(Q);
  expc_poly_free(one);
  expc_poly_free(P);
}

static void test_matrix(void) {
  expc_poly* P = NULL;
  EXPECT(expc_poly_parse("z^4 + (0.3,0.1)*z^2 - z", &P) == EXPC_OK);
  expc_period_matrix* m = NULL;
  EXPECT(expc_period_matrix_build(P, 1e-10, &m) == EXPC_OK);
  int rows = 0, cols = 0;
  EXPECT(expc_period_matrix_shape(m, &rows, &cols) == EXPC_OK && rows == 3 && cols == 4);
  double re, im, err;
  EXPECT(expc_period_matrix_entry(m, 2, 3, &re, &im, &err) == EXPC_OK);
  EXPECT(expc_period_matrix_entry(m, 3, 0, &re, &im, &err) == EXPC_ERR_INVALID_ARGUMENT);
  int rank = 0;
  double ratio = 0;
  EXPECT(expc_period_matrix_rank(m, &rank, &ratio) == EXPC_OK && rank == 3 && ratio > 1e-8);
  expc_poly* dp = NULL;
  EXPECT(expc_period_matrix_recover(m, &dp) == EXPC_OK);
  double c[8];
  size_t n = 0;
  EXPECT(expc_poly_coeffs(dp, c, 4, &n) == EXPC_OK && n == 4);
  /* P' = 4z^3 + (0.6,0.2) z - 1 */
  EXPECT(fabs(c[0] + 1.0) < 1e-7 && fabs(c[2] - 0.6) < 1e-7 && fabs(c[3] - 0.2) < 1e-7 && fabs(c[6] - 4.0) < 1e-7);
  expc_poly_free(dp);
  expc_period_matrix_free(m);
  expc_poly_free(P);
}

static void test_curves_and_reports(void) {
  const char* spec = "{\"genus\": 0, \"punctures\": [{\"location\": \"inf\", \"principal_part\": [[0,0],[0,0],[1,0]]}]}";
  expc_curve* c = NULL;
  EXPECT(expc_curve_from_json(spec, &c) == EXPC_OK);
  char* js = NULL;
  EXPECT(expc_curve_to_json(c, &js) == EXPC_OK);
  expc_curve* c2 = NULL;
  EXPECT(expc_curve_from_json(js, &c2) == EXPC_OK);
  expc_string_free(js);
  expc_curve_free(c2);

  char* report = NULL;
  EXPECT(expc_report_surface_info(c, "(z-1)/(z+1)", &report) == EXPC_OK);
  EXPECT(report && strstr(report, "\"h1_dimension\": 2"));
  expc_string_free(report);

  expc_poly* P = NULL;
  EXPECT(expc_curve_exponent(c, &P) == EXPC_OK && expc_poly_degree(P) == 3);
  EXPECT(expc_report_periods(P, -1, 1e-10, 0.0, &report) == EXPC_OK);
  expc_string_free(report);
  EXPECT(expc_report_periods(P, -1, 1e-40, 0.0, &report) == EXPC_ERR_TOLERANCE);
  EXPECT(report != NULL); /* partial report is still produced */
  expc_string_free(report);
  EXPECT(expc_report_recover(P, 1e-10, &report) == EXPC_OK);
  expc_string_free(report);
  expc_poly* P2 = NULL;
  EXPECT(expc_poly_parse("2z^3", &P2) == EXPC_OK);
  EXPECT(expc_report_verify(P, P2, 1e-10, &report) == EXPC_OK);
  EXPECT(report && strstr(report, "\"verdict\": \"different\""));
  expc_string_free(report);
  EXPECT(expc_report_reduce(P2, P, &report) == EXPC_OK);
  expc_string_free(report);
  EXPECT(expc_report_case2("z^-1", "1/(1-z)", NULL, 1, 30, &report) == EXPC_OK);
  expc_string_free(report);
  EXPECT(expc_report_case2("z^+1", "1/(1-z)", NULL, 1, 30, &report) == EXPC_ERR_PARSE);
  EXPECT(report == NULL);

  char* svg = NULL;
  EXPECT(expc_plot_svg(P, 0.0, &svg) == EXPC_OK && strncmp(svg, "<svg", 4) == 0);
  expc_string_free(svg);
  expc_poly_free(P2);
  expc_poly_free(P);
  expc_curve_free(c);

  EXPECT(expc_curve_from_json("{\n  \"genus\": 0,\n  \"punctures\": [,]\n}", &c) == EXPC_ERR_PARSE);
  EXPECT(expc_last_error_line() == 3);
  EXPECT(expc_last_error_column() == 17);

  const char* two = "{\"punctures\": [{\"location\": \"inf\", \"principal_part\": [[1,0]]},"
                    "{\"location\": [0,0], \"principal_part\": [[1,0]]}]}";
  EXPECT(expc_curve_from_json(two, &c) == EXPC_OK);
  EXPECT(expc_curve_exponent(c, &P) == EXPC_ERR_DOMAIN);
  expc_curve_free(c);
}

static void test_status(void) {
  EXPECT(strcmp(expc_status_name(EXPC_OK), "ok") == 0);
  EXPECT(strcmp(expc_status_name(EXPC_ERR_VERIFICATION), "verification_failed") == 0);
  EXPECT(expc_default_tolerance() > 0.0);
}

int main(void) {
  test_poly();
  test_periods();
  test_matrix();
  test_curves_and_reports();
  test_status();
  if (failures) {
    fprintf(stderr, "%d expectation(s) failed\n", failures);
    return 1;
  }
  printf("capi: all checks passed\n");
  return 0;
}
