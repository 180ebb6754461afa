#include "expcurve/expcurve.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <random>
#include <span>
#include <string>

#include "expc/cohomology.hpp"
#include "expc/error.hpp"
#include "expc/families.hpp"
#include "expc/literal.hpp"
#include "expc/quadrature.hpp"
#include "expc/report.hpp"
#include "expc/torelli.hpp"

struct expc_poly {
  expc::PolyC value;
};

struct expc_curve {
  expc::ExpCurveGZ value;
};

struct expc_period_matrix {
  expc::PeriodMatrix value;
};

namespace {

struct LastError {
  std::string message;
  size_t line = 0;
  size_t column = 0;
};

thread_local LastError g_last;

void clear_error() { g_last = {}; }

expc_status set_error(expc_status s, const std::string& msg, size_t line = 0, size_t column = 0) {
  g_last = {msg, line, column};
  return s;
}

expc_status status_of(expc::ErrorCode c) {
  switch (c) {
    case expc::ErrorCode::kInvalidArgument: return EXPC_ERR_INVALID_ARGUMENT;
    case expc::ErrorCode::kParse: return EXPC_ERR_PARSE;
    case expc::ErrorCode::kDomain: return EXPC_ERR_DOMAIN;
    case expc::ErrorCode::kTolerance: return EXPC_ERR_TOLERANCE;
    case expc::ErrorCode::kConvergence: return EXPC_ERR_CONVERGENCE;
    case expc::ErrorCode::kVerification: return EXPC_ERR_VERIFICATION;
  }
  return EXPC_ERR_INTERNAL;
}

template <class F>
expc_status guarded(F&& f) {
  clear_error();
  try {
    return f();
  } catch (const expc::ParseError& e) {
    return set_error(EXPC_ERR_PARSE, e.what(), e.line(), e.column());
  } catch (const expc::Error& e) {
    return set_error(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(EXPC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(EXPC_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(EXPC_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define EXPC_REQUIRE(cond, msg) \
  if (!(cond)) return set_error(EXPC_ERR_INVALID_ARGUMENT, msg)

expc_status write_coeffs(std::span<const expc::cplx> v, double* re_im, size_t capacity, size_t* count) {
  *count = v.size();
  if (re_im) {
    for (size_t i = 0; i < v.size() && i < capacity; ++i) {
      re_im[2 * i] = v[i].real();
      re_im[2 * i + 1] = v[i].imag();
    }
  }
  return EXPC_OK;
}

expc_status emit_report(const expc::Report& rep, char** out_json) {
  *out_json = dup_string(rep.body.dump(2));
  switch (rep.status) {
    case expc::ReportStatus::kOk: return EXPC_OK;
    case expc::ReportStatus::kToleranceNotMet:
      return set_error(EXPC_ERR_TOLERANCE, "some period estimates exceed the requested tolerance");
    case expc::ReportStatus::kVerificationFailed:
      return set_error(EXPC_ERR_VERIFICATION, "numerical verification failed (see report)");
  }
  return EXPC_OK;
}

}  // namespace

extern "C" {

const char* expc_last_error(void) { return g_last.message.c_str(); }
size_t expc_last_error_line(void) { return g_last.line; }
size_t expc_last_error_column(void) { return g_last.column; }

const char* expc_status_name(expc_status s) {
  switch (s) {
    case EXPC_OK: return "ok";
    case EXPC_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case EXPC_ERR_PARSE: return "parse_error";
    case EXPC_ERR_DOMAIN: return "domain_error";
    case EXPC_ERR_TOLERANCE: return "tolerance_not_met";
    case EXPC_ERR_CONVERGENCE: return "convergence_error";
    case EXPC_ERR_VERIFICATION: return "verification_failed";
    case EXPC_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

void expc_string_free(char* s) { std::free(s); }

double expc_default_tolerance(void) {
  if (const char* env = std::getenv("EXP_PERIODS_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0) return v;
  }
  return 1e-10;
}

expc_status expc_poly_parse(const char* literal, expc_poly** out) {
  return guarded([&] {
    EXPC_REQUIRE(literal && out, "expc_poly_parse: null argument");
    *out = new expc_poly{expc::parse_poly(literal)};
    return EXPC_OK;
  });
}

expc_status expc_poly_from_coeffs(const double* re_im, size_t count, expc_poly** out) {
  return guarded([&] {
    EXPC_REQUIRE(out && (re_im || count == 0), "expc_poly_from_coeffs: null argument");
    std::vector<expc::cplx> v(count);
    for (size_t i = 0; i < count; ++i) v[i] = {re_im[2 * i], re_im[2 * i + 1]};
    *out = new expc_poly{expc::PolyC(std::move(v))};
    return EXPC_OK;
  });
}

expc_status expc_poly_random_monic(int degree, uint64_t seed, expc_poly** out) {
  return guarded([&] {
    EXPC_REQUIRE(out && degree >= 1, "expc_poly_random_monic: need degree >= 1");
    std::mt19937_64 rng(seed);
    *out = new expc_poly{expc::random_monic(degree, rng)};
    return EXPC_OK;
  });
}

void expc_poly_free(expc_poly* p) { delete p; }

int expc_poly_degree(const expc_poly* p) { return p ? p->value.degree().value_or(-1) : -1; }

expc_status expc_poly_coeffs(const expc_poly* p, double* re_im, size_t capacity, size_t* count) {
  return guarded([&] {
    EXPC_REQUIRE(p && count, "expc_poly_coeffs: null argument");
    return write_coeffs(p->value.coeffs(), re_im, capacity, count);
  });
}

expc_status expc_poly_to_string(const expc_poly* p, char** out) {
  return guarded([&] {
    EXPC_REQUIRE(p && out, "expc_poly_to_string: null argument");
    *out = dup_string(expc::format_poly(p->value));
    return EXPC_OK;
  });
}

expc_status expc_curve_from_json(const char* text, expc_curve** out) {
  return guarded([&] {
    EXPC_REQUIRE(text && out, "expc_curve_from_json: null argument");
    *out = new expc_curve{expc::curve_from_json(text)};
    return EXPC_OK;
  });
}

expc_status expc_curve_from_poly(const expc_poly* exponent, expc_curve** out) {
  return guarded([&] {
    EXPC_REQUIRE(exponent && out, "expc_curve_from_poly: null argument");
    *out = new expc_curve{expc::ExpCurveGZ::one_puncture(exponent->value)};
    return EXPC_OK;
  });
}

void expc_curve_free(expc_curve* c) { delete c; }

expc_status expc_curve_to_json(const expc_curve* c, char** out) {
  return guarded([&] {
    EXPC_REQUIRE(c && out, "expc_curve_to_json: null argument");
    *out = dup_string(expc::curve_to_json(c->value).dump(2));
    return EXPC_OK;
  });
}

expc_status expc_curve_exponent(const expc_curve* c, expc_poly** out) {
  return guarded([&] {
    EXPC_REQUIRE(c && out, "expc_curve_exponent: null argument");
    const auto p = c->value.exponent_polynomial();
    if (!p) return set_error(EXPC_ERR_DOMAIN, "curve is not a single puncture at infinity");
    *out = new expc_poly{*p};
    return EXPC_OK;
  });
}

expc_status expc_period(const expc_poly* form, const expc_poly* exponent, int cycle, double tol, double* re,
                        double* im, double* abs_error) {
  return guarded([&] {
    EXPC_REQUIRE(form && exponent && re && im, "expc_period: null argument");
    EXPC_REQUIRE(tol > 0.0, "expc_period: tol must be positive");
    const auto basis = expc::standard_basis(exponent->value);
    EXPC_REQUIRE(cycle >= 0 && static_cast<size_t>(cycle) < basis.cycles.size(), "expc_period: cycle out of range");
    const auto pv = expc::period(form->value, exponent->value, basis.cycles[static_cast<size_t>(cycle)], tol);
    *re = pv.value.real();
    *im = pv.value.imag();
    if (abs_error) *abs_error = pv.abs_error_estimate;
    if (!pv.converged) return set_error(EXPC_ERR_TOLERANCE, "period error estimate exceeds tol");
    return EXPC_OK;
  });
}

expc_status expc_h1_dimension(const expc_poly* exponent, int* out) {
  return guarded([&] {
    EXPC_REQUIRE(exponent && out, "expc_h1_dimension: null argument");
    *out = expc::h1_dimension(exponent->value);
    return EXPC_OK;
  });
}

expc_status expc_reduce(const expc_poly* form, const expc_poly* exponent, double* re_im, size_t capacity,
                        size_t* count, double* certificate_residual) {
  return guarded([&] {
    EXPC_REQUIRE(form && exponent && count, "expc_reduce: null argument");
    const auto red = expc::reduce(form->value, exponent->value);
    if (certificate_residual) *certificate_residual = red.certificate.residual;
    return write_coeffs(red.cls.coeffs, re_im, capacity, count);
  });
}

expc_status expc_period_matrix_build(const expc_poly* exponent, double tol, expc_period_matrix** out) {
  return guarded([&] {
    EXPC_REQUIRE(exponent && out, "expc_period_matrix_build: null argument");
    EXPC_REQUIRE(tol > 0.0, "expc_period_matrix_build: tol must be positive");
    *out = new expc_period_matrix{expc::build_period_matrix(exponent->value, tol)};
    if (!(*out)->value.converged()) return set_error(EXPC_ERR_TOLERANCE, "period matrix error exceeds tol");
    return EXPC_OK;
  });
}

void expc_period_matrix_free(expc_period_matrix* m) { delete m; }

expc_status expc_period_matrix_shape(const expc_period_matrix* m, int* rows, int* cols) {
  return guarded([&] {
    EXPC_REQUIRE(m && rows && cols, "expc_period_matrix_shape: null argument");
    *rows = m->value.rows();
    *cols = m->value.cols();
    return EXPC_OK;
  });
}

expc_status expc_period_matrix_entry(const expc_period_matrix* m, int row, int col, double* re, double* im,
                                     double* abs_error) {
  return guarded([&] {
    EXPC_REQUIRE(m && re && im, "expc_period_matrix_entry: null argument");
    EXPC_REQUIRE(row >= 0 && row < m->value.rows() && col >= 0 && col < m->value.cols(),
                 "expc_period_matrix_entry: index out of range");
    const auto v = m->value.entry(row, col);
    *re = v.real();
    *im = v.imag();
    if (abs_error) *abs_error = m->value.error(row, col);
    return EXPC_OK;
  });
}

expc_status expc_period_matrix_rank(const expc_period_matrix* m, int* rank, double* min_singular_ratio) {
  return guarded([&] {
    EXPC_REQUIRE(m && rank, "expc_period_matrix_rank: null argument");
    const auto rep = expc::verify_nondegeneracy(m->value);
    *rank = rep.rank;
    if (min_singular_ratio) *min_singular_ratio = rep.min_sv_ratio;
    if (!rep.ok) return set_error(EXPC_ERR_VERIFICATION, "period matrix is numerically degenerate");
    return EXPC_OK;
  });
}

expc_status expc_period_matrix_recover(const expc_period_matrix* m, expc_poly** derivative) {
  return guarded([&] {
    EXPC_REQUIRE(m && derivative, "expc_period_matrix_recover: null argument");
    *derivative = new expc_poly{expc::recover_derivative(m->value).recovered_derivative};
    return EXPC_OK;
  });
}

expc_status expc_report_surface_info(const expc_curve* c, const char* g_literal, char** out_json) {
  return guarded([&] {
    EXPC_REQUIRE(c && out_json, "expc_report_surface_info: null argument");
    *out_json = nullptr;
    std::optional<expc::RationalC> g;
    if (g_literal && *g_literal) g = expc::parse_rational(g_literal);
    return emit_report(expc::surface_info_report(c->value, g), out_json);
  });
}

expc_status expc_report_periods(const expc_poly* exponent, int maxpow, double tol, double base_radius,
                                char** out_json) {
  return guarded([&] {
    EXPC_REQUIRE(exponent && out_json, "expc_report_periods: null argument");
    EXPC_REQUIRE(tol > 0.0, "expc_report_periods: tol must be positive");
    *out_json = nullptr;
    return emit_report(expc::periods_report(exponent->value, maxpow, tol, base_radius), out_json);
  });
}

expc_status expc_report_reduce(const expc_poly* form, const expc_poly* exponent, char** out_json) {
  return guarded([&] {
    EXPC_REQUIRE(form && exponent && out_json, "expc_report_reduce: null argument");
    *out_json = nullptr;
    return emit_report(expc::reduce_report(form->value, exponent->value), out_json);
  });
}

expc_status expc_report_recover(const expc_poly* exponent, double tol, char** out_json) {
  return guarded([&] {
    EXPC_REQUIRE(exponent && out_json, "expc_report_recover: null argument");
    EXPC_REQUIRE(tol > 0.0, "expc_report_recover: tol must be positive");
    *out_json = nullptr;
    return emit_report(expc::recover_report(exponent->value, tol), out_json);
  });
}

expc_status expc_report_verify(const expc_poly* p1, const expc_poly* p2, double tol, char** out_json) {
  return guarded([&] {
    EXPC_REQUIRE(p1 && p2 && out_json, "expc_report_verify: null argument");
    EXPC_REQUIRE(tol > 0.0, "expc_report_verify: tol must be positive");
    *out_json = nullptr;
    return emit_report(expc::verify_report(p1->value, p2->value, tol), out_json);
  });
}

expc_status expc_report_case2(const char* h_literal, const char* omega_literal, const char* multiplier_literal,
                              int kmax, int trunc, char** out_json) {
  return guarded([&] {
    EXPC_REQUIRE(h_literal && omega_literal && out_json, "expc_report_case2: null argument");
    *out_json = nullptr;
    const auto h = expc::parse_principal(h_literal);
    const auto omega = expc::parse_rational(omega_literal);
    const auto mult = multiplier_literal && *multiplier_literal ? expc::parse_poly(multiplier_literal)
                                                                : expc::PolyC::constant(1.0);
    return emit_report(expc::case2_report(h, omega, mult, kmax, trunc), out_json);
  });
}

expc_status expc_plot_svg(const expc_poly* exponent, double base_radius, char** out_svg) {
  return guarded([&] {
    EXPC_REQUIRE(exponent && out_svg, "expc_plot_svg: null argument");
    *out_svg = dup_string(expc::contour_svg(exponent->value, base_radius));
    return EXPC_OK;
  });
}

}  // extern "C"
