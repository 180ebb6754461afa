// expcurve: command-line driver over the C API.
//
//   expcurve surface-info --poly "z^3"
//   expcurve periods --poly "z^2" --maxpow 3 --tol 1e-10
//   expcurve reduce --q "z^4" --poly "z^3"
//   expcurve recover --random-degree 4 --seed 7
//   expcurve verify --poly1 "z^2" --poly2 "2z^2"
//   expcurve case2 --principal "z^-1" --omega "1/(1-z)"
//
// Exit status: 0 success, 1 input error, 2 numerical/verification failure.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "expcurve/expcurve.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNumeric = 2;

struct Options {
  std::string input;
  std::string poly, poly1, poly2, q, g, h, omega, mult;
  int maxpow = -1;
  int kmax = 3;
  int trunc = 30;
  int random_degree = 0;
  std::uint64_t seed = 1;
  std::optional<double> tol;
  double base_radius = 0.0;
  std::string output;
  bool plot = false;
};

struct PolyDeleter {
  void operator()(expc_poly* p) const { expc_poly_free(p); }
};
struct CurveDeleter {
  void operator()(expc_curve* c) const { expc_curve_free(c); }
};
using PolyPtr = std::unique_ptr<expc_poly, PolyDeleter>;
using CurvePtr = std::unique_ptr<expc_curve, CurveDeleter>;

class Failure {
 public:
  Failure(int code, std::string msg) : code_(code), msg_(std::move(msg)) {}
  int code() const { return code_; }
  const std::string& message() const { return msg_; }

 private:
  int code_;
  std::string msg_;
};

int exit_code_for(expc_status s) {
  switch (s) {
    case EXPC_OK: return kExitOk;
    case EXPC_ERR_TOLERANCE:
    case EXPC_ERR_CONVERGENCE:
    case EXPC_ERR_VERIFICATION: return kExitNumeric;
    default: return kExitInput;
  }
}

void check(expc_status s, const std::string& context) {
  if (s == EXPC_OK) return;
  std::string msg = context + ": " + expc_last_error();
  throw Failure(exit_code_for(s), msg);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(kExitInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PolyPtr parse_poly(const std::string& literal, const char* flag) {
  expc_poly* p = nullptr;
  const expc_status s = expc_poly_parse(literal.c_str(), &p);
  if (s != EXPC_OK) {
    throw Failure(kExitInput, std::string(flag) + ": " + expc_last_error());
  }
  return PolyPtr(p);
}

CurvePtr load_curve(const std::string& path) {
  const std::string text = read_file(path);
  expc_curve* c = nullptr;
  const expc_status s = expc_curve_from_json(text.c_str(), &c);
  if (s != EXPC_OK) {
    std::string msg = path;
    if (expc_last_error_line() > 0)
      msg += ":" + std::to_string(expc_last_error_line()) + ":" + std::to_string(expc_last_error_column());
    throw Failure(kExitInput, msg + ": " + expc_last_error());
  }
  return CurvePtr(c);
}

/// Exponent from --poly, an input curve file, or a seeded random monic polynomial.
PolyPtr exponent_from(const Options& o) {
  if (!o.poly.empty()) return parse_poly(o.poly, "--poly");
  if (!o.input.empty()) {
    CurvePtr c = load_curve(o.input);
    expc_poly* p = nullptr;
    if (expc_curve_exponent(c.get(), &p) != EXPC_OK) throw Failure(kExitInput, o.input + ": " + expc_last_error());
    return PolyPtr(p);
  }
  if (o.random_degree > 0) {
    expc_poly* p = nullptr;
    check(expc_poly_random_monic(o.random_degree, o.seed, &p), "--random-degree");
    return PolyPtr(p);
  }
  throw Failure(kExitInput, "an exponent is required (--poly, an input file, or --random-degree)");
}

double tolerance(const Options& o) {
  const double tol = o.tol.value_or(expc_default_tolerance());
  if (!(tol > 0.0)) throw Failure(kExitInput, "--tol must be positive");
  return tol;
}

void write_output(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw Failure(kExitInput, "cannot write '" + o.output + "'");
  out << text << "\n";
}

void write_plot(const Options& o, const expc_poly* exponent, const std::string& command) {
  if (!o.plot) return;
  char* svg = nullptr;
  check(expc_plot_svg(exponent, o.base_radius, &svg), "--plot");
  std::filesystem::path path = o.output.empty() ? std::filesystem::path("expcurve-" + command + ".svg")
                                                : std::filesystem::path(o.output).replace_extension(".svg");
  std::ofstream out(path, std::ios::binary);
  out << svg;
  expc_string_free(svg);
  if (!out) throw Failure(kExitInput, "cannot write '" + path.string() + "'");
}

/// Writes whatever report came back, then maps the status onto an exit code.
int finish(const Options& o, expc_status s, char* json, const std::string& context) {
  if (json) {
    write_output(o, json);
    expc_string_free(json);
  }
  if (s != EXPC_OK) {
    std::cerr << "expcurve: " << context << ": " << expc_last_error() << "\n";
    return exit_code_for(s);
  }
  return kExitOk;
}

int run_surface_info(const Options& o) {
  CurvePtr curve;
  if (!o.input.empty()) {
    curve = load_curve(o.input);
  } else {
    PolyPtr p = exponent_from(o);
    expc_curve* c = nullptr;
    check(expc_curve_from_poly(p.get(), &c), "surface-info");
    curve.reset(c);
  }
  char* json = nullptr;
  const expc_status s = expc_report_surface_info(curve.get(), o.g.empty() ? nullptr : o.g.c_str(), &json);
  if (o.plot) {
    expc_poly* p = nullptr;
    if (expc_curve_exponent(curve.get(), &p) == EXPC_OK) {
      PolyPtr owned(p);
      if (expc_poly_degree(p) >= 1) write_plot(o, p, "surface-info");
    }
  }
  return finish(o, s, json, "surface-info");
}

int run_periods(const Options& o) {
  PolyPtr p = exponent_from(o);
  char* json = nullptr;
  const expc_status s = expc_report_periods(p.get(), o.maxpow, tolerance(o), o.base_radius, &json);
  write_plot(o, p.get(), "periods");
  return finish(o, s, json, "periods");
}

int run_reduce(const Options& o) {
  if (o.q.empty()) throw Failure(kExitInput, "reduce needs --q");
  PolyPtr p = exponent_from(o);
  PolyPtr q = parse_poly(o.q, "--q");
  char* json = nullptr;
  const expc_status s = expc_report_reduce(q.get(), p.get(), &json);
  return finish(o, s, json, "reduce");
}

int run_recover(const Options& o) {
  PolyPtr p = exponent_from(o);
  char* json = nullptr;
  const expc_status s = expc_report_recover(p.get(), tolerance(o), &json);
  write_plot(o, p.get(), "recover");
  return finish(o, s, json, "recover");
}

int run_verify(const Options& o) {
  PolyPtr p1, p2;
  if (!o.poly1.empty() || !o.poly2.empty()) {
    if (o.poly1.empty() || o.poly2.empty()) throw Failure(kExitInput, "verify needs both --poly1 and --poly2");
    p1 = parse_poly(o.poly1, "--poly1");
    p2 = parse_poly(o.poly2, "--poly2");
  } else {
    p1 = exponent_from(o);
    p2 = exponent_from(o);
  }
  char* json = nullptr;
  const expc_status s = expc_report_verify(p1.get(), p2.get(), tolerance(o), &json);
  write_plot(o, p1.get(), "verify");
  return finish(o, s, json, "verify");
}

int run_case2(const Options& o) {
  if (o.h.empty() || o.omega.empty()) throw Failure(kExitInput, "case2 needs --principal and --omega");
  char* json = nullptr;
  const expc_status s = expc_report_case2(o.h.c_str(), o.omega.c_str(), o.mult.empty() ? nullptr : o.mult.c_str(),
                                          o.kmax, o.trunc, &json);
  return finish(o, s, json, "case2");
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("input", o.input, "Curve-spec JSON file");
  sub->add_option("--output,-o", o.output, "Write the JSON report here instead of standard output");
  sub->add_option("--tol", o.tol, "Absolute period tolerance (default 1e-10 or EXP_PERIODS_TOL)");
  sub->add_option("--seed", o.seed, "Seed for randomly generated exponents");
  sub->add_flag("--plot", o.plot, "Also write an SVG of descent sectors and contours");
}

void add_exponent(CLI::App* sub, Options& o) {
  sub->add_option("--poly", o.poly, "Exponent polynomial literal, e.g. \"z^3 - (0,1)*z\"");
  sub->add_option("--random-degree", o.random_degree, "Use a random monic exponent of this degree (see --seed)");
  sub->add_option("--base-radius", o.base_radius, "Radius of the connecting arc (default: automatic)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Periods, de Rham reduction and Torelli checks for exp-algebraic curves of genus zero"};
  app.require_subcommand(1);
  Options o;

  auto* info = app.add_subcommand("surface-info", "Punctures, ramification points, H1 dimension and basis");
  add_common(info, o);
  add_exponent(info, o);
  info->add_option("--g", o.g, "Rational function whose divisor is reported");

  auto* periods = app.add_subcommand("periods", "Periods of z^j e^P dz over the standard cycle basis");
  add_common(periods, o);
  add_exponent(periods, o);
  periods->add_option("--maxpow", o.maxpow, "Highest power j (default d-1)");

  auto* reduce = app.add_subcommand("reduce", "Reduce Q e^P dz modulo exact forms");
  add_common(reduce, o);
  add_exponent(reduce, o);
  reduce->add_option("--q", o.q, "Form polynomial Q");

  auto* recover = app.add_subcommand("recover", "Period matrix, nondegeneracy and recovered P'");
  add_common(recover, o);
  add_exponent(recover, o);

  auto* verify = app.add_subcommand("verify", "Decide whether two exponents give the same curve");
  add_common(verify, o);
  add_exponent(verify, o);
  verify->add_option("--poly1", o.poly1, "First exponent");
  verify->add_option("--poly2", o.poly2, "Second exponent");

  auto* case2 = app.add_subcommand("case2", "Truncated residues of omega * multiplier * z^k * e^h at 0");
  add_common(case2, o);
  case2->add_option("--principal", o.h, "Principal part at 0, negative powers, e.g. \"z^-1\"");
  case2->add_option("--omega", o.omega, "Rational factor, e.g. \"1/(1-z)\"");
  case2->add_option("--mult", o.mult, "Polynomial multiplier (default 1)");
  case2->add_option("--kmax", o.kmax, "Largest extra power k");
  case2->add_option("--trunc", o.trunc, "Truncation order of the residue series");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*info) return run_surface_info(o);
    if (*periods) return run_periods(o);
    if (*reduce) return run_reduce(o);
    if (*recover) return run_recover(o);
    if (*verify) return run_verify(o);
    if (*case2) return run_case2(o);
  } catch (const Failure& f) {
    std::cerr << "expcurve: " << f.message() << "\n";
    return f.code();
  }
  return kExitInput;
}
