// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "expc/algebra.hpp"
#include "expc/cohomology.hpp"
#include "expc/curve.hpp"
#include "expc/families.hpp"
#include "expc/homology.hpp"
#include "expc/quadrature.hpp"
#include "expc/torelli.hpp"

using expc::cplx;
using expc::PolyC;

namespace {

constexpr double kTol = 1e-10;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void run(int id, const char* name, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("[%s] %2d %-28s %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[200];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

/// The 25-member family of random monic exponents, degrees cycling through 2..6.
std::vector<PolyC> monic_family(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PolyC> out;
  for (int i = 0; i < count; ++i) out.push_back(expc::random_monic(2 + i % 5, rng));
  return out;
}

double norm2(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

double time_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  const auto family = monic_family(25, kSeed);
  std::vector<expc::PeriodMatrix> matrices;

  run(1, "gaussian period", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const PolyC P = PolyC::monomial(2);
    const auto basis = expc::standard_basis(P);
    const auto pv = expc::period(PolyC::constant(1.0), P, basis.cycles[0], kTol);
    const double secs = time_since(t0);
    // Real-line oracle: z = i t, trapezoid on [-12, 12] with step 1/20 (spectrally accurate here).
    double real_line = 0.0;
    for (int k = -240; k <= 240; ++k) real_line += std::exp(-(k / 20.0) * (k / 20.0)) / 20.0;
    const double err = std::abs(pv.value - cplx(0.0, real_line));
    return Outcome{err <= 1e-9 && secs < 1.0, fmt("|err| = %.2e (limit 1e-9), quadrature %.3f s", err, secs)};
  });

  run(2, "nondegeneracy", [&] {
    const auto t0 = std::chrono::steady_clock::now();
    int ok = 0;
    double worst_ratio = 1e300;
    for (const auto& P : family) {
      matrices.push_back(expc::build_period_matrix(P, kTol));
      const auto nd = expc::verify_nondegeneracy(matrices.back());
      const int d = *P.degree();
      if (nd.rank == d - 1 && nd.min_sv_ratio > 1e-8) ++ok;
      worst_ratio = std::min(worst_ratio, nd.min_sv_ratio);
    }
    const double secs = time_since(t0);
    return Outcome{ok == 25 && secs < 60.0,
                   fmt("%d/25 rank d-1, min minor ratio %.3e, build %.2f s", ok, worst_ratio, secs)};
  });

  run(3, "kernel relation", [&] {
    if (matrices.size() != family.size()) return Outcome{false, "family matrices unavailable"};
    int ok = 0;
    double worst = 0.0;
    for (std::size_t i = 0; i < family.size(); ++i) {
      const PolyC& P = family[i];
      std::vector<cplx> v;
      for (int j = 1; j <= *P.degree(); ++j) v.push_back(static_cast<double>(j) * P[j]);
      const double lhs = norm2(matrices[i].apply(v));
      const auto pe = matrices[i].propagated_error(v);
      const double bound = 10.0 * std::sqrt(std::inner_product(pe.begin(), pe.end(), pe.begin(), 0.0));
      if (lhs <= bound) ++ok;
      worst = std::max(worst, lhs / bound);
    }
    return Outcome{ok == 25, fmt("%d/25 within 10x propagated error, worst ratio %.3e", ok, worst)};
  });

  run(4, "torelli recovery", [&] {
    if (matrices.size() != family.size()) return Outcome{false, "family matrices unavailable"};
    double worst = 0.0;
    for (std::size_t i = 0; i < family.size(); ++i) {
      const PolyC& P = family[i];
      const auto rec = expc::recover_derivative(matrices[i]);
      const PolyC expect = P.derivative() * (1.0 / P.leading());
      double err = 0.0, scale = 0.0;
      for (int j = 0; j < *P.degree(); ++j) {
        err = std::max(err, std::abs(rec.recovered_derivative[j] - expect[j]));
        scale = std::max(scale, std::abs(expect[j]));
      }
      worst = std::max(worst, err / scale);
    }
    int verdicts = 0;
    for (int i = 0; i < 10; ++i) {
      const PolyC& P = family[static_cast<std::size_t>(i)];
      const bool same = expc::torelli_verify(P, P, kTol).same;
      const bool shifted = expc::torelli_verify(P, P + PolyC::monomial(1, 0.5), kTol).same;
      const bool doubled = expc::torelli_verify(P, 2.0 * P, kTol).same;
      if (same && !shifted && !doubled) ++verdicts;
    }
    return Outcome{worst <= 1e-6 && verdicts == 10,
                   fmt("max rel coeff error %.3e (limit 1e-6), %d/10 verdicts correct", worst, verdicts)};
  });

  run(5, "reduction certificate", [] {
    std::mt19937_64 rng(kSeed + 5);
    double worst_cert = 0.0, worst_period = 0.0;
    int ok = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const PolyC P = expc::random_monic(2 + trial % 5, rng);
      std::uniform_int_distribution<int> deg(0, 14);
      const PolyC Q = expc::random_poly(deg(rng), rng);
      const auto red = expc::reduce(Q, P);
      const PolyC rebuilt = red.cls.representative() + red.certificate.R.derivative() + red.certificate.R * P.derivative();
      double resid = 0.0;
      for (int k = 0; k <= 20; ++k) resid = std::max(resid, std::abs(rebuilt[k] - Q[k]));
      const double cert = resid / red.certificate.scale;
      worst_cert = std::max(worst_cert, cert);
      bool periods_ok = true;
      const int d = *P.degree();
      std::vector<PolyC> forms{Q};
      for (int j = 0; j < d - 1; ++j) forms.push_back(PolyC::monomial(j));
      for (const auto& c : expc::standard_basis(P).cycles) {
        const auto pv = expc::periods(forms, P, c, kTol);
        cplx combo = 0.0;
        double budget = pv[0].abs_error_estimate;
        for (int j = 0; j < d - 1; ++j) {
          combo += red.cls.coeffs[static_cast<std::size_t>(j)] * pv[static_cast<std::size_t>(j) + 1].value;
          budget += std::abs(red.cls.coeffs[static_cast<std::size_t>(j)]) * pv[static_cast<std::size_t>(j) + 1].abs_error_estimate;
        }
        const double gap = std::abs(pv[0].value - combo);
        worst_period = std::max(worst_period, gap / budget);
        periods_ok = periods_ok && gap <= budget;
      }
      if (cert <= 1e-12 && periods_ok) ++ok;
    }
    return Outcome{ok == 100, fmt("%d/100 ok, worst residual/scale %.2e, worst period gap/budget %.2e", ok, worst_cert, worst_period)};
  });

  run(6, "exact forms", [] {
    std::mt19937_64 rng(kSeed + 6);
    double worst = 0.0;
    for (int trial = 0; trial < 25; ++trial) {
      const PolyC P = expc::random_monic(2 + trial % 5, rng);
      const PolyC R = expc::random_poly(trial % 6, rng);
      const PolyC Q = R.derivative() + R * P.derivative();
      for (const auto& c : expc::standard_basis(P).cycles) worst = std::max(worst, std::abs(expc::period(Q, P, c, kTol).value));
    }
    return Outcome{worst <= 10 * kTol, fmt("max |period| %.2e (limit %.0e)", worst, 10 * kTol)};
  });

  run(7, "divisor degree zero", [] {
    std::mt19937_64 rng(kSeed + 7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    int ok = 0;
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<expc::Puncture> ps{{expc::SpherePoint::infinity(), expc::PrincipalPart({expc::random_unit_disc(rng), 1.0})}};
      const int extra = trial % 3;
      std::vector<cplx> locs;
      for (int i = 0; i < extra; ++i) {
        locs.push_back(cplx(u(rng), u(rng)));
        ps.push_back({expc::SpherePoint::at(locs.back()), expc::PrincipalPart({expc::random_unit_disc(rng) + 0.5})});
      }
      const expc::ExpCurveGZ curve(ps);
      PolyC num = expc::random_poly(trial % 5, rng), den = expc::random_poly((trial / 5) % 4, rng);
      if (!locs.empty() && trial % 2) num = num * PolyC::linear_factor(locs[0]);
      if (trial % 7 == 0) num = num * PolyC::linear_factor(0.25) * PolyC::linear_factor(0.25);
      const auto dv = expc::divisor_of(expc::RationalC(num, den), curve);
      if (expc::degree_check(dv)) ++ok;
    }
    return Outcome{ok == 100, fmt("%d/100 degree-zero divisors", ok)};
  });

  run(8, "h1 dimension", [] {
    std::mt19937_64 rng(kSeed + 8);
    int ok = 0;
    for (int d = 1; d <= 6; ++d) {
      const PolyC P = expc::random_monic(d, rng);
      if (expc::h1_dimension(P) == static_cast<int>(expc::standard_basis(P).cycles.size())) ++ok;
    }
    return Outcome{ok == 6, fmt("%d/6 degrees agree", ok)};
  });

  run(9, "case-2 residues", [] {
    const auto geo = expc::laurent_at_zero(expc::RationalC(PolyC::constant(1.0), PolyC({1.0, -1.0})), 30);
    const auto r = expc::residue_exp_product(geo, expc::PrincipalPart({1.0}), 30);
    const double e1 = std::abs(r.value - (std::exp(1.0) - 1.0));
    const auto exact = expc::laurent_at_zero(expc::RationalC(PolyC::constant(-1.0), PolyC::monomial(2)), 30);
    const double e2 = std::abs(expc::residue_exp_product(exact, expc::PrincipalPart({1.0}), 30).value);
    return Outcome{e1 <= 1e-10 && e2 <= 1e-12, fmt("|res - (e-1)| = %.2e, |exact res| = %.2e", e1, e2)};
  });

  run(10, "homotopy stability", [&] {
    double worst = 0.0;
    for (const auto& P : family) {
      const int d = *P.degree();
      const auto b1 = expc::standard_basis(P);
      const auto b2 = expc::standard_basis(P, 2.0 * b1.base_radius);
      for (std::size_t k = 0; k < b1.cycles.size(); ++k) {
        const auto r1 = expc::period_row(P, b1.cycles[k], d - 1, kTol);
        const auto r2 = expc::period_row(P, b2.cycles[k], d - 1, kTol);
        for (std::size_t j = 0; j < r1.size(); ++j) worst = std::max(worst, std::abs(r1[j].value - r2[j].value));
      }
    }
    return Outcome{worst <= 4 * kTol, fmt("max change %.2e (limit %.0e)", worst, 4 * kTol)};
  });

  std::printf("%s: %d criterion(s) failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
