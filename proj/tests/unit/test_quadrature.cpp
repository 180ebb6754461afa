#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "expc/cohomology.hpp"
#include "expc/error.hpp"
#include "expc/families.hpp"
#include "expc/quadrature.hpp"
#include "oracles.hpp"

using expc::cplx;
using expc::PolyC;

namespace {

const cplx I(0.0, 1.0);
const double kSqrtPi = std::sqrt(std::numbers::pi);

}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("panel integration of smooth real functions") {
  auto f = [](double x, std::span<cplx> out) {
    out[0] = std::exp(x);
    out[1] = std::cos(3 * x) + I * std::sin(x);
    out[2] = std::sqrt(x);
  };
  const auto r = expc::integrate_panels(f, 3, 0.0, 1.0, 1e-12, 500);
  CHECK(r.converged);
  CHECK(std::abs(r.values[0] - (std::exp(1.0) - 1.0)) < 1e-12);
  CHECK(std::abs(r.values[1] - (std::sin(3.0) / 3 + I * (1 - std::cos(1.0)))) < 1e-12);
  CHECK(std::abs(r.values[2] - 2.0 / 3.0) < 1e-10);
  for (double e : r.errors) CHECK(e <= 1e-12);
}

TEST_CASE("panel integration reports exhaustion") {
  auto f = [](double x, std::span<cplx> out) { out[0] = 1.0 / std::sqrt(x + 1e-300); };
  const auto r = expc::integrate_panels(f, 1, 0.0, 1.0, 1e-14, 5);
  CHECK_FALSE(r.converged);
}

TEST_CASE("gaussian periods against the real-line trapezoid") {
  const PolyC P = PolyC::monomial(2);
  const auto b = expc::standard_basis(P);
  const auto row = expc::period_row(P, b.cycles[0], 5, 1e-12);
  for (int k = 0; k <= 5; ++k) {
    // z = i t on the imaginary axis: int (it)^k e^{-t^2} i dt.
    const cplx ref = oracle::trapezoid([k](double t) { return std::pow(I * t, k) * std::exp(-t * t) * I; }, 12.0, 0.05);
    CHECK(std::abs(row[static_cast<std::size_t>(k)].value - ref) < 1e-11);
    CHECK(row[static_cast<std::size_t>(k)].converged);
  }
  CHECK(std::abs(row[0].value - I * kSqrtPi) < 1e-11);
  CHECK(std::abs(row[2].value + I * kSqrtPi / 2.0) < 1e-11);
}

TEST_CASE("monomial exponents against the Gamma function") {
  std::mt19937_64 rng(41);
  for (int d = 2; d <= 7; ++d) {
    const cplx a = std::polar(0.5 + oracle::unit_disc(rng).real() * 0.4 + 0.6, 6.28 * (d / 7.0));
    const PolyC P = PolyC::monomial(d, a);
    const auto b = expc::standard_basis(P);
    for (const auto& c : b.cycles) {
      const auto row = expc::period_row(P, c, d + 1, 1e-11);
      for (int j = 0; j <= d + 1; ++j) {
        const cplx ref = oracle::monomial_period(a, d, j, c.source.central_angle, c.target.central_angle);
        const auto& pv = row[static_cast<std::size_t>(j)];
        CHECK(std::abs(pv.value - ref) <= std::max(1e-11, 4 * pv.abs_error_estimate));
        CHECK(std::abs(pv.value - ref) < 1e-10);
      }
    }
  }
}

TEST_CASE("completing the square") {
  // z^2 + z = (z + 1/2)^2 - 1/4
  const PolyC P({0.0, 1.0, 1.0});
  const auto b = expc::standard_basis(P);
  const auto row = expc::period_row(P, b.cycles[0], 2, 1e-12);
  const double s = std::exp(-0.25);
  CHECK(std::abs(row[0].value - s * I * kSqrtPi) < 1e-11);
  CHECK(std::abs(row[1].value + 0.5 * s * I * kSqrtPi) < 1e-11);
  // z^2 = (w - 1/2)^2: moments -sqrt(pi)/2 i + sqrt(pi)/4 i
  CHECK(std::abs(row[2].value - s * I * kSqrtPi * (-0.5 + 0.25)) < 1e-11);
}

TEST_CASE("tail bound dominates the actual tail") {
  std::mt19937_64 rng(43);
  for (int d = 2; d <= 6; ++d) {
    const PolyC P = expc::random_monic(d, rng);
    const PolyC Q = expc::random_poly(d, rng);
    const double T = expc::ray_bound_start(P);
    const double bound = expc::ray_tail_bound(Q, P, T);
    for (double theta : expc::descent_angles(P)) {
      auto f = [&](double r, std::span<cplx> out) {
        const cplx z = std::polar(r, theta);
        out[0] = std::abs(Q(z) * std::exp(P(z) - P(0.0)));
      };
      const auto r = expc::integrate_panels(f, 1, T, T + 30.0, 1e-14, 2000);
      CHECK(r.values[0].real() <= bound * (1 + 1e-9));
    }
  }
}

TEST_CASE("off-ray contours are rejected") {
  const PolyC P = PolyC::monomial(2);
  auto c = expc::standard_basis(P).cycles[0];
  c.outbound.angle = 0.0;
  CHECK_THROWS_AS(expc::period(PolyC::constant(1.0), P, c, 1e-10), expc::DomainError);
}

TEST_CASE("reversed cycles negate periods") {
  std::mt19937_64 rng(47);
  const PolyC P = expc::random_monic(4, rng);
  for (const auto& c : expc::standard_basis(P).cycles) {
    const auto fwd = expc::period_row(P, c, 3, 1e-11);
    const auto back = expc::period_row(P, expc::reverse(c), 3, 1e-11);
    for (std::size_t j = 0; j < fwd.size(); ++j)
      CHECK(std::abs(fwd[j].value + back[j].value) <= fwd[j].abs_error_estimate + back[j].abs_error_estimate);
  }
}

TEST_CASE("exact forms have vanishing periods") {
  std::mt19937_64 rng(53);
  const double tol = 1e-10;
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 2 + trial % 4;
    const PolyC P = expc::random_monic(d, rng);
    const PolyC R = expc::random_poly(trial % 5, rng);
    const PolyC Q = R.derivative() + R * P.derivative();
    for (const auto& c : expc::standard_basis(P).cycles) CHECK(std::abs(expc::period(Q, P, c, tol).value) <= 10 * tol);
  }
}

TEST_CASE("error decreases with the tolerance") {
  const PolyC P = PolyC::monomial(3, cplx(0.7, 0.2));
  const auto b = expc::standard_basis(P);
  const auto& c = b.cycles[1];
  const cplx ref = oracle::monomial_period(P.leading(), 3, 2, c.source.central_angle, c.target.central_angle);
  for (double tol : {1e-4, 1e-6, 1e-8, 1e-10, 1e-12}) {
    const auto pv = expc::period(PolyC::monomial(2), P, c, tol);
    CHECK(pv.converged);
    CHECK(pv.abs_error_estimate <= tol);
    // Roundoff floor: a few ulps of the integrand scale.
    CHECK(std::abs(pv.value - ref) <= tol + 1e-14);
  }
}

TEST_CASE("doubling the base radius leaves periods unchanged") {
  std::mt19937_64 rng(59);
  const double tol = 1e-10;
  for (int d = 2; d <= 6; ++d) {
    const PolyC P = expc::random_monic(d, rng);
    const auto b1 = expc::standard_basis(P);
    const auto b2 = expc::standard_basis(P, 2 * b1.base_radius);
    for (std::size_t k = 0; k < b1.cycles.size(); ++k) {
      const auto r1 = expc::period_row(P, b1.cycles[k], d - 1, tol);
      const auto r2 = expc::period_row(P, b2.cycles[k], d - 1, tol);
      for (std::size_t j = 0; j < r1.size(); ++j) CHECK(std::abs(r1[j].value - r2[j].value) <= 4 * tol);
    }
  }
}

TEST_CASE("linearity in the form") {
  std::mt19937_64 rng(61);
  const PolyC P = expc::random_monic(3, rng);
  const PolyC Q1 = expc::random_poly(4, rng), Q2 = expc::random_poly(2, rng);
  const cplx s(0.3, -0.8);
  const auto basis = expc::standard_basis(P);
  const auto& c = basis.cycles[0];
  const auto a = expc::period(Q1, P, c, 1e-11), bq = expc::period(Q2, P, c, 1e-11);
  const auto sum = expc::period(Q1 + s * Q2, P, c, 1e-11);
  CHECK(std::abs(sum.value - (a.value + s * bq.value)) <= sum.abs_error_estimate + a.abs_error_estimate +
                                                                 std::abs(s) * bq.abs_error_estimate);
}

}  // TEST_SUITE
