#pragma once

// Independent reference values used by the tests. None of these call into the
// quadrature or reduction code under test.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>

#include "expc/algebra.hpp"

namespace oracle {

using cplx = std::complex<double>;

/// int_0^inf z^j e^{a z^d} dz along the ray of angle theta where a e^{i d theta} = -|a|:
/// e^{i (j+1) theta} Gamma((j+1)/d) / (d |a|^{(j+1)/d}).
inline cplx monomial_ray(cplx a, int d, int j, double theta) {
  const double s = (j + 1.0) / d;
  return std::polar(1.0, (j + 1) * theta) * std::tgamma(s) / (d * std::pow(std::abs(a), s));
}

/// Period of z^j e^{a z^d} dz from the ray at angle `from` to the ray at angle `to`.
inline cplx monomial_period(cplx a, int d, int j, double from, double to) {
  return monomial_ray(a, d, j, to) - monomial_ray(a, d, j, from);
}

/// Composite trapezoid of a real-line integrand on [-L, L]; spectrally accurate for
/// rapidly decaying analytic integrands such as t^k e^{-t^2}.
inline cplx trapezoid(const std::function<cplx(double)>& f, double L, double h) {
  const int n = static_cast<int>(std::lround(L / h));
  cplx s = 0.5 * (f(-n * h) + f(n * h));
  for (int i = -n + 1; i < n; ++i) s += f(i * h);
  return s * h;
}

/// int_{-inf}^{inf} t^k e^{-t^2} dt = Gamma((k+1)/2) for even k, 0 for odd k.
inline double gaussian_moment(int k) { return k % 2 ? 0.0 : std::tgamma((k + 1) / 2.0); }

inline double factorial(int n) { return std::tgamma(n + 1.0); }

inline cplx unit_disc(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
}

}  // namespace oracle
