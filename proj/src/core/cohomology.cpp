#include "expc/cohomology.hpp"

#include <algorithm>
#include <cmath>

#include "expc/error.hpp"

namespace expc {

double DeRhamClass::norm() const noexcept {
  double s = 0.0;
  for (const auto& c : coeffs) s += std::norm(c);
  return std::sqrt(s);
}

int h1_dimension(const PolyC& exponent) {
  const auto deg = exponent.degree();
  if (!deg || *deg < 1) throw InvalidArgument("h1_dimension: degree must be >= 1");
  return *deg - 1;
}

Reduction reduce(const PolyC& form, const PolyC& exponent) {
  const int d = h1_dimension(exponent) + 1;
  const cplx lead = exponent.leading();
  const PolyC dp = exponent.derivative();

  std::vector<cplx> q(form.coeffs().begin(), form.coeffs().end());
  std::vector<cplx> r_coeffs;
  // d(r z^m e^P) = (r m z^{m-1} + r z^m P') e^P dz has leading term r d a_d z^{m+d-1}.
  for (int n = static_cast<int>(q.size()) - 1; n >= d - 1; --n) {
    const cplx top = q[static_cast<std::size_t>(n)];
    q[static_cast<std::size_t>(n)] = 0.0;
    if (top == cplx(0.0)) continue;
    const int m = n - d + 1;
    const cplx r = top / (static_cast<double>(d) * lead);
    if (static_cast<int>(r_coeffs.size()) <= m) r_coeffs.resize(static_cast<std::size_t>(m) + 1, 0.0);
    r_coeffs[static_cast<std::size_t>(m)] += r;
    if (m > 0) q[static_cast<std::size_t>(m - 1)] -= r * static_cast<double>(m);
    // the z^n term of r z^m P' is cancelled exactly above
    for (int k = 0; k < d - 1; ++k) q[static_cast<std::size_t>(m + k)] -= r * dp[k];
  }

  Reduction out;
  out.cls.exponent = exponent;
  out.cls.coeffs.assign(static_cast<std::size_t>(d - 1), 0.0);
  for (int k = 0; k < d - 1 && k < static_cast<int>(q.size()); ++k) out.cls.coeffs[static_cast<std::size_t>(k)] = q[static_cast<std::size_t>(k)];

  auto& cert = out.certificate;
  cert.R = PolyC(std::move(r_coeffs));
  const PolyC dr = cert.R.derivative();
  const PolyC rdp = cert.R * dp;
  const PolyC residual = form - out.cls.representative() - dr - rdp;
  cert.residual = residual.max_abs_coeff();
  cert.scale = std::max({form.max_abs_coeff(), dr.max_abs_coeff(), rdp.max_abs_coeff()});
  return out;
}

bool is_exact(const PolyC& form, const PolyC& exponent, double rel_tol) {
  const auto red = reduce(form, exponent);
  const double bound = rel_tol * red.certificate.scale;
  return std::all_of(red.cls.coeffs.begin(), red.cls.coeffs.end(),
                     [&](const cplx& c) { return std::abs(c) <= bound; });
}

}  // namespace expc
