#pragma once

// Reduction of Q e^P dz modulo exact forms d(R e^P) = (R' + R P') e^P dz onto the
// spanning set z^k e^P dz, k = 0..d-2.

#include <vector>

#include "expc/algebra.hpp"

namespace expc {

struct DeRhamClass {
  PolyC exponent;
  /// c_0..c_{d-2}; empty when deg P = 1.
  std::vector<cplx> coeffs;

  double norm() const noexcept;
  /// The class as the polynomial sum c_k z^k.
  PolyC representative() const { return PolyC(coeffs); }
};

/// Witness R of  Q = sum c_k z^k + R' + R P'.
struct ReductionCertificate {
  PolyC R;
  /// Largest coefficient of Q - sum c_k z^k - R' - R P', recomputed after reduction.
  double residual = 0.0;
  /// Largest coefficient magnitude among Q, R' and R P'.
  double scale = 0.0;
};

struct Reduction {
  DeRhamClass cls;
  ReductionCertificate certificate;
};

/// Greedy top-down elimination; requires deg P >= 1.
Reduction reduce(const PolyC& form, const PolyC& exponent);

/// True iff the reduced class vanishes, i.e. |c_k| <= rel_tol * certificate scale for all k.
bool is_exact(const PolyC& form, const PolyC& exponent, double rel_tol = 1e-10);

/// Dimension of the relative homology (and of the cohomology) for deg P = d: d - 1.
int h1_dimension(const PolyC& exponent);

}  // namespace expc
