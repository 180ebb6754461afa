#pragma once

// Recovery of P' from the period matrix of e^P dz, and the two cohomological
// distinguishers used to decide whether two exponent data define the same curve.

#include <optional>
#include <string>
#include <vector>

#include "expc/algebra.hpp"
#include "expc/cohomology.hpp"
#include "expc/homology.hpp"
#include "expc/quadrature.hpp"

namespace expc {

/// Numerical thresholds shared by the Torelli routines.
struct TorelliTolerances {
  /// Singular values above rank_factor * d * ||M|| count towards the rank.
  double rank_factor = 1e-8;
  /// Smallest singular value of the leading (d-1)x(d-1) block must exceed this * ||M||.
  double minor_factor = 1e-8;
  /// Recovered P' vectors closer than this angle (radians) are parallel.
  double parallel_angle = 1e-6;
  /// Distinguisher classes below this * scale count as zero.
  double class_factor = 1e-8;
};

/// (d-1) x d matrix of periods int_{gamma_k} z^j e^P dz, row-major.
class PeriodMatrix {
 public:
  PeriodMatrix(PolyC exponent, CycleBasis basis, std::vector<std::vector<PeriodValue>> rows);

  int rows() const noexcept { return static_cast<int>(rows_.size()); }
  int cols() const noexcept { return cols_; }
  cplx entry(int k, int j) const { return rows_.at(static_cast<std::size_t>(k)).at(static_cast<std::size_t>(j)).value; }
  double error(int k, int j) const {
    return rows_.at(static_cast<std::size_t>(k)).at(static_cast<std::size_t>(j)).abs_error_estimate;
  }
  const PeriodValue& cell(int k, int j) const { return rows_.at(static_cast<std::size_t>(k)).at(static_cast<std::size_t>(j)); }
  const PolyC& exponent() const noexcept { return exponent_; }
  const CycleBasis& basis() const noexcept { return basis_; }
  /// True when every entry met its tolerance.
  bool converged() const noexcept;
  /// Largest entry error estimate.
  double max_error() const noexcept;
  /// Spectral norm.
  double norm() const;
  /// M v for a d-vector v.
  std::vector<cplx> apply(const std::vector<cplx>& v) const;
  /// sum_j |v_j| err_kj per row: the propagated quadrature error of (M v)_k.
  std::vector<double> propagated_error(const std::vector<cplx>& v) const;

 private:
  PolyC exponent_;
  CycleBasis basis_;
  std::vector<std::vector<PeriodValue>> rows_;
  int cols_ = 0;
};

/// Requires deg P >= 2.
PeriodMatrix build_period_matrix(const PolyC& exponent, double tol, std::optional<double> base_radius = std::nullopt,
                                 const QuadratureOptions& opts = {});

struct NondegeneracyReport {
  int rank = 0;
  /// Smallest singular value of the leading (d-1)x(d-1) block over ||M||.
  double min_sv_ratio = 0.0;
  std::vector<double> singular_values;
  /// rank == d-1 and the leading block passes the threshold.
  bool ok = false;
};

NondegeneracyReport verify_nondegeneracy(const PeriodMatrix& m, const TorelliTolerances& tols = {});

struct RecoveryResult {
  /// Kernel vector normalised so its last entry is d; entry j pairs with (j+1) a_{j+1}.
  std::vector<cplx> kernel_vector;
  PolyC recovered_derivative;
  /// Factor applied to the unit kernel vector to reach the normalisation.
  cplx scale = 1.0;
  std::string scale_note;
  /// ||M v|| / (||M|| ||v||)
  double residual = 0.0;
  /// sigma_{d-1} / ||M||; the gap separating the kernel from the rest of the spectrum.
  double spectral_gap = 0.0;
};

/// Kernel of M by SVD. Throws Error(kVerification) when the kernel is not one-dimensional.
RecoveryResult recover_derivative(const PeriodMatrix& m, const TorelliTolerances& tols = {});

/// Class of g2 e^{P1} (P1' - P2') dz; zero for every g2 exactly when the forms agree
/// modulo exact forms. Requires deg P1 = deg P2 >= 2.
DeRhamClass derivative_distinguisher(const PolyC& p1, const PolyC& p2, const PolyC& g2);

struct Case2Residue {
  int k = 0;
  cplx residue;
  double tail_estimate = 0.0;
};

/// Truncated residues at 0 of z^k * multiplier * omega_factor * e^h, k = 0..kmax.
std::vector<Case2Residue> case2_residue_test(const PrincipalPart& h, const RationalC& omega_factor,
                                             const PolyC& multiplier, int kmax, int trunc);

/// Difference of logarithmic derivatives d(h1 - h2)/du for two principal parts at the same point.
RationalC log_derivative_difference(const PrincipalPart& h1, const PrincipalPart& h2);

struct CurveRecovery {
  PeriodMatrix matrix;
  NondegeneracyReport nondegeneracy;
  std::optional<RecoveryResult> recovery;
};

struct TorelliReport {
  CurveRecovery first;
  std::optional<CurveRecovery> second = std::nullopt;
  bool degrees_match = false;
  bool parallel = false;
  double kernel_angle = 0.0;
  /// Norm of the distinguisher class for g2 = z^k, k = 0..d, with its scale.
  std::vector<double> distinguisher_norms = {};
  std::vector<double> distinguisher_scales = {};
  bool distinguisher_zero = false;
  bool same = false;
  /// Every period met its tolerance and both matrices were nondegenerate.
  bool verified = false;
};

CurveRecovery recover_curve(const PolyC& exponent, double tol, const TorelliTolerances& tols = {});

/// End-to-end comparison: "same" iff the recovered P' are parallel and all
/// distinguisher classes vanish.
TorelliReport torelli_verify(const PolyC& p1, const PolyC& p2, double tol, const TorelliTolerances& tols = {});

}  // namespace expc
