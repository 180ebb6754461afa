#include "expc/torelli.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "expc/error.hpp"

namespace expc {

namespace {

Eigen::MatrixXcd to_eigen(const PeriodMatrix& m) {
  Eigen::MatrixXcd a(m.rows(), m.cols());
  for (int k = 0; k < m.rows(); ++k)
    for (int j = 0; j < m.cols(); ++j) a(k, j) = m.entry(k, j);
  return a;
}

double vec_norm(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

/// Angle between the complex lines spanned by a and b.
double line_angle(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  const double na = vec_norm(a), nb = vec_norm(b);
  if (na == 0.0 || nb == 0.0 || a.size() != b.size()) return std::numbers::pi / 2;
  cplx inner = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) inner += std::conj(a[i]) * b[i];
  const cplx proj = inner / (na * na);
  double rej = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) rej += std::norm(b[i] - proj * a[i]);
  return std::asin(std::min(1.0, std::sqrt(rej) / nb));
}

}  // namespace

PeriodMatrix::PeriodMatrix(PolyC exponent, CycleBasis basis, std::vector<std::vector<PeriodValue>> rows)
    : exponent_(std::move(exponent)), basis_(std::move(basis)), rows_(std::move(rows)) {
  const int d = exponent_.degree().value_or(0);
  if (d < 2) throw InvalidArgument("period matrix needs deg P >= 2");
  if (static_cast<int>(rows_.size()) != d - 1) throw InvalidArgument("period matrix must have d-1 rows");
  for (const auto& r : rows_) {
    if (static_cast<int>(r.size()) != d) throw InvalidArgument("period matrix rows must have d entries");
  }
  cols_ = d;
}

bool PeriodMatrix::converged() const noexcept {
  for (const auto& r : rows_)
    for (const auto& c : r)
      if (!c.converged) return false;
  return true;
}

double PeriodMatrix::max_error() const noexcept {
  double e = 0.0;
  for (const auto& r : rows_)
    for (const auto& c : r) e = std::max(e, c.abs_error_estimate);
  return e;
}

double PeriodMatrix::norm() const {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(*this));
  return svd.singularValues()(0);
}

std::vector<cplx> PeriodMatrix::apply(const std::vector<cplx>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw InvalidArgument("PeriodMatrix::apply: size mismatch");
  std::vector<cplx> out(rows_.size(), 0.0);
  for (int k = 0; k < rows(); ++k)
    for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(k)] += entry(k, j) * v[static_cast<std::size_t>(j)];
  return out;
}

std::vector<double> PeriodMatrix::propagated_error(const std::vector<cplx>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw InvalidArgument("PeriodMatrix::propagated_error: size mismatch");
  std::vector<double> out(rows_.size(), 0.0);
  for (int k = 0; k < rows(); ++k)
    for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(k)] += std::abs(v[static_cast<std::size_t>(j)]) * error(k, j);
  return out;
}

PeriodMatrix build_period_matrix(const PolyC& exponent, double tol, std::optional<double> base_radius,
                                 const QuadratureOptions& opts) {
  const int d = exponent.degree().value_or(0);
  if (d < 2) throw InvalidArgument("build_period_matrix: deg P must be >= 2");
  CycleBasis basis = standard_basis(exponent, base_radius);
  std::vector<std::vector<PeriodValue>> rows;
  rows.reserve(basis.cycles.size());
  for (const auto& cycle : basis.cycles) rows.push_back(period_row(exponent, cycle, d - 1, tol, opts));
  return PeriodMatrix(exponent, std::move(basis), std::move(rows));
}

NondegeneracyReport verify_nondegeneracy(const PeriodMatrix& m, const TorelliTolerances& tols) {
  const Eigen::MatrixXcd a = to_eigen(m);
  const int d = m.cols();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  NondegeneracyReport rep;
  const auto& sv = svd.singularValues();
  for (Eigen::Index i = 0; i < sv.size(); ++i) rep.singular_values.push_back(sv(i));
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  for (double s : rep.singular_values) {
    if (s > tols.rank_factor * d * top) ++rep.rank;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> minor_svd(a.leftCols(d - 1));
  const auto& msv = minor_svd.singularValues();
  rep.min_sv_ratio = top > 0.0 ? msv(msv.size() - 1) / top : 0.0;
  rep.ok = rep.rank == d - 1 && rep.min_sv_ratio > tols.minor_factor;
  return rep;
}

RecoveryResult recover_derivative(const PeriodMatrix& m, const TorelliTolerances& tols) {
  const Eigen::MatrixXcd a = to_eigen(m);
  const int d = m.cols();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double top = sv(0);
  RecoveryResult out;
  out.spectral_gap = top > 0.0 ? sv(sv.size() - 1) / top : 0.0;
  if (!(out.spectral_gap > tols.rank_factor * d))
    throw VerificationError("recover_derivative: kernel is not one-dimensional (rank deficient period matrix)");

  const Eigen::VectorXcd kernel = svd.matrixV().col(d - 1);
  const cplx last = kernel(d - 1);
  if (std::abs(last) < 1e-12) throw VerificationError("recover_derivative: kernel has no z^{d-1} component");
  out.scale = static_cast<double>(d) / last;
  out.scale_note = "kernel scaled so the z^(d-1) entry equals d (monic exponent convention)";
  for (int j = 0; j < d; ++j) out.kernel_vector.push_back(kernel(j) * out.scale);
  out.recovered_derivative = PolyC(out.kernel_vector);
  out.residual = vec_norm(m.apply(out.kernel_vector)) / (top * vec_norm(out.kernel_vector));
  return out;
}

DeRhamClass derivative_distinguisher(const PolyC& p1, const PolyC& p2, const PolyC& g2) {
  const int d1 = p1.degree().value_or(0), d2 = p2.degree().value_or(0);
  if (d1 < 2 || d1 != d2) throw InvalidArgument("derivative_distinguisher: need deg P1 = deg P2 >= 2");
  return reduce(g2 * (p1.derivative() - p2.derivative()), p1).cls;
}

std::vector<Case2Residue> case2_residue_test(const PrincipalPart& h, const RationalC& omega_factor,
                                             const PolyC& multiplier, int kmax, int trunc) {
  if (kmax < 0) throw InvalidArgument("case2_residue_test: kmax must be >= 0");
  const LaurentWindow base = laurent_at_zero(omega_factor * RationalC(multiplier), trunc);
  std::vector<Case2Residue> out;
  for (int k = 0; k <= kmax; ++k) {
    const auto r = residue_exp_product(base.shifted(k), h, trunc);
    out.push_back({k, r.value, r.tail_estimate});
  }
  return out;
}

RationalC log_derivative_difference(const PrincipalPart& h1, const PrincipalPart& h2) {
  return h1.derivative() - h2.derivative();
}

CurveRecovery recover_curve(const PolyC& exponent, double tol, const TorelliTolerances& tols) {
  PeriodMatrix matrix = build_period_matrix(exponent, tol);
  NondegeneracyReport nondeg = verify_nondegeneracy(matrix, tols);
  std::optional<RecoveryResult> rec;
  if (nondeg.ok) {
    try {
      rec = recover_derivative(matrix, tols);
    } catch (const VerificationError&) {
      rec.reset();
    }
  }
  return {std::move(matrix), std::move(nondeg), std::move(rec)};
}

TorelliReport torelli_verify(const PolyC& p1, const PolyC& p2, double tol, const TorelliTolerances& tols) {
  const int d1 = p1.degree().value_or(0), d2 = p2.degree().value_or(0);
  if (d1 < 2 || d2 < 2) throw InvalidArgument("torelli_verify: both exponents need degree >= 2");
  TorelliReport rep{.first = recover_curve(p1, tol, tols)};
  rep.second = recover_curve(p2, tol, tols);
  rep.degrees_match = d1 == d2;

  const auto& a = rep.first;
  const auto& b = *rep.second;
  rep.verified = a.matrix.converged() && b.matrix.converged() && a.recovery && b.recovery;
  if (a.recovery && b.recovery && rep.degrees_match) {
    rep.kernel_angle = line_angle(a.recovery->kernel_vector, b.recovery->kernel_vector);
    rep.parallel = rep.kernel_angle < tols.parallel_angle;
  } else {
    rep.kernel_angle = std::numbers::pi / 2;
  }

  if (rep.degrees_match) {
    rep.distinguisher_zero = true;
    for (int k = 0; k <= d1; ++k) {
      const PolyC g2 = PolyC::monomial(k);
      const auto red = reduce(g2 * (p1.derivative() - p2.derivative()), p1);
      const double n = red.cls.norm();
      rep.distinguisher_norms.push_back(n);
      rep.distinguisher_scales.push_back(red.certificate.scale);
      if (!(n <= tols.class_factor * red.certificate.scale)) rep.distinguisher_zero = false;
    }
  }
  rep.same = rep.degrees_match && rep.parallel && rep.distinguisher_zero;
  return rep;
}

}  // namespace expc
