#pragma once

// Complex polynomial, rational-function and truncated Laurent arithmetic.
//
// Everything here works in double-precision complex. Series coefficients are
// finite sums, so "exact" means exact up to floating-point rounding.

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace expc {

using cplx = std::complex<double>;

/// Polynomial in z with complex coefficients; index = power of z.
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients and `degree()` returns `std::nullopt` for it.
class PolyC {
 public:
  PolyC() = default;
  explicit PolyC(std::vector<cplx> coeffs);

  static PolyC constant(cplx c);
  static PolyC monomial(int power, cplx c = 1.0);
  /// z - root
  static PolyC linear_factor(cplx root);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::optional<int> degree() const noexcept;
  /// Coefficient of z^k; zero beyond the stored range.
  cplx operator[](int k) const noexcept;
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }
  cplx leading() const;
  /// Largest coefficient modulus (0 for the zero polynomial).
  double max_abs_coeff() const noexcept;

  cplx operator()(cplx z) const noexcept;
  /// Evaluates sum |a_k| r^k, an upper bound for |p(z)| on |z| = r.
  double abs_bound(double r) const noexcept;

  PolyC derivative() const;
  /// p(scale * z + shift)
  PolyC compose_affine(cplx scale, cplx shift) const;
  /// Coefficients of p(a + u) in powers of u.
  PolyC taylor_shift(cplx a) const { return compose_affine(1.0, a); }
  /// Multiply by z^k (k >= 0).
  PolyC shifted(int k) const;

  PolyC& operator+=(const PolyC& other);
  PolyC& operator-=(const PolyC& other);
  PolyC& operator*=(cplx s);

  friend PolyC operator+(PolyC a, const PolyC& b) { return a += b; }
  friend PolyC operator-(PolyC a, const PolyC& b) { return a -= b; }
  friend PolyC operator-(PolyC a) { return a *= -1.0; }
  friend PolyC operator*(const PolyC& a, const PolyC& b);
  friend PolyC operator*(PolyC a, cplx s) { return a *= s; }
  friend PolyC operator*(cplx s, PolyC a) { return a *= s; }
  friend bool operator==(const PolyC& a, const PolyC& b) = default;

 private:
  void trim();
  std::vector<cplx> coeffs_;
};

/// Quotient and remainder of polynomial long division (divisor != 0).
struct PolyDivision {
  PolyC quotient;
  PolyC remainder;
};
PolyDivision divide(const PolyC& num, const PolyC& den);

/// All complex roots with multiplicity (companion-matrix eigenvalues, Newton polished).
std::vector<cplx> roots(const PolyC& p);

/// Root of p together with its multiplicity; roots closer than a relative
/// tolerance are merged.
struct RootCluster {
  cplx location;
  int multiplicity;
};
std::vector<RootCluster> clustered_roots(const PolyC& p);

/// Order of vanishing of p at a: the number of leading Taylor coefficients at a
/// that are zero relative to their rounding scale. Returns nullopt for p == 0.
std::optional<int> vanishing_order(const PolyC& p, cplx a, double rel_tol = 1e-8);

/// Rational function num/den with den != 0, common roots cancelled and den monic.
class RationalC {
 public:
  RationalC() : num_(), den_(PolyC::constant(1.0)) {}
  RationalC(PolyC num, PolyC den);
  explicit RationalC(PolyC poly) : RationalC(std::move(poly), PolyC::constant(1.0)) {}

  const PolyC& num() const noexcept { return num_; }
  const PolyC& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }

  cplx operator()(cplx z) const { return num_(z) / den_(z); }
  RationalC derivative() const;

  friend RationalC operator*(const RationalC& a, const RationalC& b);
  friend RationalC operator+(const RationalC& a, const RationalC& b);
  friend RationalC operator-(const RationalC& a, const RationalC& b);

 private:
  PolyC num_;
  PolyC den_;
};

/// A point of the Riemann sphere: finite complex value or infinity.
struct SpherePoint {
  bool infinite = false;
  cplx z{};

  static SpherePoint at(cplx z) { return {false, z}; }
  static SpherePoint infinity() { return {true, {}}; }
  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;
};

/// Pole-only germ h = sum_{j=1..d} c_j u^{-j} in a local coordinate u,
/// the canonical representative of a class modulo holomorphic germs.
class PrincipalPart {
 public:
  /// `neg_coeffs[j-1]` is the coefficient of u^{-j}; trailing zeros are trimmed and
  /// at least one coefficient must be nonzero.
  explicit PrincipalPart(std::vector<cplx> neg_coeffs);

  int order() const noexcept { return static_cast<int>(c_.size()); }
  /// Coefficient of u^{-j}, j >= 1; zero beyond the pole order.
  cplx coeff(int j) const noexcept;
  cplx leading() const noexcept { return c_.back(); }
  std::span<const cplx> coeffs() const noexcept { return c_; }

  /// Derivative dh/du as a rational function of u.
  RationalC derivative() const;

  friend PrincipalPart operator+(const PrincipalPart& a, const PrincipalPart& b);
  friend bool operator==(const PrincipalPart&, const PrincipalPart&) = default;

 private:
  std::vector<cplx> c_;
};

/// Which side of a Laurent window is cut off.
enum class Truncation {
  kNone,   // finite expansion, zero outside [lo, hi]
  kAbove,  // zero below lo, unknown above hi (power-series style)
  kBelow,  // zero above hi, unknown below lo (series in 1/z)
};

/// Coefficients of a Laurent expansion for the powers lo..hi.
struct LaurentWindow {
  int lo = 0;
  int hi = 0;
  std::vector<cplx> coeffs;
  double tail_bound = 0.0;
  Truncation truncation = Truncation::kNone;

  /// Coefficient of z^power; zero outside [lo, hi].
  cplx at(int power) const noexcept;
  /// Window multiplied by z^k.
  LaurentWindow shifted(int k) const;

  static LaurentWindow from_poly(const PolyC& p);
};

/// Coefficients of a + b for every power both operands determine.
LaurentWindow add(const LaurentWindow& a, const LaurentWindow& b);
/// Coefficients of a * b for every power both operands determine.
LaurentWindow multiply(const LaurentWindow& a, const LaurentWindow& b);

/// Laurent expansion of w at 0 for powers up to hi.
LaurentWindow laurent_at_zero(const RationalC& w, int hi);

/// Exact coefficients of e^h for powers lo..0 (lo <= 0).
LaurentWindow exp_principal_series(const PrincipalPart& h, int lo);

/// Residue of w at a finite point or at infinity.
cplx residue_meromorphic(const RationalC& w, const SpherePoint& at);

struct TruncatedResidue {
  cplx value;
  double tail_estimate;
};

struct ResidueSeriesOptions {
  /// Number of trailing blocks inspected by the decay heuristic.
  int decay_span = 4;
};

/// Truncated residue at 0 of alpha * e^h:
/// sum_{m = alpha.lo .. trunc} alpha_m [e^h]_{-1-m}.
/// The tail estimate is the magnitude of the last block of d = ord(h) terms; it is a
/// heuristic, not a bound. Throws ConvergenceError when block magnitudes stop decaying.
TruncatedResidue residue_exp_product(const LaurentWindow& alpha, const PrincipalPart& h, int trunc,
                                     const ResidueSeriesOptions& opts = {});

}  // namespace expc
