#include "expc/algebra.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

#include "expc/error.hpp"

namespace expc {

// ---------------------------------------------------------------------------
// PolyC

PolyC::PolyC(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyC PolyC::constant(cplx c) { return PolyC({c}); }

PolyC PolyC::monomial(int power, cplx c) {
  if (power < 0) throw InvalidArgument("monomial: negative power");
  std::vector<cplx> v(static_cast<std::size_t>(power) + 1, 0.0);
  v.back() = c;
  return PolyC(std::move(v));
}

PolyC PolyC::linear_factor(cplx root) { return PolyC({-root, 1.0}); }

void PolyC::trim() {
  while (!coeffs_.empty() && coeffs_.back() == cplx(0.0)) coeffs_.pop_back();
}

std::optional<int> PolyC::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

cplx PolyC::operator[](int k) const noexcept {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0.0;
  return coeffs_[static_cast<std::size_t>(k)];
}

cplx PolyC::leading() const {
  if (coeffs_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

double PolyC::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

cplx PolyC::operator()(cplx z) const noexcept {
  cplx acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double PolyC::abs_bound(double r) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

PolyC PolyC::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<cplx> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return PolyC(std::move(d));
}

PolyC PolyC::compose_affine(cplx scale, cplx shift) const {
  const PolyC inner({shift, scale});
  PolyC acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + PolyC::constant(*it);
  return acc;
}

PolyC PolyC::shifted(int k) const {
  if (k < 0) throw InvalidArgument("shifted: negative power");
  if (is_zero()) return {};
  std::vector<cplx> v(static_cast<std::size_t>(k), 0.0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return PolyC(std::move(v));
}

PolyC& PolyC::operator+=(const PolyC& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

PolyC& PolyC::operator-=(const PolyC& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

PolyC& PolyC::operator*=(cplx s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

PolyC operator*(const PolyC& a, const PolyC& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<cplx> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return PolyC(std::move(v));
}

PolyDivision divide(const PolyC& num, const PolyC& den) {
  if (den.is_zero()) throw InvalidArgument("division by the zero polynomial");
  const int dd = *den.degree();
  std::vector<cplx> rem(num.coeffs().begin(), num.coeffs().end());
  const int dn = static_cast<int>(rem.size()) - 1;
  if (dn < dd) return {PolyC{}, num};
  std::vector<cplx> quot(static_cast<std::size_t>(dn - dd + 1), 0.0);
  const cplx lead = den.leading();
  for (int k = dn - dd; k >= 0; --k) {
    const cplx q = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * den[j];
    rem[static_cast<std::size_t>(k + dd)] = 0.0;
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {PolyC(std::move(quot)), PolyC(std::move(rem))};
}

std::vector<cplx> roots(const PolyC& p) {
  const auto deg = p.degree();
  if (!deg || *deg == 0) return {};
  const int n = *deg;
  const cplx lead = p.leading();
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -p[i] / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<cplx> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);

  const PolyC dp = p.derivative();
  for (auto& r : out) {
    for (int it = 0; it < 3; ++it) {
      const cplx f = p(r);
      const cplx df = dp(r);
      if (df == cplx(0.0)) break;
      const cplx next = r - f / df;
      if (!(std::abs(p(next)) < std::abs(f))) break;
      r = next;
    }
  }
  std::sort(out.begin(), out.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

std::vector<RootCluster> clustered_roots(const PolyC& p) {
  const auto rs = roots(p);
  std::vector<std::vector<cplx>> groups;
  for (const auto& r : rs) {
    bool placed = false;
    for (auto& g : groups) {
      for (const auto& m : g) {
        if (std::abs(m - r) <= 1e-4 * std::max(1.0, std::abs(r))) {
          g.push_back(r);
          placed = true;
          break;
        }
      }
      if (placed) break;
    }
    if (!placed) groups.push_back({r});
  }
  std::vector<RootCluster> out;
  out.reserve(groups.size());
  for (const auto& g : groups) {
    cplx centre = 0.0;
    for (const auto& m : g) centre += m;
    out.push_back({centre / static_cast<double>(g.size()), static_cast<int>(g.size())});
  }
  return out;
}

std::optional<int> vanishing_order(const PolyC& p, cplx a, double rel_tol) {
  if (p.is_zero()) return std::nullopt;
  const PolyC shifted = p.taylor_shift(a);
  std::vector<cplx> abs_coeffs;
  for (const auto& c : p.coeffs()) abs_coeffs.emplace_back(std::abs(c));
  const PolyC scale = PolyC(std::move(abs_coeffs)).taylor_shift(std::abs(a));
  const int n = *p.degree();
  for (int k = 0; k < n; ++k) {
    if (std::abs(shifted[k]) > rel_tol * std::abs(scale[k])) return k;
  }
  return n;
}

// ---------------------------------------------------------------------------
// RationalC

namespace {

PolyC drop_low(const PolyC& p, int count) {
  auto c = p.coeffs();
  if (static_cast<int>(c.size()) <= count) return {};
  return PolyC(std::vector<cplx>(c.begin() + count, c.end()));
}

int exact_low_zeros(const PolyC& p) {
  int k = 0;
  while (k < static_cast<int>(p.coeffs().size()) && p[k] == cplx(0.0)) ++k;
  return k;
}

PolyC deflate(const PolyC& p, cplx root) { return divide(p, PolyC::linear_factor(root)).quotient; }

/// Power-series coefficients of num/den at 0, den[0] != 0, for powers 0..count-1.
std::vector<cplx> series_quotient(const PolyC& num, const PolyC& den, int count) {
  std::vector<cplx> s(static_cast<std::size_t>(std::max(count, 0)), 0.0);
  const cplx d0 = den[0];
  for (int n = 0; n < count; ++n) {
    cplx acc = num[n];
    const int top = std::min(n, den.degree().value_or(0));
    for (int k = 1; k <= top; ++k) acc -= den[k] * s[static_cast<std::size_t>(n - k)];
    s[static_cast<std::size_t>(n)] = acc / d0;
  }
  return s;
}

}  // namespace

RationalC::RationalC(PolyC num, PolyC den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InvalidArgument("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = PolyC::constant(1.0);
    return;
  }
  const int common = std::min(exact_low_zeros(num_), exact_low_zeros(den_));
  if (common > 0) {
    num_ = drop_low(num_, common);
    den_ = drop_low(den_, common);
  }
  if (*den_.degree() > 0 && *num_.degree() > 0) {
    for (const auto& cl : clustered_roots(den_)) {
      const int zn = vanishing_order(num_, cl.location).value_or(0);
      const int k = std::min(zn, cl.multiplicity);
      for (int i = 0; i < k; ++i) {
        num_ = deflate(num_, cl.location);
        den_ = deflate(den_, cl.location);
      }
    }
  }
  const cplx lead = den_.leading();
  num_ *= 1.0 / lead;
  den_ *= 1.0 / lead;
}

RationalC RationalC::derivative() const {
  return RationalC(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalC operator*(const RationalC& a, const RationalC& b) {
  return RationalC(a.num_ * b.num_, a.den_ * b.den_);
}

RationalC operator+(const RationalC& a, const RationalC& b) {
  if (a.den_ == b.den_) return RationalC(a.num_ + b.num_, a.den_);
  return RationalC(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalC operator-(const RationalC& a, const RationalC& b) {
  return a + RationalC(-b.num_, b.den_);
}

// ---------------------------------------------------------------------------
// PrincipalPart

PrincipalPart::PrincipalPart(std::vector<cplx> neg_coeffs) : c_(std::move(neg_coeffs)) {
  while (!c_.empty() && c_.back() == cplx(0.0)) c_.pop_back();
  if (c_.empty()) throw InvalidArgument("principal part must have a pole (order >= 1)");
}

cplx PrincipalPart::coeff(int j) const noexcept {
  if (j < 1 || j > order()) return 0.0;
  return c_[static_cast<std::size_t>(j - 1)];
}

RationalC PrincipalPart::derivative() const {
  // h' = sum -j c_j u^{-j-1} = (sum_j -j c_j u^{d-j}) / u^{d+1}
  const int d = order();
  std::vector<cplx> num(static_cast<std::size_t>(d), 0.0);
  for (int j = 1; j <= d; ++j) num[static_cast<std::size_t>(d - j)] = -static_cast<double>(j) * coeff(j);
  return RationalC(PolyC(std::move(num)), PolyC::monomial(d + 1));
}

PrincipalPart operator+(const PrincipalPart& a, const PrincipalPart& b) {
  std::vector<cplx> v(static_cast<std::size_t>(std::max(a.order(), b.order())), 0.0);
  for (int j = 1; j <= static_cast<int>(v.size()); ++j) v[static_cast<std::size_t>(j - 1)] = a.coeff(j) + b.coeff(j);
  return PrincipalPart(std::move(v));
}

// ---------------------------------------------------------------------------
// LaurentWindow

cplx LaurentWindow::at(int power) const noexcept {
  if (power < lo || power > hi) return 0.0;
  return coeffs[static_cast<std::size_t>(power - lo)];
}

LaurentWindow LaurentWindow::shifted(int k) const {
  LaurentWindow w = *this;
  w.lo += k;
  w.hi += k;
  return w;
}

LaurentWindow LaurentWindow::from_poly(const PolyC& p) {
  LaurentWindow w;
  w.lo = 0;
  w.hi = p.degree().value_or(0);
  w.coeffs.assign(p.coeffs().begin(), p.coeffs().end());
  if (w.coeffs.empty()) w.coeffs.push_back(0.0);
  return w;
}

namespace {

constexpr long long kFar = 1LL << 40;

struct Extent {
  long long nz_lo, nz_hi;        // where coefficients may be nonzero
  long long known_lo, known_hi;  // where coefficients are known
};

Extent extent_of(const LaurentWindow& w) {
  switch (w.truncation) {
    case Truncation::kNone:
      return {w.lo, w.hi, -kFar, kFar};
    case Truncation::kAbove:
      return {w.lo, kFar, -kFar, w.hi};
    case Truncation::kBelow:
      return {-kFar, w.hi, w.lo, kFar};
  }
  return {};
}

Truncation combined_truncation(const LaurentWindow& a, const LaurentWindow& b) {
  const bool above = a.truncation == Truncation::kAbove || b.truncation == Truncation::kAbove;
  const bool below = a.truncation == Truncation::kBelow || b.truncation == Truncation::kBelow;
  if (above && below) throw InvalidArgument("cannot combine windows truncated on opposite sides");
  if (above) return Truncation::kAbove;
  if (below) return Truncation::kBelow;
  return Truncation::kNone;
}

template <typename Determined, typename Coefficient>
LaurentWindow collect(long long cand_lo, long long cand_hi, Determined determined, Coefficient coefficient,
                      Truncation trunc, double tail) {
  long long first = kFar, last = -kFar;
  for (long long n = cand_lo; n <= cand_hi; ++n) {
    if (!determined(n)) continue;
    if (first == kFar) first = n;
    else if (n != last + 1) break;
    last = n;
  }
  if (first == kFar) throw InvalidArgument("windows share no determinable power");
  LaurentWindow out;
  out.lo = static_cast<int>(first);
  out.hi = static_cast<int>(last);
  out.truncation = trunc;
  out.tail_bound = tail;
  for (long long n = first; n <= last; ++n) out.coeffs.push_back(coefficient(static_cast<int>(n)));
  return out;
}

double combined_tail(const LaurentWindow& a, const LaurentWindow& b) {
  return (a.tail_bound == 0.0 && b.tail_bound == 0.0) ? 0.0 : std::numeric_limits<double>::infinity();
}

}  // namespace

LaurentWindow add(const LaurentWindow& a, const LaurentWindow& b) {
  const Extent ea = extent_of(a), eb = extent_of(b);
  auto determined = [&](long long n) {
    return n >= ea.known_lo && n <= ea.known_hi && n >= eb.known_lo && n <= eb.known_hi;
  };
  auto coefficient = [&](int n) { return a.at(n) + b.at(n); };
  return collect(std::min(a.lo, b.lo), std::max(a.hi, b.hi), determined, coefficient, combined_truncation(a, b),
                 combined_tail(a, b));
}

LaurentWindow multiply(const LaurentWindow& a, const LaurentWindow& b) {
  const Extent ea = extent_of(a), eb = extent_of(b);
  auto determined = [&](long long n) {
    const long long i_min = std::max(ea.nz_lo, n - eb.nz_hi);
    const long long i_max = std::min(ea.nz_hi, n - eb.nz_lo);
    if (i_min > i_max) return true;
    return ea.known_lo <= i_min && i_max <= ea.known_hi && eb.known_lo <= n - i_max && n - i_min <= eb.known_hi;
  };
  auto coefficient = [&](int n) {
    cplx acc = 0.0;
    for (int i = a.lo; i <= a.hi; ++i) acc += a.at(i) * b.at(n - i);
    return acc;
  };
  return collect(static_cast<long long>(a.lo) + b.lo, static_cast<long long>(a.hi) + b.hi, determined, coefficient,
                 combined_truncation(a, b), combined_tail(a, b));
}

LaurentWindow laurent_at_zero(const RationalC& w, int hi) {
  if (w.is_zero()) return LaurentWindow::from_poly({});
  const int m = vanishing_order(w.den(), 0.0).value_or(0);
  if (hi < -m) throw InvalidArgument("laurent_at_zero: window ends below the pole order");
  const PolyC reduced_den = drop_low(w.den(), m);
  LaurentWindow out;
  out.lo = -m;
  if (reduced_den.degree() == 0) {
    out.truncation = Truncation::kNone;
    const PolyC q = w.num() * (1.0 / reduced_den[0]);
    out.hi = std::max(*q.degree() - m, -m);
    out.coeffs.resize(static_cast<std::size_t>(out.hi - out.lo + 1), 0.0);
    for (int k = 0; k <= *q.degree(); ++k) out.coeffs[static_cast<std::size_t>(k)] = q[k];
    return out;
  }
  out.truncation = Truncation::kAbove;
  out.tail_bound = std::numeric_limits<double>::infinity();
  out.hi = hi;
  out.coeffs = series_quotient(w.num(), reduced_den, hi + m + 1);
  return out;
}

LaurentWindow exp_principal_series(const PrincipalPart& h, int lo) {
  if (lo > 0) throw InvalidArgument("exp_principal_series: lo must be <= 0");
  // e^h as a power series in w = 1/z: n e_n = sum_{j=1..min(n,d)} j c_j e_{n-j}.
  const int depth = -lo;
  const int d = h.order();
  std::vector<cplx> e(static_cast<std::size_t>(depth) + 1, 0.0);
  e[0] = 1.0;
  for (int n = 1; n <= depth; ++n) {
    cplx acc = 0.0;
    for (int j = 1; j <= std::min(n, d); ++j) acc += static_cast<double>(j) * h.coeff(j) * e[static_cast<std::size_t>(n - j)];
    e[static_cast<std::size_t>(n)] = acc / static_cast<double>(n);
  }
  LaurentWindow out;
  out.lo = lo;
  out.hi = 0;
  out.truncation = Truncation::kBelow;
  out.tail_bound = 0.0;
  out.coeffs.assign(e.rbegin(), e.rend());
  return out;
}

cplx residue_meromorphic(const RationalC& w, const SpherePoint& at) {
  if (w.is_zero()) return 0.0;
  if (!at.infinite) {
    const int m = vanishing_order(w.den(), at.z).value_or(0);
    if (m == 0) return 0.0;
    const PolyC n_loc = w.num().taylor_shift(at.z);
    const PolyC d_loc = drop_low(w.den().taylor_shift(at.z), m);
    return series_quotient(n_loc, d_loc, m).back();
  }
  // Res_{z=inf} w = -Res_{u=0} w(1/u)/u^2 and w(1/u) = u^{dD-dN} Nrev(u)/Drev(u).
  const int dn = *w.num().degree();
  const int dd = *w.den().degree();
  const int index = dn - dd + 1;
  if (index < 0) return 0.0;
  std::vector<cplx> nrev(w.num().coeffs().rbegin(), w.num().coeffs().rend());
  std::vector<cplx> drev(w.den().coeffs().rbegin(), w.den().coeffs().rend());
  return -series_quotient(PolyC(std::move(nrev)), PolyC(std::move(drev)), index + 1).back();
}

TruncatedResidue residue_exp_product(const LaurentWindow& alpha, const PrincipalPart& h, int trunc,
                                     const ResidueSeriesOptions& opts) {
  if (trunc < 1) throw InvalidArgument("residue_exp_product: trunc must be >= 1");
  if (alpha.truncation == Truncation::kBelow)
    throw InvalidArgument("residue_exp_product: alpha must be a power-series window");
  if (alpha.truncation == Truncation::kAbove && alpha.hi < trunc)
    throw InvalidArgument("residue_exp_product: alpha does not supply coefficients up to trunc");

  const LaurentWindow e = exp_principal_series(h, -1 - trunc);
  // [e^h]_p vanishes for p > 0, so only m >= -1 contribute.
  const int start = std::max(alpha.lo, -1);
  std::vector<cplx> terms;
  for (int m = start; m <= trunc; ++m) terms.push_back(alpha.at(m) * e.at(-1 - m));

  cplx value = 0.0;
  for (const auto& t : terms) value += t;

  // Blocks of d consecutive terms, aligned to end at trunc.
  const std::size_t block = static_cast<std::size_t>(h.order());
  std::vector<double> blocks;
  for (std::size_t end = terms.size(); end > 0;) {
    const std::size_t begin = end >= block ? end - block : 0;
    double mag = 0.0;
    for (std::size_t i = begin; i < end; ++i) mag += std::abs(terms[i]);
    blocks.push_back(mag);
    end = begin;
  }
  std::reverse(blocks.begin(), blocks.end());

  const double tail = blocks.empty() ? 0.0 : blocks.back();
  const auto span = static_cast<std::size_t>(std::max(opts.decay_span, 1));
  if (blocks.size() > span) {
    const double last = blocks.back();
    const double earlier = blocks[blocks.size() - 1 - span];
    if (last > std::numeric_limits<double>::min() && last >= earlier)
      throw ConvergenceError("residue series: block magnitudes are not decaying");
  }
  return {value, tail};
}

}  // namespace expc
