#include "expc/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "expc/error.hpp"

namespace expc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double normalize_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fold values that round up to 2pi back to 0
  if (r >= kTwoPi) r = 0.0;
  return r;
}

bool same_point(const SpherePoint& a, const SpherePoint& b) {
  if (a.infinite || b.infinite) return a.infinite == b.infinite;
  return std::abs(a.z - b.z) <= 1e-6 * std::max(1.0, std::abs(a.z));
}

/// Angles (offset + 2 pi m) / d normalised and sorted.
std::vector<double> equally_spaced(double offset, int d) {
  std::vector<double> out;
  for (int m = 0; m < d; ++m) out.push_back(normalize_angle((offset + kTwoPi * m) / d));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ExpCurveGZ::ExpCurveGZ(std::vector<Puncture> punctures) : punctures_(std::move(punctures)) {
  if (punctures_.empty()) throw InvalidArgument("an exp-algebraic curve needs at least one puncture");
  for (std::size_t i = 0; i < punctures_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (same_point(punctures_[i].location, punctures_[j].location))
        throw InvalidArgument("puncture locations must be pairwise distinct");
    }
    total_order_ += punctures_[i].h.order();
  }
}

ExpCurveGZ ExpCurveGZ::one_puncture(const PolyC& exponent) {
  const auto deg = exponent.degree();
  if (!deg || *deg < 1) throw InvalidArgument("exponent polynomial must have degree >= 1");
  std::vector<cplx> c(exponent.coeffs().begin() + 1, exponent.coeffs().end());
  return ExpCurveGZ({Puncture{SpherePoint::infinity(), PrincipalPart(std::move(c))}});
}

std::optional<PolyC> ExpCurveGZ::exponent_polynomial() const {
  if (punctures_.size() != 1 || !punctures_[0].location.infinite) return std::nullopt;
  std::vector<cplx> c{0.0};
  const auto h = punctures_[0].h.coeffs();
  c.insert(c.end(), h.begin(), h.end());
  return PolyC(std::move(c));
}

std::vector<double> descent_angles(const PolyC& exponent) {
  const auto deg = exponent.degree();
  if (!deg || *deg < 1) throw InvalidArgument("descent_angles: degree must be >= 1");
  // Re(a_d z^d) = |a_d| r^d cos(arg a_d + d theta) is most negative at arg a_d + d theta = pi.
  return equally_spaced(std::numbers::pi - std::arg(exponent.leading()), *deg);
}

std::vector<RamPoint> ramification_points(const ExpCurveGZ& curve) {
  std::vector<RamPoint> out;
  const auto& ps = curve.punctures();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const auto& h = ps[i].h;
    const int d = h.order();
    // At infinity h = sum c_j z^j; at a finite point h = sum c_j u^{-j}, whose leading term
    // c_d r^{-d} e^{-i d theta} has most negative real part at arg c_d - d theta = pi.
    const double offset = ps[i].location.infinite ? std::numbers::pi - std::arg(h.leading())
                                                  : std::arg(h.leading()) - std::numbers::pi;
    const auto angles = equally_spaced(offset, d);
    for (int m = 0; m < d; ++m) out.push_back({static_cast<int>(i), m, angles[static_cast<std::size_t>(m)]});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Divisor

void Divisor::add(const SpherePoint& p, int mult) {
  if (mult == 0) return;
  for (auto it = entries_.begin(); it != entries_.end(); ++it) {
    if (same_point(it->point, p)) {
      it->multiplicity += mult;
      if (it->multiplicity == 0) entries_.erase(it);
      return;
    }
  }
  entries_.push_back({p, mult});
}

int Divisor::multiplicity(const SpherePoint& p) const {
  for (const auto& e : entries_) {
    if (same_point(e.point, p)) return e.multiplicity;
  }
  return 0;
}

int Divisor::degree() const noexcept {
  int s = 0;
  for (const auto& e : entries_) s += e.multiplicity;
  return s;
}

Divisor operator+(Divisor a, const Divisor& b) {
  for (const auto& e : b.entries()) a.add(e.point, e.multiplicity);
  return a;
}

int order_at(const RationalC& g, const SpherePoint& p) {
  if (g.is_zero()) throw InvalidArgument("order of the zero function is undefined");
  if (p.infinite) return *g.den().degree() - *g.num().degree();
  return vanishing_order(g.num(), p.z).value_or(0) - vanishing_order(g.den(), p.z).value_or(0);
}

Divisor divisor_of(const RationalC& g, const ExpCurveGZ& curve) {
  if (g.is_zero()) throw InvalidArgument("divisor_of: g must be nonzero");
  Divisor dv;
  std::vector<SpherePoint> finite_punctures;
  for (const auto& pu : curve.punctures()) {
    if (!pu.location.infinite) finite_punctures.push_back(pu.location);
  }
  auto near_puncture = [&](cplx z) {
    return std::any_of(finite_punctures.begin(), finite_punctures.end(),
                       [&](const SpherePoint& p) { return same_point(p, SpherePoint::at(z)); });
  };
  for (const auto& cl : clustered_roots(g.num())) {
    if (!near_puncture(cl.location)) dv.add(SpherePoint::at(cl.location), cl.multiplicity);
  }
  for (const auto& cl : clustered_roots(g.den())) {
    if (!near_puncture(cl.location)) dv.add(SpherePoint::at(cl.location), -cl.multiplicity);
  }
  for (const auto& p : finite_punctures) dv.add(p, order_at(g, p));
  dv.add(SpherePoint::infinity(), order_at(g, SpherePoint::infinity()));
  return dv;
}

}  // namespace expc
