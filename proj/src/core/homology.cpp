#include "expc/homology.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "expc/error.hpp"

namespace expc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaxChordAngle = kPi / 8.0;

double signed_angle(double a) { return a > kPi ? a - 2.0 * kPi : a; }

double ccw_gap(double from, double to) {
  double g = std::fmod(to - from, 2.0 * kPi);
  if (g < 0.0) g += 2.0 * kPi;
  return g;
}

std::vector<cplx> arc_polyline(double radius, double from, double sweep) {
  const int chords = std::max(2, static_cast<int>(std::ceil(sweep / kMaxChordAngle)));
  std::vector<cplx> pts;
  pts.reserve(static_cast<std::size_t>(chords) + 1);
  for (int i = 0; i <= chords; ++i) pts.push_back(std::polar(radius, from + sweep * i / chords));
  return pts;
}

}  // namespace

bool operator==(const RamPoint& a, const RamPoint& b) {
  return a.puncture_index == b.puncture_index && a.sector == b.sector && a.central_angle == b.central_angle;
}

bool operator==(const RelativeCycle& a, const RelativeCycle& b) {
  return a.source == b.source && a.target == b.target && a.inbound == b.inbound && a.outbound == b.outbound &&
         a.connector == b.connector && a.orientation == b.orientation;
}

double default_base_radius(const PolyC& exponent) {
  const auto deg = exponent.degree();
  if (!deg || *deg < 1) throw InvalidArgument("default_base_radius: degree must be >= 1");
  auto growth = [&](double r) {
    double s = 0.0;
    for (int k = 1; k <= *deg; ++k) s += std::abs(exponent[k]) * std::pow(r, k);
    return s;
  };
  double hi = 1.0;
  while (growth(hi) < 1.0) hi *= 2.0;
  double lo = 0.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (growth(mid) < 1.0 ? lo : hi) = mid;
  }
  return 0.5 * hi;
}

CycleBasis standard_basis(const PolyC& exponent, std::optional<double> base_radius) {
  const auto deg = exponent.degree();
  if (!deg || *deg < 1) throw InvalidArgument("standard_basis: degree must be >= 1");
  CycleBasis basis;
  basis.exponent = exponent;
  basis.base_radius = base_radius.value_or(default_base_radius(exponent));
  if (!(basis.base_radius > 0.0)) throw InvalidArgument("standard_basis: base_radius must be positive");
  const int d = *deg;
  if (d <= 1) return basis;

  const auto angles = descent_angles(exponent);
  std::vector<RamPoint> points;
  for (int m = 0; m < d; ++m) points.push_back({0, m, angles[static_cast<std::size_t>(m)]});

  const auto src = *std::min_element(points.begin(), points.end(), [](const RamPoint& a, const RamPoint& b) {
    return signed_angle(a.central_angle) < signed_angle(b.central_angle);
  });
  std::vector<RamPoint> targets;
  for (const auto& p : points) {
    if (p.sector != src.sector) targets.push_back(p);
  }
  std::sort(targets.begin(), targets.end(), [&](const RamPoint& a, const RamPoint& b) {
    return ccw_gap(src.central_angle, a.central_angle) < ccw_gap(src.central_angle, b.central_angle);
  });

  const double r = basis.base_radius;
  for (const auto& tgt : targets) {
    RelativeCycle c;
    c.source = src;
    c.target = tgt;
    c.inbound = {src.central_angle, r};
    c.outbound = {tgt.central_angle, r};
    c.connector = arc_polyline(r, src.central_angle, ccw_gap(src.central_angle, tgt.central_angle));
    c.connector.back() = std::polar(r, tgt.central_angle);
    basis.cycles.push_back(std::move(c));
  }
  return basis;
}

RelativeCycle reverse(const RelativeCycle& cycle) {
  RelativeCycle r;
  r.source = cycle.target;
  r.target = cycle.source;
  r.inbound = cycle.outbound;
  r.outbound = cycle.inbound;
  r.connector.assign(cycle.connector.rbegin(), cycle.connector.rend());
  r.orientation = -cycle.orientation;
  return r;
}

}  // namespace expc
