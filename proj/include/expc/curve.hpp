#pragma once

// Genus-zero exp-algebraic curve data: punctures with principal parts,
// their descent directions, and divisors of g * e^h.

#include <vector>

#include "expc/algebra.hpp"

namespace expc {

/// One puncture of the sphere. For a finite location p the principal part is in
/// the coordinate u = z - p; at infinity it is in u = 1/z, so c_j multiplies z^j.
struct Puncture {
  SpherePoint location;
  PrincipalPart h;
};

class ExpCurveGZ {
 public:
  explicit ExpCurveGZ(std::vector<Puncture> punctures);

  /// Single puncture at infinity with h = P - P(0); requires deg P >= 1.
  static ExpCurveGZ one_puncture(const PolyC& exponent);

  const std::vector<Puncture>& punctures() const noexcept { return punctures_; }
  /// Sum of pole orders, which is the number of infinite-order ramification points.
  int total_order() const noexcept { return total_order_; }
  /// The polynomial P (without constant term) when the curve is a single puncture at infinity.
  std::optional<PolyC> exponent_polynomial() const;

 private:
  std::vector<Puncture> punctures_;
  int total_order_ = 0;
};

/// An infinite-order ramification point, i.e. a descent ray at a puncture.
struct RamPoint {
  int puncture_index = 0;
  int sector = 0;
  /// Direction of the ray in radians, normalised to [0, 2pi). For a puncture at
  /// infinity it is the direction in the z-plane as z -> infinity; for a finite
  /// puncture it is the direction in the local coordinate u = z - p as u -> 0.
  double central_angle = 0.0;
};

/// Descent directions of e^P as z -> infinity, ascending in [0, 2pi).
std::vector<double> descent_angles(const PolyC& exponent);

std::vector<RamPoint> ramification_points(const ExpCurveGZ& curve);

/// Finite formal sum of points of the sphere with nonzero integer multiplicities.
class Divisor {
 public:
  struct Entry {
    SpherePoint point;
    int multiplicity;
  };

  /// Adds mult at p, merging with an existing entry within a small relative distance.
  void add(const SpherePoint& p, int mult);
  int multiplicity(const SpherePoint& p) const;
  int degree() const noexcept;
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  friend Divisor operator+(Divisor a, const Divisor& b);

 private:
  std::vector<Entry> entries_;
};

/// Divisor of f = g * prod e^{h_i}: zeros and poles of g, plus the order of g in the
/// local coordinate at each puncture. Rejects g = 0.
Divisor divisor_of(const RationalC& g, const ExpCurveGZ& curve);

/// Order of g at a point of the sphere, via exact substitution into num and den.
int order_at(const RationalC& g, const SpherePoint& p);

inline bool degree_check(const Divisor& dv) { return dv.degree() == 0; }

}  // namespace expc
