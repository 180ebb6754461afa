#pragma once

// Contour representatives of relative homology classes for e^P dz, P a polynomial
// (one puncture at infinity).

#include <optional>
#include <vector>

#include "expc/algebra.hpp"
#include "expc/curve.hpp"

namespace expc {

struct Ray {
  double angle = 0.0;
  double start_radius = 0.0;
  friend bool operator==(const Ray&, const Ray&) = default;
};

/// Path from the ramification point `source` to `target`: in along the source
/// ray from infinity to its start radius, along the connector polyline, then out
/// along the target ray. Integrals follow this geometric order.
struct RelativeCycle {
  RamPoint source;
  RamPoint target;
  Ray inbound;
  std::vector<cplx> connector;
  Ray outbound;
  /// +1 as generated by standard_basis, -1 after reverse().
  int orientation = 1;
};

bool operator==(const RamPoint& a, const RamPoint& b);
bool operator==(const RelativeCycle& a, const RelativeCycle& b);

/// gamma_1..gamma_{d-1}, all starting at the same ramification point w*_0.
struct CycleBasis {
  PolyC exponent;
  double base_radius = 0.0;
  std::vector<RelativeCycle> cycles;
};

/// Half the radius rho at which sum_{k>=1} |a_k| rho^k = 1. Keeps |e^P| of order one on the
/// connector arc, also after doubling.
double default_base_radius(const PolyC& exponent);

/// Base point w*_0 is the descent ray whose angle, taken in (-pi, pi], is smallest;
/// targets follow counterclockwise. Each connector is a polyline inscribed in the
/// counterclockwise arc of radius base_radius. Degree <= 1 gives an empty basis.
CycleBasis standard_basis(const PolyC& exponent, std::optional<double> base_radius = std::nullopt);

RelativeCycle reverse(const RelativeCycle& cycle);

}  // namespace expc
