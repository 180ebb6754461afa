#pragma once

// Exponential periods  int_gamma Q(z) e^{P(z)} dz  over relative cycles.
//
// Each ray is cut at a radius T where an analytic bound on the remaining tail
// is below tol/4; the finite pieces are integrated with adaptive Gauss-Kronrod
// (7/15) panels whose error budgets sum to tol/2.

#include <functional>
#include <span>
#include <vector>

#include "expc/algebra.hpp"
#include "expc/homology.hpp"

namespace expc {

struct PeriodValue {
  cplx value;
  /// Panel-quadrature estimate plus the ray tail bounds.
  double abs_error_estimate = 0.0;
  double truncation_radius = 0.0;
  long evaluations = 0;
  /// False when the panel budget ran out before the error target was met; `value`
  /// is then the best available estimate.
  bool converged = true;
};

struct QuadratureOptions {
  int max_subdivisions = 2000;
};

/// Result of integrating m complex components over a real interval.
struct PanelResult {
  std::vector<cplx> values;
  std::vector<double> errors;
  long evaluations = 0;
  bool converged = true;
};

/// Globally adaptive Gauss-Kronrod 7/15 for vector-valued integrands. Refines the
/// panel with the largest component error until every component's summed error is
/// at most abs_tol. Deterministic for fixed inputs.
PanelResult integrate_panels(const std::function<void(double, std::span<cplx>)>& f, std::size_t components,
                             double a, double b, double abs_tol, int max_subdivisions);

/// Bound on int_T^inf |Q(r e^{i theta})| |e^{P(r e^{i theta})}| dr along any descent ray of P,
/// valid for T >= ray_bound_start(P).
double ray_tail_bound(const PolyC& form, const PolyC& exponent, double T);

/// Radius beyond which Re(P - P(0)) <= -|a_d| r^d / 2 along descent rays.
double ray_bound_start(const PolyC& exponent);

/// Periods of several forms Q_i e^P dz over one cycle, sharing truncation radius and panels.
std::vector<PeriodValue> periods(std::span<const PolyC> forms, const PolyC& exponent, const RelativeCycle& cycle,
                                 double tol, const QuadratureOptions& opts = {});

PeriodValue period(const PolyC& form, const PolyC& exponent, const RelativeCycle& cycle, double tol,
                   const QuadratureOptions& opts = {});

/// Periods of z^j e^P dz for j = 0..maxpow.
std::vector<PeriodValue> period_row(const PolyC& exponent, const RelativeCycle& cycle, int maxpow, double tol,
                                    const QuadratureOptions& opts = {});

}  // namespace expc
