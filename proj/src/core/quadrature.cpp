#include "expc/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "expc/error.hpp"

namespace expc {

namespace {

// Kronrod 15-point abscissae and weights; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  std::vector<cplx> values;
  std::vector<double> errors;
  double worst = 0.0;
};

Panel gk15(const std::function<void(double, std::span<cplx>)>& f, std::size_t m, double a, double b,
           std::vector<cplx>& scratch) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::vector<cplx> kron(m, 0.0), gauss(m, 0.0);
  auto accumulate = [&](double x, double wk, double wg) {
    f(x, scratch);
    for (std::size_t c = 0; c < m; ++c) {
      kron[c] += wk * scratch[c];
      gauss[c] += wg * scratch[c];
    }
  };
  accumulate(centre, kWgk[7], kWg[3]);
  for (std::size_t i = 0; i < 7; ++i) {
    const double wg = (i % 2 == 1) ? kWg[i / 2] : 0.0;
    const double dx = half * kXgk[i];
    accumulate(centre - dx, kWgk[i], wg);
    accumulate(centre + dx, kWgk[i], wg);
  }
  Panel p{a, b, std::vector<cplx>(m), std::vector<double>(m), 0.0};
  for (std::size_t c = 0; c < m; ++c) {
    p.values[c] = kron[c] * half;
    p.errors[c] = std::abs((kron[c] - gauss[c]) * half);
    if (!std::isfinite(p.errors[c]) || !std::isfinite(std::abs(p.values[c])))
      p.errors[c] = std::numeric_limits<double>::infinity();
    p.worst = std::max(p.worst, p.errors[c]);
  }
  return p;
}

/// Straight piece of the contour, z(t) = origin + t * direction for t in [t0, t1].
struct Segment {
  cplx origin;
  cplx direction;
  double t0, t1;
};

}  // namespace

PanelResult integrate_panels(const std::function<void(double, std::span<cplx>)>& f, std::size_t components,
                             double a, double b, double abs_tol, int max_subdivisions) {
  std::vector<cplx> scratch(components);
  std::vector<Panel> panels;
  panels.push_back(gk15(f, components, a, b, scratch));
  PanelResult out;
  out.evaluations = 15;

  auto totals = [&]() {
    std::vector<double> err(components, 0.0);
    for (const auto& p : panels)
      for (std::size_t c = 0; c < components; ++c) err[c] += p.errors[c];
    return err;
  };

  while (true) {
    const auto err = totals();
    const bool done = std::all_of(err.begin(), err.end(), [&](double e) { return e <= abs_tol; });
    if (done) break;
    if (static_cast<int>(panels.size()) >= max_subdivisions) {
      out.converged = false;
      break;
    }
    const auto worst = std::max_element(panels.begin(), panels.end(),
                                        [](const Panel& x, const Panel& y) { return x.worst < y.worst; });
    const double lo = worst->a, hi = worst->b, mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) {
      out.converged = false;
      break;
    }
    *worst = gk15(f, components, lo, mid, scratch);
    panels.push_back(gk15(f, components, mid, hi, scratch));
    out.evaluations += 30;
  }

  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  out.values.assign(components, 0.0);
  out.errors.assign(components, 0.0);
  for (const auto& p : panels) {
    for (std::size_t c = 0; c < components; ++c) {
      out.values[c] += p.values[c];
      out.errors[c] += p.errors[c];
    }
  }
  return out;
}

double ray_bound_start(const PolyC& exponent) {
  const int d = exponent.degree().value_or(0);
  if (d < 1) throw InvalidArgument("ray_bound_start: degree must be >= 1");
  double lower = 0.0;
  for (int k = 1; k < d; ++k) lower += std::abs(exponent[k]);
  return std::max(1.0, 2.0 * lower / std::abs(exponent.leading()));
}

double ray_tail_bound(const PolyC& form, const PolyC& exponent, double T) {
  if (form.is_zero()) return 0.0;
  const int d = *exponent.degree();
  const int n = *form.degree();
  const double qs = form.abs_bound(1.0);
  const double c = 0.5 * std::abs(exponent.leading());
  const double s = static_cast<double>(n + 1) / d;
  const double u = c * std::pow(T, d);
  // int_T^inf r^n e^{-c r^d} dr = c^{-s} Gamma(s, c T^d) / d, with
  // Gamma(s, U) <= U^{s-1} e^{-U} / (1 - (s-1)/U) for U > s-1 (factor 1 when s <= 1).
  double factor = 1.0;
  if (s > 1.0) {
    if (u <= s - 1.0) return std::numeric_limits<double>::infinity();
    factor = u / (u - (s - 1.0));
  }
  const double gamma_bound = std::exp((s - 1.0) * std::log(u) - u) * factor;
  return std::exp(exponent[0].real()) * qs * std::pow(c, -s) * gamma_bound / d;
}

std::vector<PeriodValue> periods(std::span<const PolyC> forms, const PolyC& exponent, const RelativeCycle& cycle,
                                 double tol, const QuadratureOptions& opts) {
  const auto deg = exponent.degree();
  if (!deg || *deg < 1) throw InvalidArgument("period: exponent must have degree >= 1");
  if (!(tol > 0.0)) throw InvalidArgument("period: tol must be positive");
  if (cycle.connector.size() < 2) throw InvalidArgument("period: connector needs at least two vertices");
  const int d = *deg;
  const cplx lead = exponent.leading();
  for (const Ray* ray : {&cycle.inbound, &cycle.outbound}) {
    const cplx phase = std::polar(1.0, std::arg(lead) + d * ray->angle);
    if (std::abs(phase + 1.0) > 1e-8) throw DomainError("period: cycle ray is not a descent ray of the exponent");
  }

  // Shared truncation radius: every form's tail on each ray is below tol/4.
  const double start = std::max(cycle.inbound.start_radius, cycle.outbound.start_radius);
  double T = std::max(ray_bound_start(exponent), start);
  auto tails_ok = [&](double r) {
    return std::all_of(forms.begin(), forms.end(),
                       [&](const PolyC& q) { return ray_tail_bound(q, exponent, r) <= 0.25 * tol; });
  };
  for (int it = 0; !tails_ok(T); ++it) {
    if (it > 4000) throw ConvergenceError("period: could not find a truncation radius");
    T *= 1.02;
  }

  std::vector<Segment> segments;
  {
    const cplx e_in = std::polar(1.0, cycle.inbound.angle);
    // inbound: from T e^{i theta} down to r0 e^{i theta}
    segments.push_back({0.0, -e_in, -T, -cycle.inbound.start_radius});
    for (std::size_t i = 0; i + 1 < cycle.connector.size(); ++i)
      segments.push_back({cycle.connector[i], cycle.connector[i + 1] - cycle.connector[i], 0.0, 1.0});
    const cplx e_out = std::polar(1.0, cycle.outbound.angle);
    segments.push_back({0.0, e_out, cycle.outbound.start_radius, T});
  }

  const std::size_t m = forms.size();
  const double segment_tol = 0.5 * tol / static_cast<double>(segments.size());
  std::vector<PeriodValue> out(m);
  for (auto& pv : out) pv.truncation_radius = T;

  for (const auto& seg : segments) {
    auto integrand = [&](double t, std::span<cplx> vals) {
      const cplx z = seg.origin + t * seg.direction;
      const cplx w = std::exp(exponent(z)) * seg.direction;
      for (std::size_t i = 0; i < m; ++i) vals[i] = forms[i](z) * w;
    };
    const auto res = integrate_panels(integrand, m, seg.t0, seg.t1, segment_tol, opts.max_subdivisions);
    for (std::size_t i = 0; i < m; ++i) {
      out[i].value += res.values[i];
      out[i].abs_error_estimate += res.errors[i];
      out[i].evaluations += res.evaluations;
      out[i].converged = out[i].converged && res.converged;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    out[i].abs_error_estimate += 2.0 * ray_tail_bound(forms[i], exponent, T);
    if (!(out[i].abs_error_estimate <= tol)) out[i].converged = false;
  }
  return out;
}

PeriodValue period(const PolyC& form, const PolyC& exponent, const RelativeCycle& cycle, double tol,
                   const QuadratureOptions& opts) {
  return periods(std::span<const PolyC>(&form, 1), exponent, cycle, tol, opts).front();
}

std::vector<PeriodValue> period_row(const PolyC& exponent, const RelativeCycle& cycle, int maxpow, double tol,
                                    const QuadratureOptions& opts) {
  if (maxpow < 0) throw InvalidArgument("period_row: maxpow must be >= 0");
  std::vector<PolyC> forms;
  for (int j = 0; j <= maxpow; ++j) forms.push_back(PolyC::monomial(j));
  return periods(forms, exponent, cycle, tol, opts);
}

}  // namespace expc
