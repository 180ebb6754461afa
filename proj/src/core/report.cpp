#include "expc/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "expc/cohomology.hpp"
#include "expc/error.hpp"
#include "expc/literal.hpp"
#include "expc/quadrature.hpp"

namespace expc {

json to_json(cplx c) { return json::array({c.real(), c.imag()}); }

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("expected a complex number [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const PolyC& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

namespace {

json complex_array(const std::vector<cplx>& v) {
  json arr = json::array();
  for (const auto& c : v) arr.push_back(to_json(c));
  return arr;
}

json ram_point_json(const RamPoint& p) {
  return {{"puncture", p.puncture_index}, {"sector", p.sector}, {"angle", p.central_angle}};
}

json location_json(const SpherePoint& p) { return p.infinite ? json("inf") : to_json(p.z); }

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json matrix_json(const PeriodMatrix& m) {
  json rows = json::array();
  for (int k = 0; k < m.rows(); ++k) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.entry(k, j)));
    rows.push_back(row);
  }
  return rows;
}

json matrix_errors_json(const PeriodMatrix& m) {
  json rows = json::array();
  for (int k = 0; k < m.rows(); ++k) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.error(k, j));
    rows.push_back(row);
  }
  return rows;
}

json curve_recovery_json(const CurveRecovery& cr) {
  json out = {{"degree", cr.matrix.cols()},
              {"exponent", to_json(cr.matrix.exponent())},
              {"rank", cr.nondegeneracy.rank},
              {"min_singular_ratio", cr.nondegeneracy.min_sv_ratio},
              {"singular_values", cr.nondegeneracy.singular_values},
              {"nondegenerate", cr.nondegeneracy.ok},
              {"converged", cr.matrix.converged()},
              {"max_period_error", cr.matrix.max_error()},
              {"matrix", matrix_json(cr.matrix)},
              {"matrix_errors", matrix_errors_json(cr.matrix)}};
  if (cr.recovery) {
    out["kernel"] = complex_array(cr.recovery->kernel_vector);
    out["recovered_Pprime"] = to_json(cr.recovery->recovered_derivative);
    out["kernel_residual"] = cr.recovery->residual;
    out["spectral_gap"] = cr.recovery->spectral_gap;
    out["scale_note"] = cr.recovery->scale_note;
  } else {
    out["kernel"] = nullptr;
    out["recovered_Pprime"] = nullptr;
  }
  return out;
}

ReportStatus recovery_status(const CurveRecovery& cr) {
  if (!cr.nondegeneracy.ok || !cr.recovery) return ReportStatus::kVerificationFailed;
  if (!cr.matrix.converged()) return ReportStatus::kToleranceNotMet;
  return ReportStatus::kOk;
}

ReportStatus worst(ReportStatus a, ReportStatus b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }

}  // namespace

json to_json(const RelativeCycle& c) {
  json conn = json::array();
  for (const auto& z : c.connector) conn.push_back(to_json(z));
  return {{"source", ram_point_json(c.source)},
          {"target", ram_point_json(c.target)},
          {"inbound_ray", {{"angle", c.inbound.angle}, {"start_radius", c.inbound.start_radius}}},
          {"connector", conn},
          {"outbound_ray", {{"angle", c.outbound.angle}, {"start_radius", c.outbound.start_radius}}},
          {"orientation", c.orientation}};
}

json to_json(const CycleBasis& b) {
  json cycles = json::array();
  for (const auto& c : b.cycles) cycles.push_back(to_json(c));
  return {{"exponent", to_json(b.exponent)}, {"base_radius", b.base_radius}, {"cycles", cycles}};
}

ExpCurveGZ curve_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    throw ParseError("malformed curve spec at line " + std::to_string(line) + ", column " + std::to_string(col) +
                         ": " + e.what(),
                     line, col);
  }
  if (!doc.is_object()) throw ParseError("curve spec must be a JSON object");
  if (doc.contains("genus") && !(doc["genus"].is_number_integer() && doc["genus"].get<int>() == 0))
    throw ParseError("curve spec: only genus 0 is supported");
  if (!doc.contains("punctures") || !doc["punctures"].is_array() || doc["punctures"].empty())
    throw ParseError("curve spec: 'punctures' must be a non-empty array");
  std::vector<Puncture> punctures;
  for (std::size_t i = 0; i < doc["punctures"].size(); ++i) {
    const json& p = doc["punctures"][i];
    const std::string where = "curve spec: punctures[" + std::to_string(i) + "]";
    if (!p.is_object() || !p.contains("location") || !p.contains("principal_part"))
      throw ParseError(where + " needs 'location' and 'principal_part'");
    SpherePoint loc;
    if (p["location"].is_string()) {
      if (p["location"].get<std::string>() != "inf") throw ParseError(where + ".location must be \"inf\" or [re, im]");
      loc = SpherePoint::infinity();
    } else {
      try {
        loc = SpherePoint::at(complex_from_json(p["location"]));
      } catch (const ParseError&) {
        throw ParseError(where + ".location must be \"inf\" or [re, im]");
      }
    }
    if (!p["principal_part"].is_array()) throw ParseError(where + ".principal_part must be an array");
    std::vector<cplx> coeffs;
    for (const auto& c : p["principal_part"]) {
      try {
        coeffs.push_back(complex_from_json(c));
      } catch (const ParseError&) {
        throw ParseError(where + ".principal_part entries must be [re, im]");
      }
    }
    try {
      punctures.push_back({loc, PrincipalPart(std::move(coeffs))});
    } catch (const InvalidArgument& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  try {
    return ExpCurveGZ(std::move(punctures));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("curve spec: ") + e.what());
  }
}

json curve_to_json(const ExpCurveGZ& c) {
  json ps = json::array();
  for (const auto& p : c.punctures()) {
    json pp = json::array();
    for (const auto& x : p.h.coeffs()) pp.push_back(to_json(x));
    ps.push_back({{"location", location_json(p.location)}, {"principal_part", pp}});
  }
  return {{"genus", 0}, {"punctures", ps}};
}

Report surface_info_report(const ExpCurveGZ& curve, const std::optional<RationalC>& g) {
  Report rep;
  json& body = rep.body;
  body = curve_to_json(curve);
  body["command"] = "surface-info";
  body["d_total"] = curve.total_order();
  json points = json::array();
  for (const auto& p : ramification_points(curve)) points.push_back(ram_point_json(p));
  body["ramification_points"] = points;
  if (const auto exponent = curve.exponent_polynomial()) {
    body["exponent"] = to_json(*exponent);
    body["exponent_literal"] = format_poly(*exponent);
    body["h1_dimension"] = h1_dimension(*exponent);
    body["basis"] = to_json(standard_basis(*exponent));
  }
  if (g) {
    const Divisor dv = divisor_of(*g, curve);
    json entries = json::array();
    for (const auto& e : dv.entries())
      entries.push_back({{"point", location_json(e.point)}, {"multiplicity", e.multiplicity}});
    body["divisor"] = {{"entries", entries}, {"degree", dv.degree()}, {"degree_zero", degree_check(dv)}};
    if (!degree_check(dv)) rep.status = ReportStatus::kVerificationFailed;
  }
  return rep;
}

Report periods_report(const PolyC& exponent, int maxpow, double tol, double base_radius) {
  const int d = exponent.degree().value_or(0);
  if (d < 1) throw InvalidArgument("periods: exponent must have degree >= 1");
  const int mp = maxpow < 0 ? std::max(d - 1, 0) : maxpow;
  const CycleBasis basis = standard_basis(exponent, base_radius > 0.0 ? std::optional<double>(base_radius) : std::nullopt);
  Report rep;
  json rows = json::array();
  for (std::size_t k = 0; k < basis.cycles.size(); ++k) {
    const auto& cycle = basis.cycles[k];
    const auto row = period_row(exponent, cycle, mp, tol);
    json vals = json::array(), errs = json::array();
    bool conv = true;
    long evals = 0;
    for (const auto& pv : row) {
      vals.push_back(to_json(pv.value));
      errs.push_back(pv.abs_error_estimate);
      conv = conv && pv.converged;
      evals += pv.evaluations;
    }
    if (!conv) rep.status = ReportStatus::kToleranceNotMet;
    rows.push_back({{"cycle", k + 1},
                    {"source_angle", cycle.source.central_angle},
                    {"target_angle", cycle.target.central_angle},
                    {"truncation_radius", row.empty() ? 0.0 : row.front().truncation_radius},
                    {"periods", vals},
                    {"errors", errs},
                    {"evaluations", evals},
                    {"converged", conv}});
  }
  rep.body = {{"command", "periods"}, {"exponent", to_json(exponent)}, {"degree", d},   {"maxpow", mp},
              {"tol", tol},           {"base_radius", basis.base_radius}, {"rows", rows}};
  return rep;
}

Report reduce_report(const PolyC& form, const PolyC& exponent) {
  const Reduction red = reduce(form, exponent);
  const bool exact = is_exact(form, exponent);
  Report rep;
  rep.body = {{"command", "reduce"},
              {"form", to_json(form)},
              {"exponent", to_json(exponent)},
              {"h1_dimension", h1_dimension(exponent)},
              {"class", complex_array(red.cls.coeffs)},
              {"R", to_json(red.certificate.R)},
              {"certificate_residual", red.certificate.residual},
              {"certificate_scale", red.certificate.scale},
              {"exact", exact}};
  return rep;
}

Report recover_report(const PolyC& exponent, double tol) {
  const CurveRecovery cr = recover_curve(exponent, tol);
  Report rep;
  rep.body = curve_recovery_json(cr);
  rep.body["command"] = "recover";
  // M applied to the coefficient vector of the given P', scaled to the monic convention.
  const int d = cr.matrix.cols();
  const PolyC dp = exponent.derivative() * (1.0 / exponent.leading());
  std::vector<cplx> v(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) v[static_cast<std::size_t>(j)] = dp[j];
  double rel = 0.0, bound = 0.0;
  const auto mv = cr.matrix.apply(v);
  const auto pe = cr.matrix.propagated_error(v);
  for (std::size_t k = 0; k < mv.size(); ++k) {
    rel += std::norm(mv[k]);
    bound += pe[k] * pe[k];
  }
  rep.body["residuals"] = {{"kernel_residual", cr.recovery ? json(cr.recovery->residual) : json(nullptr)},
                           {"kernel_relation_norm", std::sqrt(rel)},
                           {"kernel_relation_propagated_error", std::sqrt(bound)}};
  rep.status = recovery_status(cr);
  return rep;
}

Report verify_report(const PolyC& p1, const PolyC& p2, double tol) {
  const TorelliReport tr = torelli_verify(p1, p2, tol);
  Report rep;
  json& body = rep.body;
  const json first = curve_recovery_json(tr.first);
  body = {{"command", "verify"},
          {"degree", first["degree"]},
          {"rank", first["rank"]},
          {"min_singular_ratio", first["min_singular_ratio"]},
          {"kernel", first["kernel"]},
          {"recovered_Pprime", first["recovered_Pprime"]},
          {"verdict", tr.same ? "same" : "different"},
          {"degrees_match", tr.degrees_match},
          {"parallel", tr.parallel},
          {"distinguisher_zero", tr.distinguisher_zero},
          {"verified", tr.verified},
          {"first", first},
          {"second", curve_recovery_json(*tr.second)}};
  body["residuals"] = {{"kernel_angle", tr.kernel_angle},
                       {"first_kernel_residual", first.value("kernel_residual", json(nullptr))},
                       {"second_kernel_residual", body["second"].value("kernel_residual", json(nullptr))},
                       {"distinguisher_norms", tr.distinguisher_norms},
                       {"distinguisher_scales", tr.distinguisher_scales}};
  rep.status = worst(recovery_status(tr.first), recovery_status(*tr.second));
  return rep;
}

Report case2_report(const PrincipalPart& h, const RationalC& omega_factor, const PolyC& multiplier, int kmax,
                    int trunc) {
  const auto residues = case2_residue_test(h, omega_factor, multiplier, kmax, trunc);
  json rows = json::array();
  bool nonzero = false;
  for (const auto& r : residues) {
    rows.push_back({{"k", r.k}, {"residue", to_json(r.residue)}, {"tail_estimate", r.tail_estimate}});
    if (std::abs(r.residue) > std::max(10.0 * r.tail_estimate, 1e-12)) nonzero = true;
  }
  Report rep;
  rep.body = {{"command", "case2"},
              {"h", json::array()},
              {"omega_factor", {{"num", to_json(omega_factor.num())}, {"den", to_json(omega_factor.den())}}},
              {"multiplier", to_json(multiplier)},
              {"trunc", trunc},
              {"residues", rows},
              {"nonzero_detected", nonzero}};
  for (const auto& c : h.coeffs()) rep.body["h"].push_back(to_json(c));
  return rep;
}

std::string contour_svg(const PolyC& exponent, double base_radius) {
  const int d = exponent.degree().value_or(0);
  if (d < 1) throw InvalidArgument("contour_svg: exponent must have degree >= 1");
  const CycleBasis basis = standard_basis(exponent, base_radius > 0.0 ? std::optional<double>(base_radius) : std::nullopt);
  const double view = 1.2 * std::max(4.0 * basis.base_radius, ray_bound_start(exponent));
  const double px = 240.0 / view;
  auto X = [&](cplx z) { return 250.0 + px * z.real(); };
  auto Y = [&](cplx z) { return 250.0 - px * z.imag(); };
  std::ostringstream svg;
  svg.precision(6);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"500\" height=\"500\" viewBox=\"0 0 500 500\">\n";
  svg << "<rect width=\"500\" height=\"500\" fill=\"white\"/>\n";
  // descent sectors: |arg(a_d z^d) - pi| < pi/2
  const double half_width = std::numbers::pi / (2.0 * d);
  for (double theta : descent_angles(exponent)) {
    svg << "<path d=\"M 250 250";
    for (int i = 0; i <= 16; ++i) {
      const cplx z = std::polar(view * 1.5, theta - half_width + 2.0 * half_width * i / 16.0);
      svg << " L " << X(z) << " " << Y(z);
    }
    svg << " Z\" fill=\"#dbe8f7\" stroke=\"none\"/>\n";
  }
  svg << "<line x1=\"0\" y1=\"250\" x2=\"500\" y2=\"250\" stroke=\"#bbb\"/>\n";
  svg << "<line x1=\"250\" y1=\"0\" x2=\"250\" y2=\"500\" stroke=\"#bbb\"/>\n";
  for (double theta : descent_angles(exponent)) {
    const cplx a = std::polar(basis.base_radius, theta), b = std::polar(view * 1.5, theta);
    svg << "<line x1=\"" << X(a) << "\" y1=\"" << Y(a) << "\" x2=\"" << X(b) << "\" y2=\"" << Y(b)
        << "\" stroke=\"#1f4e8c\" stroke-width=\"1.5\"/>\n";
  }
  for (const auto& c : basis.cycles) {
    svg << "<polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\" points=\"";
    for (const auto& z : c.connector) svg << X(z) << "," << Y(z) << " ";
    svg << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace expc
