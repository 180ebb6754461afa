#pragma once

// JSON interchange: curve specs, cycles, and the machine-readable reports emitted
// by the command-line tool. Complex numbers are always [re, im].

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "expc/curve.hpp"
#include "expc/homology.hpp"
#include "expc/torelli.hpp"

namespace expc {

using json = nlohmann::json;

json to_json(cplx c);
cplx complex_from_json(const json& j);
json to_json(const PolyC& p);
json to_json(const RelativeCycle& c);
json to_json(const CycleBasis& b);

/// {"genus": 0, "punctures": [{"location": "inf" | [re, im], "principal_part": [[re, im], ...]}]}
ExpCurveGZ curve_from_json(std::string_view text);
json curve_to_json(const ExpCurveGZ& c);

enum class ReportStatus {
  kOk,
  /// Some period missed its tolerance; the report holds best estimates.
  kToleranceNotMet,
  /// A numerical check failed (rank deficiency, unrecoverable kernel).
  kVerificationFailed,
};

struct Report {
  json body;
  ReportStatus status = ReportStatus::kOk;
};

Report surface_info_report(const ExpCurveGZ& curve, const std::optional<RationalC>& g = std::nullopt);
/// maxpow < 0 selects d - 1; base_radius <= 0 selects the default.
Report periods_report(const PolyC& exponent, int maxpow, double tol, double base_radius = 0.0);
Report reduce_report(const PolyC& form, const PolyC& exponent);
Report recover_report(const PolyC& exponent, double tol);
Report verify_report(const PolyC& p1, const PolyC& p2, double tol);
Report case2_report(const PrincipalPart& h, const RationalC& omega_factor, const PolyC& multiplier, int kmax,
                    int trunc);

/// Static picture of the descent sectors, rays and connectors of the standard basis.
std::string contour_svg(const PolyC& exponent, double base_radius = 0.0);

}  // namespace expc
