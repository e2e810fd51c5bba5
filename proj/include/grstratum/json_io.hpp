#pragma once

#include <json.hpp>

#include "grstratum/oracle.hpp"
#include "grstratum/tangent.hpp"

namespace grst {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

/// Order spec: a plain string ("grlex") or an object
/// {"kind": "lex|grlex|grevlex|matrix", "priority": [...], "rows": [[...]]}.
MonomialOrder parse_order(const json& j, int n);
json order_to_json(const MonomialOrder& ord);

/// Corners: JSON array of integer arrays.
std::vector<Exponent> parse_corners(const json& j, int n);

json poly_to_json(const Poly& p, const VarTable& vt);
json xpoly_to_json(const XPoly& p);
XPoly parse_xpoly(const json& j, int n);

json triples_report(const SchemeIdeal& si);
json stratum_report(const SchemeIdeal& si);
json tangent_report_json(const SchemeIdeal& si, const TangentReport& tr,
                         const EmbeddedPresentation& ep);
json family_report(const SchemeIdeal& si, const EmbeddedPresentation* ep);
json verify_report(const GBCertificate& cert);

/// Default variable names x, y, z, then x4, x5, ...
std::vector<std::string> x_names(int n);

/// Human-readable text renderings used by --text and the acceptance fixtures.
std::string stratum_text(const SchemeIdeal& si);
std::string tangent_text(const SchemeIdeal& si, const TangentReport& tr,
                         const EmbeddedPresentation& ep);
std::string family_text(const SchemeIdeal& si, const EmbeddedPresentation* ep);
std::string triples_text(const SchemeIdeal& si);

}  // namespace grst
