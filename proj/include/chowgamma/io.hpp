#pragma once

// JSON and text serialization of the library's values, and parsers for
// matroid and group inputs.

#include <json.hpp>

#include <iosfwd>
#include <string>

#include "chowgamma/equivariant.hpp"
#include "chowgamma/group.hpp"
#include "chowgamma/matroid.hpp"
#include "chowgamma/poly.hpp"
#include "chowgamma/report.hpp"
#include "chowgamma/symfunc.hpp"

namespace chowgamma {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "chowgamma.report.v1";
inline constexpr const char* kVersion = "1.0.0";

/// [[e_t, e_q, e_p, "coefficient"], ...] in canonical term order.
Json to_json(const MVPoly& f);
MVPoly poly_from_json(const Json& j);
/// Parses "1 + 4*t + t^2", "3t^2 - q*p" and similar. DomainError on bad input.
MVPoly parse_poly(const std::string& text);

/// {"kind": "uniform" | "graphic" | "bases" | "flats", ...}; element and
/// vertex labels are 0-based.
Json to_json(const Matroid& m);
Matroid matroid_from_json(const Json& j);
/// "uniform:r,n", "boolean:n", "graphic:Km", or a path to a JSON file.
Matroid parse_matroid(const std::string& spec);

/// {"n": ..., "generators": [[images...], ...]} with 0-based images, or
/// {"named": "symmetric" | "cyclic" | "trivial"}.
PermGroup group_from_json(const Json& j, const Matroid& m, std::size_t cap = kDefaultGroupCap);
/// A group name or a path to a JSON file.
PermGroup parse_group(const std::string& spec, const Matroid& m, std::size_t cap = kDefaultGroupCap);
/// Classes with representative, cycle notation and size.
Json to_json(const PermGroup& g);

Json to_json(const ClassFunction& f, const PermGroup& g);
Json to_json(const EqSeries& e, const PermGroup& g);

/// {"degree": n, "basis": ..., "terms": [{"index": [...] | {"set": [...]}, "coeff": poly}, ...]}.
Json to_json(const SymF& f);
SymF symf_from_json(const Json& j);

Json to_json(const BettiVector& b);

/// {"suite", "status", "checks": [...], "schema", "version"}; wall time is
/// included only when wall_seconds >= 0.
Json to_json(const Report& r, double wall_seconds = -1);
/// Header row then one row per check; RFC 4180 quoting.
std::string to_csv(const Report& r);
/// "PASS id" / "FAIL id  lhs | rhs | residual" lines and a status line.
std::string to_text(const Report& r);

}  // namespace chowgamma
