#pragma once

#include "abckit/belyi.hpp"
#include "abckit/conjectures.hpp"
#include "abckit/ellenberg.hpp"
#include "abckit/restricted.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace abckit {

using Json = nlohmann::ordered_json;

/// Accepts an integer, a string such as "-3/4" or "0.25", or a JSON float
/// (read through its shortest decimal form, so 1.0 is exactly 1).
Rational rational_from_json(const Json& j);
/// Decimal or fraction text: "12", "-3/4", "1.5e-3".
Rational parse_decimal(std::string_view text);

/// {"min_poly": [c0, ..., cd], "disc_override": n}; an absent document is Q.
FieldPtr field_from_json(const Json& j);
Json field_to_json(const NumberField& K);

/// Power-basis coordinates [q0, q1, ...] or a single rational.
FieldElement element_from_json(const FieldPtr& K, const Json& j);
Json element_to_json(const FieldElement& x);

/// {"finite": [{"p": 2, "label": 0, "D": 3}], "arch": {"embedding": 0, "D": 1.0}}
ArithmeticDivisor divisor_from_json(const FieldPtr& K, const Json& j);
/// {"nonarch": [{"p": 2, "g": 2}], "arch": [{"embedding": 0, "g": 1}]}
TripodNeighborhood neighborhood_from_json(const Json& j);

/// A rational, "inf", or {"min_poly": [...], "root_index": k}.
ProjAlgebraic proj_algebraic_from_json(const Json& j);
Json proj_algebraic_to_json(const ProjAlgebraic& x);
std::vector<ProjAlgebraic> point_list_from_json(const Json& j);

/// {"mid": "...", "rad": "..."} with the radius rounded up.
Json ball_to_json(const RealBall& x, int digits = 17);
Json height_value_to_json(const HeightValue& v, int precision);
Json poly_to_json(const Poly& f);

Json report_to_json(const AbcPoint& P, const ConjectureReport& rep);
Json transform_to_json(const TransformResult& t);
Json belyi_to_json(const BelyiResult& b);
Json restricted_to_json(const RestrictedReport& rep);

/// Center and upward-rounded radius rendered for CSV and JSON output.
std::string format_mid(const RealBall& x, int digits = 17);
std::string format_rad(const RealBall& x);

}  // namespace abckit
