#pragma once

#include "binext/polytope.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <variant>

namespace binext {

using AnyPolytope = std::variant<HPolytope, VPolytope>;

/**
 * Text format:
 *
 *     H n                  V n
 *     a1 ... an <= b       x1 ... xn
 *     a1 ... an = b        ...
 *
 * Tokens are "p/q" or "p". "≤" is accepted for "<=". Lines starting with
 * '#' and blank lines are ignored.
 */
AnyPolytope parse_polytope(std::string_view text);
std::string format_polytope(const HPolytope& h);
std::string format_polytope(const VPolytope& v);
std::string format_polytope(const AnyPolytope& p);

nlohmann::json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const QVector& v);
QVector vector_from_json(const nlohmann::json& j);

/// JSON mirror: {"type":"H","dim":n,"ineqs":[{"a":[..],"b":..}],"eqs":[..]}
/// or {"type":"V","dim":n,"vertices":[[..]]}; rationals as {"num":..,"den":..}.
nlohmann::json polytope_to_json(const HPolytope& h);
nlohmann::json polytope_to_json(const VPolytope& v);
/// Accepts the JSON mirror or a string holding the text format.
AnyPolytope polytope_from_json(const nlohmann::json& j);

/// Rationals rendered as "p" / "p/q" strings, for compact reports.
nlohmann::json vector_to_strings(const QVector& v);

}  // namespace binext
