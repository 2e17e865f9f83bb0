#ifndef DIAGCAT_NOTATION_HPP
#define DIAGCAT_NOTATION_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "diagcat/diagram.hpp"

namespace diagcat {

/// Compact canonical text form:
///   Brauer, Temperley–Lieb   `3->5:(b1 b3)(b2 t4)(t1 t2)(t3 t5)`
///   signed                   `2->0:(b1>b2)`  (horizontal edges as source>target)
///   walled                   `1+1->0+0:(b1 b2)`
///   partition                `2->2:{b1 t1}{b2}{t2}`
///   partial maps             `2->2:[b1->t2, b2->t1]`
std::string format_diagram(const Diagram& d);

/// Parses the text form for category `c`; whitespace between tokens is
/// ignored. Throws SyntaxError on malformed text and the validation errors of
/// the diagram constructors on well-formed but invalid data.
Diagram parse_diagram(Category c, std::string_view text);

/// `{"variant": ..., "bottom": n, "top": m, "edges"|"blocks"|"pairs": [...]}`;
/// walled rows are `[n1, n2]`.
nlohmann::json diagram_to_json(Category c, const Diagram& d);
/// Inverse of diagram_to_json; the category is read from "variant".
Diagram diagram_from_json(const nlohmann::json& j);

} // namespace diagcat

#endif // DIAGCAT_NOTATION_HPP
