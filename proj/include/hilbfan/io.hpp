#pragma once

#include <string>
#include <vector>

#include "hilbfan/fan.hpp"
#include "hilbfan/limits.hpp"
#include "hilbfan/segre3.hpp"
#include "hilbfan/staircase.hpp"

namespace hilbfan {

/// Ideal grammar:
///   input  := "gens:" mono ("," mono)* | expr
///   expr   := term ("+" term)*        sum of ideals
///   term   := factor ("*" factor)*    product
///   factor := atom ("^" N)?
///   atom   := "I(" [N ("," N)*] ")" | "m" | "(" expr ")"
///   mono   := "1" | ("x" | "y") ("^" N)? ("*" ...)*
/// Errors carry ErrorCode::parse and name the column (1-based).
Staircase parse_ideal(const std::string& text);

/// x -> x + t*y^k or y -> y + t*x^k.
struct Substitution {
  int var = 0;  // 0 = x, 1 = y
  int power = 1;
};
Substitution parse_substitution(const std::string& text);

/// "m,n" as an integer direction.
Point parse_direction(const std::string& text);

// JSON documents. Each carries schema_version and a kind tag.
std::string ideal_json(const Staircase& I);
std::string fan_json(const Fan2D& F);
std::string diagram_json(const BoundaryDiagram& d);
std::string picture_json(const SupportPicture& P);
std::string limit_json(const LimitIdeal& L);

Staircase ideal_from_json(const std::string& text);
/// Rays, cones and labels; supports are not serialized.
Fan2D fan_from_json(const std::string& text);
BoundaryDiagram diagram_from_json(const std::string& text);
/// Points and open circles; sporadic polynomials stay as text in the JSON.
SupportPicture picture_from_json(const std::string& text);

/// Kind tag of a JSON document ("ideal", "fan", ...).
std::string json_kind(const std::string& text);

// SVG figures.
std::string fan_svg(const Fan2D& F);
std::string hull_svg(const Fan2D& F);
std::string diagram_svg(const BoundaryDiagram& d);
std::string picture_svg(const SupportPicture& P);

/// Text report of an ideal: steps, heights, colength, measuring sequence and
/// the staircase drawn in ASCII.
std::string ideal_report(const Staircase& I);

}  // namespace hilbfan
