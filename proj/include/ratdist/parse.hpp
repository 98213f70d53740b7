#pragma once

#include <string>
#include <vector>

#include "ratdist/geometry.hpp"

namespace ratdist {

// Grammar for coordinate/side expressions:
//   expr   := term (('+' | '-') term)*
//   term   := factor ('/' INT)?
//   factor := INT | RAT | [RAT] 'sqrt' INT | '(' expr ')'
// e.g. "3/4", "sqrt3", "2sqrt2", "(3+sqrt5)/2", "-1/2sqrt3"
QuadExt parse_quadext(const std::string& text);

// "x,y" pairs separated by whitespace
std::vector<PlanePoint> parse_points(const std::string& text);

// three whitespace-separated squared side expressions
Triangle parse_sides_sq(const std::string& text);

} // namespace ratdist
