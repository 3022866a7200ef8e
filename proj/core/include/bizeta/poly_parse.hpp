#pragma once

#include <string_view>
#include <vector>

#include "bizeta/rational_poly.hpp"

namespace bizeta {

/// Parses sums of monomials with integer coefficients, e.g. `x^5+2*x+1`.
/// Whitespace is insignificant; `*` between coefficient and variable is
/// optional. Returns coefficients low to high (trimmed).
///
/// Errors are ParseError with a 1-based column relative to `text`, shifted
/// by `columnOffset` so callers embedding the polynomial in a larger line
/// can report absolute positions.
std::vector<Integer> parseIntegerPoly(std::string_view text, char var = 'x', std::size_t line = 1,
                                      std::size_t columnOffset = 0);

}  // namespace bizeta
