#pragma once

#include <string>

#include "lsv/polynomial.hpp"

namespace lsv {

// Parses expressions like "3/2*x1^2*x2 - x3 + 1". Factors are joined with
// an explicit '*'; '^' takes a non-negative integer exponent; '/' only
// appears inside rational literals. Variables run from x<first_var_index>
// upward. Throws ParseError carrying line and column on bad input.
Polynomial parse_poly(const std::string& text, int nvars,
                      int first_var_index = 1);

}  // namespace lsv
