#pragma once

#include <string>
#include <string_view>

#include "garnier/algebra/ratfunc.hpp"

namespace garnier {

// Canonical text form:
//   vars: x y z
//   [2,0,1]: 3/4
//   ...
// Terms in decreasing graded-lex order. A rational function prints a "num:"
// and a "den:" block, the denominator expanded and monic.
std::string to_canonical_text(const MultiPoly& p);
std::string to_canonical_text(const RatFunc& r);

// Inverse of to_canonical_text; throws std::invalid_argument on malformed input.
MultiPoly parse_canonical_poly(std::string_view text);
RatFunc parse_canonical_ratfunc(std::string_view text);

}  // namespace garnier
