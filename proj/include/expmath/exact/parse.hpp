#pragma once

#include <string>
#include <vector>

#include "expmath/exact/ratfunc.hpp"
#include "expmath/exact/unipoly.hpp"

namespace expmath {

// Parses + - * / ^ (also **), rationals, identifiers and parentheses.
// A number directly followed by an identifier or '(' multiplies ("3N" = 3*N).
// var_order fixes the leading variables of the result; others follow in order of appearance.
RatFunc parse_ratfunc(const std::string& text, const std::vector<std::string>& var_order = {});
MultiPoly parse_multipoly(const std::string& text, const std::vector<std::string>& var_order = {});
UniPoly parse_unipoly(const std::string& text, const std::string& var);

}  // namespace expmath
