#pragma once

#include <vector>

#include "expmath/exact/ratfunc.hpp"
#include "expmath/exact/unipoly.hpp"

namespace expmath {

// numerator / factor^multiplicity with deg numerator < deg factor.
struct PartialFractionTerm {
    UniPoly factor;
    int multiplicity;
    UniPoly numerator;
};

struct PartialFractions {
    UniPoly polynomial_part;
    std::vector<PartialFractionTerm> terms;
    bool fully_factored = true;  // false when some denominator factor might still split

    RatFunc recombine() const;
    std::string to_string() const;
};

PartialFractions partial_fractions(const UniPoly& num, const UniPoly& den, const std::vector<UniPoly>& hints = {});
// f must involve a single variable.
PartialFractions partial_fractions(const RatFunc& f, const std::vector<UniPoly>& hints = {});

}  // namespace expmath
