#pragma once

#include <optional>
#include <string>
#include <vector>

#include "expmath/gosper/summand.hpp"

namespace expmath {

class SlowConvergence : public NotFound {
public:
    explicit SlowConvergence(const std::string& what) : NotFound("SlowConvergence", what, "limit") {}
};

class UnknownLimit : public NotFound {
public:
    explicit UnknownLimit(const std::string& what) : NotFound("Unknown", what, "limit") {}
};

struct BasisConstant {
    std::string label;
    std::optional<SummandSpec> series;  // sum_{n >= 0} of this summand equals the constant
    std::string note;
    // Truncation of the value to `digits` decimal digits, as an exact rational.
    Rational value(long digits) const;
};

using ConstantBasis = std::vector<BasisConstant>;

// Known labels: 1, e, 1/e, cosh(1), sinh(1), pi.
BasisConstant basis_constant(const std::string& label);
ConstantBasis make_basis(const std::vector<std::string>& labels);
// {1} plus e / 1/e for n! atoms and cosh(1), sinh(1) for (2n)! atoms.
ConstantBasis default_basis(const SummandSpec& f);

struct LimitGuess {
    std::vector<std::pair<std::string, Rational>> terms;  // label, coefficient (nonzero only)
    long trusted_digits = 0;
    bool exact = false;  // derived symbolically rather than guessed

    Rational coefficient(const std::string& label) const;
    std::string to_string() const;
};

struct LimitOptions {
    long precision = 40;        // requested trusted digits
    long min_trusted = 20;      // below this: SlowConvergence
    long max_terms = 4096;
};

// Exact limit of a rational summand whose partial fractions telescope; nullopt otherwise.
std::optional<Rational> telescoping_rational_limit(const SummandSpec& f);

// Limit of sum_{n >= start} F(n) as a rational combination of the basis.
LimitGuess guess_limit(const SummandSpec& f, const ConstantBasis& basis, const LimitOptions& opt = {});

// Small integer relation among the columns of `values` (exact rationals), by LLL on the scaled
// lattice. Returns nullopt when no relation within the coefficient bound fits to `digits`.
std::optional<std::vector<Integer>> integer_relation(const std::vector<Rational>& values, long digits,
                                                     const Integer& coeff_bound);

// Last continued-fraction convergent of x with denominator at most `bound`.
Rational best_rational(const Rational& x, const Integer& bound);

}  // namespace expmath
