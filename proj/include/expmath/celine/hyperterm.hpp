#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "expmath/exact/multipoly.hpp"
#include "expmath/exact/ratfunc.hpp"

namespace expmath {

// (a n + b k + c)! raised to `exponent`.
struct FactorialFactor {
    long a = 0, b = 0, c = 0;
    int exponent = 1;
};

// P(n,k) * prod (a n + b k + c)!^e * x^k * y^n, with optional symbolic parameters in P.
// y is an extension for signs such as (-1)^(n-k) = (-1)^n (-1)^k.
struct ProperHypTerm {
    MultiPoly prefactor = MultiPoly(Rational(1), {"n", "k"});
    std::vector<FactorialFactor> factorials;
    Rational x = 1;
    Rational y = 1;
    std::vector<std::string> params;

    // n!/(k!(n-k)!)
    static ProperHypTerm binomial_nk();
    // Zero whenever some factorial argument is negative.
    Rational eval(long n, long k, const std::map<std::string, Rational>& param_values = {}) const;
    nlohmann::json to_json() const;
    static ProperHypTerm from_json(const nlohmann::json& j);
};

// G_{i,j}(n,k) = H(n+i, k+j) / H(n,k) as a reduced rational function.
RatFunc term_ratio(const ProperHypTerm& h, long i, long j);

// Linear form a n + b k + c with a sign convention making equal forms compare equal.
struct LinearForm {
    long a = 0, b = 0, c = 0;
    bool operator<(const LinearForm& o) const {
        return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
    }
    MultiPoly poly(const std::vector<std::string>& vars) const;
};

// G_{i,j} written as numerator / prod of linear forms (with multiplicities); the prefactor
// quotient is folded in as P(n+i,k+j) on top and the common P(n,k) left implicit.
struct FactoredRatio {
    MultiPoly numerator;
    std::map<LinearForm, int> denominator;
};
FactoredRatio factored_ratio(const ProperHypTerm& h, long i, long j, const std::vector<std::string>& vars);

}  // namespace expmath
