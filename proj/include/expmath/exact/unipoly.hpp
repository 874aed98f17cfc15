#pragma once

#include <string>
#include <utility>
#include <vector>

#include "expmath/exact/rational.hpp"

namespace expmath {

// Dense univariate polynomial over Q, coefficients stored low to high.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs, std::string var = "x");
    UniPoly(const Rational& c, std::string var);  // constant

    static UniPoly monomial(const Rational& c, int deg, const std::string& var);
    static UniPoly variable(const std::string& var) { return monomial(1, 1, var); }
    // Product of (x - r) over the given roots.
    static UniPoly from_roots(const std::vector<Rational>& roots, const std::string& var);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    const std::string& var() const { return var_; }
    UniPoly with_var(const std::string& v) const { UniPoly r = *this; r.var_ = v; return r; }
    const Rational& leading() const;

    Rational eval(const Rational& x) const;
    UniPoly shift(const Rational& s) const;  // p(x + s)
    UniPoly scale_arg(const Rational& s) const;  // p(s x)
    UniPoly compose(const UniPoly& q) const;  // p(q(x))
    UniPoly derivative() const;
    UniPoly monic() const;
    // Positive rational c with p / c having coprime integer coefficients and positive lead.
    Rational content() const;
    UniPoly primitive() const;
    // Integer coefficient vector of primitive(); for integer arithmetic hot loops.
    std::vector<Integer> integer_coeffs() const;
    // Multiplicity of the root r (0 if not a root).
    int root_multiplicity(const Rational& r) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& s);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    // Text with '^' powers and explicit '*', highest degree first, e.g. "3*n^2 - n + 1/2".
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
    std::string var_ = "x";
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);  // exact, throws otherwise
UniPoly operator%(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& d, const UniPoly& a);
UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic; gcd(0,0) = 0
UniPoly lcm(const UniPoly& a, const UniPoly& b);  // monic
UniPoly pow(const UniPoly& p, unsigned e);
// s, t with s a + t b = gcd(a, b).
struct ExtendedGcd { UniPoly g, s, t; };
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);
// Determinant of the Sylvester matrix.
Rational resultant(const UniPoly& a, const UniPoly& b);

}  // namespace expmath
