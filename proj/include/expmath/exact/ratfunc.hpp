#pragma once

#include <map>
#include <string>
#include <vector>

#include "expmath/exact/multipoly.hpp"

namespace expmath {

// Quotient of multivariate polynomials, kept reduced with a monic (grlex) denominator.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1), {}) {}
    RatFunc(const Rational& c) : num_(c, {}), den_(Rational(1), {}) {}  // NOLINT: implicit by design
    explicit RatFunc(const MultiPoly& p);
    RatFunc(const MultiPoly& num, const MultiPoly& den);
    static RatFunc variable(const std::string& name) { return RatFunc(MultiPoly::variable(name)); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;
    std::vector<std::string> active_vars() const;

    // Throws if the denominator vanishes at the point.
    Rational eval(const std::map<std::string, Rational>& point) const;
    RatFunc partial_eval(const std::map<std::string, Rational>& point) const;
    RatFunc substitute(const std::string& var, const RatFunc& value) const;
    RatFunc shift(const std::string& var, const Rational& s) const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // "(num)/(den)" or just the numerator when the denominator is 1.
    std::string to_string() const;

private:
    void normalize();
    MultiPoly num_, den_;
};

RatFunc pow(const RatFunc& f, int e);

}  // namespace expmath
