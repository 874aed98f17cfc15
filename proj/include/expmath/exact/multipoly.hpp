#pragma once

#include <map>
#include <string>
#include <vector>

#include "expmath/exact/rational.hpp"
#include "expmath/exact/unipoly.hpp"

namespace expmath {

using Exponents = std::vector<int>;

// Graded lexicographic: total degree first, then lexicographic in variable order.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over Q. Variable order is the order of vars().
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars);
    MultiPoly(const Rational& c, std::vector<std::string> vars);
    static MultiPoly variable(const std::string& name, std::vector<std::string> vars);
    static MultiPoly variable(const std::string& name) { return variable(name, {name}); }
    static MultiPoly from_unipoly(const UniPoly& p, std::vector<std::string> vars);
    static MultiPoly from_unipoly(const UniPoly& p) { return from_unipoly(p, {p.var()}); }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    int var_index(const std::string& name) const;  // -1 if absent
    // Same polynomial over a variable list containing every variable it actually uses.
    MultiPoly with_vars(const std::vector<std::string>& vars) const;
    // Variables with positive degree, in vars() order.
    std::vector<std::string> active_vars() const;

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // throws if not constant
    std::size_t size() const { return terms_.size(); }
    int total_degree() const;
    int degree_in(const std::string& var) const;
    std::pair<Exponents, Rational> leading_term() const;
    const Rational& leading_coeff() const;

    // Coefficient of var^d, as a polynomial over the same variable list.
    MultiPoly coeff_in(const std::string& var, int d) const;
    // Coefficients of var^0..var^deg.
    std::vector<MultiPoly> as_univariate_in(const std::string& var) const;
    // Throws unless at most one variable is active.
    UniPoly to_unipoly(const std::string& var) const;

    Rational eval(const std::map<std::string, Rational>& point) const;  // all active vars must be bound
    MultiPoly partial_eval(const std::map<std::string, Rational>& point) const;
    MultiPoly substitute(const std::string& var, const MultiPoly& value) const;
    MultiPoly shift(const std::string& var, const Rational& s) const;  // var -> var + s

    Rational content() const;  // positive; this/content has coprime integer coefficients
    MultiPoly primitive() const;  // integer coefficients, positive leading coefficient
    MultiPoly monic() const;  // leading coefficient 1

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& s);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
    friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Deterministic text: grlex-descending terms, '^' and explicit '*'.
    std::string to_string() const;

    void add_term(const Exponents& e, const Rational& c);

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

// Union of the two variable lists, left order first.
std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b);
MultiPoly pow(const MultiPoly& p, unsigned e);
MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);  // throws if b does not divide a
bool divides(const MultiPoly& d, const MultiPoly& a);
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);  // monic; gcd(0,0) = 0
MultiPoly lcm(const MultiPoly& a, const MultiPoly& b);

}  // namespace expmath
