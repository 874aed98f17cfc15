#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "expmath/errors.hpp"
#include "expmath/exact/ratfunc.hpp"
#include "expmath/recurrence/recurrence.hpp"

namespace expmath {

class PoleInRange : public InvalidInput {
public:
    explicit PoleInRange(long n)
        : InvalidInput("PoleInRange", "summand is undefined at n = " + std::to_string(n)), n_(n) {}
    long n() const { return n_; }

private:
    long n_;
};

// `symbol` stands for q^n inside the rational part.
struct GeometricAtom {
    std::string symbol;
    Rational q;
};

// (stride*n + offset)!^exponent
struct FactorialAtom {
    long stride = 1;
    long offset = 0;
    int exponent = -1;
};

// F(n) = R(n, q_1^n, ...) * prod (s n + c)!^e, summed from n = start.
struct SummandSpec {
    RatFunc rational = RatFunc(1);  // in "n" and the geometric symbols
    std::vector<GeometricAtom> geometrics;
    std::vector<FactorialAtom> factorials;
    long start = 0;

    std::vector<std::string> vars() const;  // "n" then the symbols
    // Offsets folded into the rational part, one atom per stride, zero exponents dropped.
    SummandSpec normalized() const;
    // stride -> exponent of the normalized form
    std::map<long, int> factorial_profile() const;
    // Reciprocal factorials of negative arguments are 0; factorials of negative arguments and
    // zeros of the denominator raise PoleInRange.
    Rational eval(long n) const;

    nlohmann::json to_json() const;
    static SummandSpec from_json(const nlohmann::json& j);
};

// a*F + b*G; both are normalized and must share the factorial profile.
SummandSpec combine(const SummandSpec& f, const Rational& a, const SummandSpec& g, const Rational& b);

// x_{start+1}, ..., x_{start+M} where x_N = sum_{n=start}^{N-1} F(n).
SequenceSample partial_sums(const SummandSpec& f, long M);

// T(N) = U(N, t) / V(N, t) * prod (s N)!^e with t_i = q_i^N.
struct ClosedForm {
    MultiPoly num, den;  // in "N" and the geometric symbols
    std::vector<GeometricAtom> geometrics;
    std::map<long, int> factorials;  // stride -> exponent

    std::vector<std::string> vars() const;
    Rational eval(long N) const;  // throws PoleInRange
    std::string to_string() const;
    nlohmann::json to_json() const;
};

// Which tail the closed form describes.
enum class TailConvention {
    After,  // T(N) = sum_{n > N} F(n), so T(N-1) - T(N) = F(N)
    From,   // T(N) = sum_{n >= N} F(n), so T(N) - T(N+1) = F(N)
};

struct TelescopeCheck {
    bool proof = false;
    long refuted_at = 0;  // meaningful when !proof
    RatFunc residual;     // reduced (telescoped difference - summand) / reference atoms
};

// Exact symbolic check of the telescoping identity.
TelescopeCheck verify_telescoping(const ClosedForm& t, const SummandSpec& f,
                                  TailConvention conv = TailConvention::After);

// Shift of a polynomial in (var, symbols) by var -> var - 1, symbol -> symbol / q.
MultiPoly shift_back(const MultiPoly& p, const std::string& var, const std::vector<GeometricAtom>& geos);

}  // namespace expmath
