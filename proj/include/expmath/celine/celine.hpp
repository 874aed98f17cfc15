#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "expmath/celine/hyperterm.hpp"
#include "expmath/deadline.hpp"
#include "expmath/exact/ratfunc.hpp"
#include "expmath/recurrence/recurrence.hpp"

namespace expmath {

class LeadingCoefficientVanishes : public InvalidInput {
public:
    explicit LeadingCoefficientVanishes(long k)
        : InvalidInput("LeadingCoefficientVanishes",
                       "auxiliary recurrence leading coefficient vanishes at k = " + std::to_string(k)),
          k_(k) {}
    long k() const { return k_; }

private:
    long k_;
};

class UnboundedSupport : public InvalidInput {
public:
    explicit UnboundedSupport(const std::string& what) : InvalidInput("UnboundedSupport", what) {}
};

class VerificationFailed : public InternalError {
public:
    explicit VerificationFailed(const std::string& what) : InternalError("VerificationFailed", what) {}
};

// a_k with sum_{t=0}^{D} r_t(k) a_{k+t} = 0, entering the sum as a_k^d.
struct AuxSequence {
    std::vector<RatFunc> coeffs;    // r_0 .. r_D, in k and the parameters
    std::vector<Rational> initials;  // a_0, a_1, ...; at least D values
    int d = 1;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    // Coefficients of a RecurrenceOperator, renamed to k.
    static AuxSequence from_operator(const RecurrenceOperator& op, std::vector<Rational> initials, int d = 1);
    static AuxSequence fibonacci(int d = 1);
    // Central trinomial coefficients: constant term of (1 + z + 1/z)^k.
    static AuxSequence central_trinomial(int d = 1);

    void validate() const;
    // a_0 .. a_{count-1}; throws LeadingCoefficientVanishes.
    std::vector<Rational> values(long count, const std::map<std::string, Rational>& params = {}) const;

    nlohmann::json to_json() const;
    static AuxSequence from_json(const nlohmann::json& j, const std::vector<std::string>& params = {});
};

// (c_{j,0}(k), ..., c_{j,D-1}(k)) with a_{k+j} = sum_m c_{j,m}(k) a_{k+m}.
std::vector<RatFunc> reduce_shift(const AuxSequence& aux, long j);

// sum_i c_i x_{n+i} = 0 with c_i in Q[params][n].
class ParamOperator {
public:
    ParamOperator() = default;
    ParamOperator(std::vector<MultiPoly> coeffs, std::vector<std::string> params);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<MultiPoly>& coeffs() const { return c_; }
    const std::vector<std::string>& params() const { return params_; }
    // Divided by the gcd of its coefficients; integer coefficients, positive leading one.
    ParamOperator normalized() const;
    RecurrenceOperator specialize(const std::map<std::string, Rational>& values = {}) const;
    std::string to_string() const;

private:
    std::vector<MultiPoly> c_;
    std::vector<std::string> params_;
};

// k runs over lo .. hi_slope*n + hi_offset. Without explicit bounds the window is 0..n and the
// summand must vanish just outside it.
struct SumWindow {
    long lo = 0;
    long hi_slope = 1;
    long hi_offset = 0;
    bool explicit_bounds = false;
};

// x_0 .. x_{count-1} by direct summation of a_k^d H(n,k).
SequenceSample direct_sum_terms(const ProperHypTerm& h, const AuxSequence* aux, long count,
                                const std::map<std::string, Rational>& params = {}, const SumWindow& w = {});

struct CelineOptions {
    double timeout_s = 0;  // per attempt; 0 = none
    long verify_terms = 30;
    SumWindow window;
};

struct CelineResult {
    ParamOperator op;
    int I = 0, J = 0;
    long verified_terms = 0;
    long valid_from = 0;  // the recurrence is checked for n >= valid_from
    std::vector<std::map<std::string, Rational>> specializations;  // parameter values used for checking

    bool has_params() const { return !op.params().empty(); }
    RecurrenceOperator rational() const { return op.specialize(); }  // only without parameters
    nlohmann::json report() const;
};

// One (I, J) attempt. Throws NotFound when only trivial solutions exist.
CelineResult find_sum_recurrence(const ProperHypTerm& h, const AuxSequence* aux, int I, int J,
                                 const CelineOptions& opt = {});
// Attempts (I, J) along the diagonals I + J = 1, 2, ... within the caps.
CelineResult search_sum_recurrence(const ProperHypTerm& h, const AuxSequence* aux, int max_I, int max_J,
                                   const CelineOptions& opt = {});

// Outer sum of H(n, i) * inner_i where inner_i satisfies `inner` (variable renamed to the summation index).
CelineResult nested_sum(const ProperHypTerm& outer, const RecurrenceOperator& inner, std::vector<Rational> inner_initials,
                        int max_I, int max_J, const CelineOptions& opt = {});

}  // namespace expmath
