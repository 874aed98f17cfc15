#include "expmath/exact/partial_fractions.hpp"

#include <sstream>

#include "expmath/errors.hpp"
#include "expmath/exact/factor.hpp"

namespace expmath {

RatFunc PartialFractions::recombine() const {
    RatFunc r(MultiPoly::from_unipoly(polynomial_part));
    for (const auto& t : terms)
        r += RatFunc(MultiPoly::from_unipoly(t.numerator), MultiPoly::from_unipoly(pow(t.factor, t.multiplicity)));
    return r;
}

std::string PartialFractions::to_string() const {
    std::ostringstream os;
    bool first = true;
    if (!polynomial_part.is_zero()) {
        os << polynomial_part.to_string();
        first = false;
    }
    for (const auto& t : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t.numerator.to_string() << ")/(" << t.factor.to_string() << ")";
        if (t.multiplicity > 1) os << "^" << t.multiplicity;
    }
    if (first) os << "0";
    return os.str();
}

PartialFractions partial_fractions(const UniPoly& num0, const UniPoly& den0, const std::vector<UniPoly>& hints) {
    if (den0.is_zero()) throw InvalidInput("partial fractions with zero denominator");
    std::string v = den0.is_constant() ? num0.var() : den0.var();
    UniPoly g = gcd(num0, den0);
    UniPoly num = num0 / g, den = den0 / g;
    PartialFractions out;
    auto [q, r] = divmod(num, den);
    out.polynomial_part = q.with_var(v);
    if (r.is_zero() || den.degree() == 0) return out;
    Factorization fz = factor(den, hints);
    out.fully_factored = fz.complete;
    std::vector<std::pair<UniPoly, int>> pieces = fz.factors;
    UniPoly rest = r * (1 / fz.unit);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto& [f, m] = pieces[i];
        UniPoly pi = pow(f, m);
        UniPoly a;
        if (i + 1 == pieces.size()) {
            a = rest;
            rest = UniPoly(Rational(0), v);
        } else {
            UniPoly qi(Rational(1), v);
            for (std::size_t j = i + 1; j < pieces.size(); ++j) qi *= pow(pieces[j].first, pieces[j].second);
            // rest/(pi qi) = a/pi + b/qi with a qi + b pi = rest
            ExtendedGcd eg = extended_gcd(pi, qi);
            a = (rest * eg.t) % pi;
            rest = (rest - a * qi) / pi;
        }
        // f-adic expansion of a / f^m
        std::vector<PartialFractionTerm> local;
        for (int k = m; k >= 1 && !a.is_zero(); --k) {
            auto [qq, rr] = divmod(a, f);
            if (!rr.is_zero()) local.push_back({f, k, rr});
            a = qq;
        }
        for (auto it = local.rbegin(); it != local.rend(); ++it) out.terms.push_back(*it);
    }
    return out;
}

PartialFractions partial_fractions(const RatFunc& f, const std::vector<UniPoly>& hints) {
    auto act = f.active_vars();
    if (act.size() > 1) throw InvalidInput("partial fractions need a univariate rational function");
    std::string v = act.empty() ? "x" : act[0];
    return partial_fractions(f.num().to_unipoly(v), f.den().to_unipoly(v), hints);
}

}  // namespace expmath
