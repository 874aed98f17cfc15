#include "expmath/celine/hyperterm.hpp"

#include "expmath/errors.hpp"
#include "expmath/exact/parse.hpp"

namespace expmath {

ProperHypTerm ProperHypTerm::binomial_nk() {
    ProperHypTerm h;
    h.factorials = {{1, 0, 0, 1}, {0, 1, 0, -1}, {1, -1, 0, -1}};
    return h;
}

Rational ProperHypTerm::eval(long n, long k, const std::map<std::string, Rational>& param_values) const {
    Rational r = 1;
    for (const auto& f : factorials) {
        long arg = f.a * n + f.b * k + f.c;
        if (arg < 0) return 0;
        Integer fa = factorial(arg);
        if (f.exponent >= 0) r *= Rational(ipow(fa, f.exponent));
        else r /= Rational(ipow(fa, -f.exponent));
    }
    std::map<std::string, Rational> pt = param_values;
    pt["n"] = n;
    pt["k"] = k;
    r *= prefactor.eval(pt);
    if (x != 1) r *= rpow(x, k);
    if (y != 1) r *= rpow(y, n);
    return r;
}

nlohmann::json ProperHypTerm::to_json() const {
    nlohmann::json j;
    j["prefactor"] = prefactor.to_string();
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : factorials) fs.push_back({f.a, f.b, f.c, f.exponent});
    j["factorials"] = fs;
    j["x"] = to_string(x);
    if (y != 1) j["y"] = to_string(y);
    if (!params.empty()) j["params"] = params;
    return j;
}

ProperHypTerm ProperHypTerm::from_json(const nlohmann::json& j) {
    static const std::vector<std::string> known{"prefactor", "factorials", "x", "y", "params"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw InvalidInput("unknown key '" + it.key() + "' in hypergeometric term");
    ProperHypTerm h;
    if (j.contains("params")) h.params = j.at("params").get<std::vector<std::string>>();
    std::vector<std::string> vars{"n", "k"};
    vars.insert(vars.end(), h.params.begin(), h.params.end());
    auto scalar = [](const nlohmann::json& v) {
        return v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
    };
    if (j.contains("prefactor")) {
        const auto& p = j.at("prefactor");
        h.prefactor = p.is_string() ? parse_multipoly(p.get<std::string>(), vars) : MultiPoly(scalar(p), vars);
        for (const auto& v : h.prefactor.active_vars())
            if (std::find(vars.begin(), vars.end(), v) == vars.end())
                throw InvalidInput("prefactor uses undeclared symbol '" + v + "'");
    }
    h.prefactor = h.prefactor.with_vars(vars);
    if (j.contains("factorials"))
        for (const auto& f : j.at("factorials")) {
            if (!f.is_array() || f.size() != 4) throw InvalidInput("factorial entries are [a, b, c, exponent]");
            h.factorials.push_back({f[0].get<long>(), f[1].get<long>(), f[2].get<long>(), f[3].get<int>()});
        }
    if (j.contains("x")) h.x = scalar(j.at("x"));
    if (j.contains("y")) h.y = scalar(j.at("y"));
    if (h.x == 0 || h.y == 0) throw InvalidInput("geometric bases must be nonzero");
    return h;
}

MultiPoly LinearForm::poly(const std::vector<std::string>& vars) const {
    MultiPoly p(Rational(c), vars);
    if (a) p += MultiPoly::variable("n", vars) * Rational(a);
    if (b) p += MultiPoly::variable("k", vars) * Rational(b);
    return p;
}

FactoredRatio factored_ratio(const ProperHypTerm& h, long i, long j, const std::vector<std::string>& vars) {
    FactoredRatio out;
    MultiPoly num = h.prefactor.with_vars(vars).shift("n", i).shift("k", j);
    num *= rpow(h.x, j) * rpow(h.y, i);
    auto add_den = [&](LinearForm f, int mult) {
        // normalize the sign: leading nonzero of (a, b) positive
        if (f.a < 0 || (f.a == 0 && f.b < 0)) {
            f = {-f.a, -f.b, -f.c};
            if (mult % 2) num *= Rational(-1);
        }
        if (f.a == 0 && f.b == 0) {
            if (f.c == 0) throw InternalError("zero linear factor in term ratio");
            num *= rpow(Rational(f.c), -mult);
            return;
        }
        out.denominator[f] += mult;
    };
    for (const auto& f : h.factorials) {
        long delta = f.a * i + f.b * j;
        if (delta == 0 || f.exponent == 0) continue;
        int e = f.exponent;
        // (L + delta)! / L!  = prod_{t=1}^{delta} (L + t)          when delta > 0
        //                    = 1 / prod_{t=0}^{-delta-1} (L - t)   when delta < 0
        bool up = delta > 0;
        long cnt = up ? delta : -delta;
        for (long t = 0; t < cnt; ++t) {
            LinearForm lf{f.a, f.b, up ? f.c + t + 1 : f.c - t};
            bool on_top = (up && e > 0) || (!up && e < 0);
            int m = e > 0 ? e : -e;
            if (on_top) num *= pow(lf.poly(vars), static_cast<unsigned>(m));
            else add_den(lf, m);
        }
    }
    out.numerator = num;
    return out;
}

RatFunc term_ratio(const ProperHypTerm& h, long i, long j) {
    std::vector<std::string> vars{"n", "k"};
    vars.insert(vars.end(), h.params.begin(), h.params.end());
    FactoredRatio fr = factored_ratio(h, i, j, vars);
    MultiPoly den = h.prefactor.with_vars(vars);
    for (const auto& [f, m] : fr.denominator) den *= pow(f.poly(vars), static_cast<unsigned>(m));
    return RatFunc(fr.numerator, den);
}

}  // namespace expmath
