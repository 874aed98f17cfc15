#include "expmath/gosper/summand.hpp"

#include <algorithm>

#include "expmath/exact/parse.hpp"

namespace expmath {

namespace {

std::string fresh_symbol(const std::vector<GeometricAtom>& used) {
    for (int i = 1;; ++i) {
        std::string s = "t" + std::to_string(i);
        bool clash = std::any_of(used.begin(), used.end(), [&](const GeometricAtom& g) { return g.symbol == s; });
        if (!clash) return s;
    }
}

// prod_{j=lo}^{hi} (s*var + j)
MultiPoly linear_product(long s, long lo, long hi, const std::string& var, const std::vector<std::string>& vars) {
    MultiPoly p(Rational(1), vars);
    MultiPoly x = MultiPoly::variable(var, vars) * Rational(s);
    for (long j = lo; j <= hi; ++j) p *= x + MultiPoly(Rational(j), vars);
    return p;
}

RatFunc rf_pow(const MultiPoly& p, int e) {
    if (e >= 0) return RatFunc(pow(p, static_cast<unsigned>(e)));
    return RatFunc(MultiPoly(Rational(1), p.vars()), pow(p, static_cast<unsigned>(-e)));
}

std::map<std::string, Rational> atom_point(const std::string& var, long n, const std::vector<GeometricAtom>& geos) {
    std::map<std::string, Rational> pt{{var, n}};
    for (const auto& g : geos) pt[g.symbol] = rpow(g.q, n);
    return pt;
}

// t^k -> t^(k mod 2) for symbols standing for (-1)^n; t -> 1 for 1^n.
MultiPoly reduce_unit_bases(const MultiPoly& p, const std::vector<GeometricAtom>& geos) {
    MultiPoly r = p;
    for (const auto& g : geos) {
        int idx = r.var_index(g.symbol);
        if (idx < 0) continue;
        if (g.q == 1) {
            r = r.substitute(g.symbol, MultiPoly(Rational(1), r.vars()));
        } else if (g.q == -1) {
            MultiPoly out(r.vars());
            for (const auto& [e, c] : r.terms()) {
                Exponents f = e;
                f[idx] %= 2;
                MultiPoly term(r.vars());
                term.add_term(f, c);
                out += term;
            }
            r = out;
        }
    }
    return r;
}

}  // namespace

std::vector<std::string> SummandSpec::vars() const {
    std::vector<std::string> v{"n"};
    for (const auto& g : geometrics) v.push_back(g.symbol);
    return v;
}

SummandSpec SummandSpec::normalized() const {
    SummandSpec out;
    out.start = start;
    auto vs = vars();
    RatFunc r = rational;
    // merge atoms sharing a base
    for (const auto& g : geometrics) {
        if (g.q == 0) throw InvalidInput("geometric base must be nonzero");
        auto it = std::find_if(out.geometrics.begin(), out.geometrics.end(),
                               [&](const GeometricAtom& h) { return h.q == g.q; });
        if (it == out.geometrics.end()) out.geometrics.push_back(g);
        else r = r.substitute(g.symbol, RatFunc(MultiPoly::variable(it->symbol, vs)));
    }
    std::map<long, int> prof;
    for (const auto& f : factorials) {
        if (f.stride <= 0) throw InvalidInput("factorial stride must be positive");
        prof[f.stride] += f.exponent;
        // (s n + c)! = (s n)! * prod_{j=1}^{c} (s n + j)      c > 0
        //            = (s n)! / prod_{j=0}^{-c-1} (s n - j)   c < 0
        if (f.offset > 0) r *= rf_pow(linear_product(f.stride, 1, f.offset, "n", vs), f.exponent);
        else if (f.offset < 0) r *= rf_pow(linear_product(f.stride, f.offset + 1, 0, "n", vs), -f.exponent);
    }
    for (const auto& [s, e] : prof)
        if (e != 0) out.factorials.push_back({s, 0, e});
    out.rational = r;
    return out;
}

std::map<long, int> SummandSpec::factorial_profile() const {
    std::map<long, int> p;
    for (const auto& f : normalized().factorials) p[f.stride] = f.exponent;
    return p;
}

Rational SummandSpec::eval(long n) const {
    Rational r = 1;
    for (const auto& f : factorials) {
        long arg = f.stride * n + f.offset;
        if (arg < 0) {
            if (f.exponent < 0) return 0;
            if (f.exponent > 0) throw PoleInRange(n);
            continue;
        }
        Integer fa = factorial(arg);
        if (f.exponent >= 0) r *= Rational(ipow(fa, f.exponent));
        else r /= Rational(ipow(fa, -f.exponent));
    }
    try {
        r *= rational.eval(atom_point("n", n, geometrics));
    } catch (const Error&) {
        throw PoleInRange(n);
    }
    return r;
}

nlohmann::json SummandSpec::to_json() const {
    nlohmann::json j;
    j["rational"] = rational.to_string();
    nlohmann::json g = nlohmann::json::array();
    for (const auto& a : geometrics) g.push_back({{"symbol", a.symbol}, {"q", to_string(a.q)}});
    j["geometric"] = g;
    nlohmann::json f = nlohmann::json::array();
    for (const auto& a : factorials) f.push_back({a.stride, a.offset, a.exponent});
    j["factorials"] = f;
    j["start"] = start;
    return j;
}

SummandSpec SummandSpec::from_json(const nlohmann::json& j) {
    static const std::vector<std::string> known{"rational", "geometric", "factorials", "start"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw InvalidInput("unknown key '" + it.key() + "' in summand");
    SummandSpec s;
    if (j.contains("geometric"))
        for (const auto& g : j.at("geometric")) {
            GeometricAtom a;
            a.symbol = g.at("symbol").get<std::string>();
            const auto& q = g.at("q");
            a.q = q.is_string() ? parse_rational(q.get<std::string>()) : Rational(q.get<long>());
            if (a.q == 0) throw InvalidInput("geometric base must be nonzero");
            s.geometrics.push_back(a);
        }
    if (j.contains("factorials"))
        for (const auto& f : j.at("factorials")) {
            if (!f.is_array() || f.size() != 3) throw InvalidInput("factorial atoms are [stride, offset, exponent]");
            FactorialAtom a{f[0].get<long>(), f[1].get<long>(), f[2].get<int>()};
            if (a.stride <= 0) throw InvalidInput("factorial stride must be positive");
            s.factorials.push_back(a);
        }
    s.start = j.value("start", 0L);
    auto vs = s.vars();
    if (j.contains("rational")) {
        const auto& r = j.at("rational");
        s.rational = r.is_string() ? parse_ratfunc(r.get<std::string>(), vs) : RatFunc(Rational(r.get<long>()));
    }
    for (const auto& v : s.rational.active_vars())
        if (std::find(vs.begin(), vs.end(), v) == vs.end())
            throw InvalidInput("summand uses undeclared symbol '" + v + "'");
    return s;
}

SummandSpec combine(const SummandSpec& f, const Rational& a, const SummandSpec& g, const Rational& b) {
    SummandSpec nf = f.normalized(), ng = g.normalized();
    if (nf.factorial_profile() != ng.factorial_profile())
        throw InvalidInput("summands with different factorial atoms cannot be combined");
    SummandSpec out = nf;
    RatFunc rg = ng.rational;
    for (const auto& atom : ng.geometrics) {
        auto it = std::find_if(out.geometrics.begin(), out.geometrics.end(),
                               [&](const GeometricAtom& h) { return h.q == atom.q; });
        std::string target;
        if (it != out.geometrics.end()) {
            target = it->symbol;
        } else {
            target = fresh_symbol(out.geometrics);
            out.geometrics.push_back({target, atom.q});
        }
        if (target != atom.symbol) {
            std::string tmp = "__tmp_" + atom.symbol;
            rg = rg.substitute(atom.symbol, RatFunc::variable(tmp));
            rg = rg.substitute(tmp, RatFunc::variable(target));
        }
    }
    out.rational = RatFunc(a) * nf.rational + RatFunc(b) * rg;
    return out;
}

SequenceSample partial_sums(const SummandSpec& f, long M) {
    SequenceSample s;
    s.offset = f.start + 1;
    Rational acc = 0;
    for (long i = 0; i < M; ++i) {
        acc += f.eval(f.start + i);
        s.values.push_back(acc);
    }
    return s;
}

std::vector<std::string> ClosedForm::vars() const {
    std::vector<std::string> v{"N"};
    for (const auto& g : geometrics) v.push_back(g.symbol);
    return v;
}

Rational ClosedForm::eval(long N) const {
    Rational r;
    try {
        auto pt = atom_point("N", N, geometrics);
        Rational d = den.eval(pt);
        if (d == 0) throw PoleInRange(N);
        r = num.eval(pt) / d;
    } catch (const PoleInRange&) {
        throw;
    } catch (const Error&) {
        throw PoleInRange(N);
    }
    for (const auto& [s, e] : factorials) {
        long arg = s * N;
        if (arg < 0) {
            if (e < 0) return 0;
            throw PoleInRange(N);
        }
        Integer fa = factorial(arg);
        if (e >= 0) r *= Rational(ipow(fa, e));
        else r /= Rational(ipow(fa, -e));
    }
    return Rational(r);
}

std::string ClosedForm::to_string() const {
    auto fact = [](long s, int e) {
        std::string b = s == 1 ? "N!" : "(" + std::to_string(s) + "*N)!";
        int m = e < 0 ? -e : e;
        return m == 1 ? b : b + "^" + std::to_string(m);
    };
    std::string top = "(" + num.to_string() + ")";
    std::vector<std::string> bottom;
    if (!(den.is_constant() && den.constant_value() == 1)) bottom.push_back("(" + den.to_string() + ")");
    for (const auto& [s, e] : factorials) {
        if (e > 0) top += "*" + fact(s, e);
        else if (e < 0) bottom.push_back(fact(s, e));
    }
    std::string out = top;
    if (!bottom.empty()) {
        std::string b;
        for (std::size_t i = 0; i < bottom.size(); ++i) b += (i ? "*" : "") + bottom[i];
        out += bottom.size() == 1 ? "/" + b : "/(" + b + ")";
    }
    if (!geometrics.empty()) {
        out += " where ";
        for (std::size_t i = 0; i < geometrics.size(); ++i)
            out += (i ? ", " : "") + geometrics[i].symbol + " = (" + expmath::to_string(geometrics[i].q) + ")^N";
    }
    return out;
}

nlohmann::json ClosedForm::to_json() const {
    nlohmann::json j;
    j["numerator"] = num.to_string();
    j["denominator"] = den.to_string();
    nlohmann::json g = nlohmann::json::array();
    for (const auto& a : geometrics) g.push_back({{"symbol", a.symbol}, {"q", expmath::to_string(a.q)}});
    j["geometric"] = g;
    nlohmann::json f = nlohmann::json::array();
    for (const auto& [s, e] : factorials) f.push_back({s, e});
    j["factorials"] = f;
    j["text"] = to_string();
    return j;
}

MultiPoly shift_back(const MultiPoly& p, const std::string& var, const std::vector<GeometricAtom>& geos) {
    MultiPoly r = p.shift(var, -1);
    for (const auto& g : geos)
        if (r.var_index(g.symbol) >= 0)
            r = r.substitute(g.symbol, MultiPoly::variable(g.symbol, r.vars()) * (Rational(1) / g.q));
    return r;
}

namespace {

MultiPoly shift_forward(const MultiPoly& p, const std::string& var, const std::vector<GeometricAtom>& geos) {
    MultiPoly r = p.shift(var, 1);
    for (const auto& g : geos)
        if (r.var_index(g.symbol) >= 0) r = r.substitute(g.symbol, MultiPoly::variable(g.symbol, r.vars()) * g.q);
    return r;
}

long numeric_refutation(const ClosedForm& t, const SummandSpec& f, TailConvention conv) {
    for (long N = f.start; N < f.start + 200; ++N) {
        try {
            Rational lhs = conv == TailConvention::After ? t.eval(N - 1) - t.eval(N) : t.eval(N) - t.eval(N + 1);
            if (lhs != f.eval(N)) return N;
        } catch (const PoleInRange&) {
        }
    }
    return f.start;
}

}  // namespace

TelescopeCheck verify_telescoping(const ClosedForm& t, const SummandSpec& f, TailConvention conv) {
    TelescopeCheck out;
    SummandSpec g = f.normalized();
    std::map<long, int> tprof;
    for (const auto& [s, e] : t.factorials)
        if (e != 0) tprof[s] = e;
    if (tprof != g.factorial_profile()) {
        out.refuted_at = numeric_refutation(t, f, conv);
        return out;
    }
    // common symbol set: T's atoms plus any extra bases of the summand
    std::vector<GeometricAtom> geos = t.geometrics;
    std::vector<std::pair<std::string, std::string>> rename;
    for (const auto& a : g.geometrics) {
        auto it = std::find_if(geos.begin(), geos.end(), [&](const GeometricAtom& h) { return h.q == a.q; });
        if (it == geos.end()) {
            GeometricAtom na{fresh_symbol(geos), a.q};
            geos.push_back(na);
            rename.emplace_back(a.symbol, na.symbol);
        } else {
            rename.emplace_back(a.symbol, it->symbol);
        }
    }
    std::vector<std::string> vars{"N"};
    for (const auto& a : geos) vars.push_back(a.symbol);

    RatFunc gN = g.rational;
    {
        std::vector<std::pair<std::string, std::string>> steps{{"n", "__N"}};
        for (const auto& [from, to] : rename) steps.emplace_back(from, "__" + to);
        for (const auto& [from, to] : steps) gN = gN.substitute(from, RatFunc::variable(to));
        gN = gN.substitute("__N", RatFunc::variable("N"));
        for (const auto& [from, to] : rename) gN = gN.substitute("__" + to, RatFunc::variable(to));
    }
    MultiPoly U = t.num.with_vars(vars), V = t.den.with_vars(vars);
    RatFunc here(U, V);
    RatFunc other;
    // ratio of the reference atoms at the neighbouring index
    RatFunc atom_ratio(1);
    for (const auto& [s, e] : tprof) {
        if (conv == TailConvention::After)  // (sN - s)! / (sN)!
            atom_ratio *= rf_pow(linear_product(s, -(s - 1), 0, "N", vars), -e);
        else  // (sN + s)! / (sN)!
            atom_ratio *= rf_pow(linear_product(s, 1, s, "N", vars), e);
    }
    if (conv == TailConvention::After) {
        other = RatFunc(shift_back(U, "N", geos), shift_back(V, "N", geos)) * atom_ratio;
        out.residual = other - here - gN;
    } else {
        other = RatFunc(shift_forward(U, "N", geos), shift_forward(V, "N", geos)) * atom_ratio;
        out.residual = here - other - gN;
    }
    MultiPoly rn = reduce_unit_bases(out.residual.num().with_vars(vars), geos);
    out.proof = rn.is_zero();
    if (!out.proof) out.refuted_at = numeric_refutation(t, f, conv);
    return out;
}

}  // namespace expmath
