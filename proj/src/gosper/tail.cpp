#include "expmath/gosper/tail.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "expmath/exact/linear_solve.hpp"

namespace expmath {

namespace {

Integer pow10(long d) { return ipow(Integer(10), static_cast<unsigned long>(std::max<long>(d, 0))); }

void monomials(std::size_t nvars, int deg, std::vector<int>& cur, std::vector<Exponents>& out) {
    if (cur.size() == nvars) {
        out.push_back(cur);
        return;
    }
    for (int a = 0; a <= deg; ++a) {
        cur.push_back(a);
        monomials(nvars, deg - a, cur, out);
        cur.pop_back();
    }
}

std::vector<Exponents> monomials(std::size_t nvars, int deg) {
    std::vector<Exponents> out;
    std::vector<int> cur;
    monomials(nvars, deg, cur, out);
    return out;
}

Rational mono_value(const Exponents& e, const std::vector<Rational>& point) {
    Rational r = 1;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) r *= rpow(point[i], e[i]);
    return r;
}

MultiPoly from_coeffs(const std::vector<Exponents>& monos, const std::vector<Rational>& c, std::size_t off,
                      const std::vector<std::string>& vars) {
    MultiPoly p(vars);
    for (std::size_t i = 0; i < monos.size(); ++i)
        if (c[off + i] != 0) p.add_term(monos[i], c[off + i]);
    return p;
}

struct TailContext {
    SummandSpec g;
    std::map<long, int> profile;
    std::vector<std::string> vars;  // N and the symbols

    std::vector<Rational> point(long N) const {
        std::vector<Rational> p{Rational(N)};
        for (const auto& a : g.geometrics) p.push_back(rpow(a.q, N));
        return p;
    }
    // A(N-1) / A(N)
    Rational atom_ratio(long N) const {
        Rational r = 1;
        for (const auto& [s, e] : profile) {
            Rational prod = 1;
            for (long j = 0; j < s; ++j) prod *= Rational(s * N - j);
            r *= rpow(prod, -e);
        }
        return r;
    }
    // G(N) / A(N)
    Rational reduced_value(long N) const {
        std::map<std::string, Rational> pt{{"n", N}};
        for (const auto& a : g.geometrics) pt[a.symbol] = rpow(a.q, N);
        return g.rational.eval(pt);
    }
};

// Exact values T(N) = sum_{n > N} G(n) for N in [lo, hi], truncated at relative precision 10^-W.
std::vector<Rational> tail_values(const SummandSpec& g, long lo, long hi, long W) {
    std::vector<Rational> terms;
    for (long n = lo + 1; n <= hi + 1; ++n) terms.push_back(g.eval(n));
    Rational ref = 0;
    for (long n = hi + 1; n <= hi + 4; ++n) ref = std::max(ref, Rational(abs(g.eval(n))));
    if (ref == 0) ref = 1;
    Rational eps = ref / Rational(pow10(W));
    int small = 0;
    for (long n = hi + 2; small < 5; ++n) {
        Rational t = g.eval(n);
        terms.push_back(t);
        small = abs(t) < eps ? small + 1 : 0;
        if (n > hi + 20000) throw NotFound("tail terms decay too slowly", "ratio");
    }
    // suffix sums
    std::vector<Rational> out(hi - lo + 1);
    Rational acc = 0;
    for (long idx = static_cast<long>(terms.size()) - 1; idx >= 0; --idx) {
        acc += terms[idx];
        long N = lo + idx;  // terms[idx] = G(lo + 1 + idx), so acc = T(lo + idx)
        if (N <= hi) out[N - lo] = acc;
    }
    return out;
}

// total: sum_{n >= start} G(n) when known exactly; the tail values are then exact.
ClosedForm tail_attempt(const TailContext& ctx, const TailOptions& opt, long W, const std::optional<Rational>& total) {
    const SummandSpec& g = ctx.g;
    const auto& vars = ctx.vars;
    std::size_t nv = vars.size();
    long N0 = std::max<long>(g.start, 0) + 1;
    const long nsamples = nv == 1 ? 40 : 60;
    long hi = N0 + nsamples;

    // (1) tail values and (2) exact ratios X(N)/X(N-1)
    std::vector<Rational> T;
    if (total) {
        Rational acc = *total;
        for (long n = g.start; n < N0 - 1; ++n) acc -= g.eval(n);
        for (long N = N0 - 1; N <= hi; ++N) {
            acc -= g.eval(N);
            T.push_back(acc);
        }
    } else {
        T = tail_values(g, N0 - 1, hi, W);
    }
    Integer bound = pow10((W - 10) / 2);
    Rational rel_tol = make_rational(Integer(1), pow10(W - 20));
    // a tail value negligible next to both neighbours is a zero of T; ratios touching it carry no information
    auto negligible = [&](long i) {
        if (T[i] == 0) return true;
        if (total || i == 0 || i + 1 >= static_cast<long>(T.size())) return false;
        return abs(T[i]) < std::max(abs(T[i - 1]), abs(T[i + 1])) * rel_tol;
    };
    std::vector<std::pair<long, Rational>> z;
    for (long N = N0; N <= hi; ++N) {
        const Rational& prev = T[N - 1 - (N0 - 1)];
        const Rational& cur = T[N - (N0 - 1)];
        if (negligible(N - 1 - (N0 - 1)) || negligible(N - (N0 - 1))) continue;
        Rational v = cur / prev * ctx.atom_ratio(N);
        if (total) {
            z.emplace_back(N, v);
            continue;
        }
        Rational r = best_rational(v, bound);
        if (abs(r - v) > abs(v) * rel_tol) throw NotFound("tail ratio is not a low-height rational", "ratio");
        z.emplace_back(N, r);
    }

    // fit X(N)/X(N-1) = P/Q
    MultiPoly P, Q;
    bool fitted = false;
    for (int e = 0; e <= 2 * opt.max_degree && !fitted; ++e) {
        auto monos = monomials(nv, e);
        std::size_t u = 2 * monos.size();
        if (u + 4 > z.size()) break;
        Matrix<Rational> m;
        for (std::size_t s = 0; s < std::min(z.size(), u + 6); ++s) {
            auto pt = ctx.point(z[s].first);
            std::vector<Rational> row;
            for (const auto& mo : monos) row.push_back(mono_value(mo, pt));
            for (const auto& mo : monos) row.push_back(-z[s].second * mono_value(mo, pt));
            m.push_back(std::move(row));
        }
        auto sol = solve_linear(m, std::vector<Rational>(m.size(), 0));
        for (const auto& v : sol.nullspace) {
            MultiPoly p = from_coeffs(monos, v, 0, vars), q = from_coeffs(monos, v, monos.size(), vars);
            if (p.is_zero() || q.is_zero()) continue;
            bool ok = true;
            for (const auto& [N, val] : z) {
                auto pt = ctx.point(N);
                std::map<std::string, Rational> mp;
                for (std::size_t i = 0; i < nv; ++i) mp[vars[i]] = pt[i];
                Rational qv = q.eval(mp);
                if (qv == 0 || p.eval(mp) / qv != val) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            MultiPoly h = gcd(p, q);
            P = exact_div(p, h).with_vars(vars);
            Q = exact_div(q, h).with_vars(vars);
            fitted = true;
            break;
        }
    }
    if (!fitted) throw NotFound("no rational ratio of degree <= " + std::to_string(2 * opt.max_degree), "ratio");

    // (3) denominator of X from the factors of Q that reappear shifted in P
    MultiPoly Pf = P.shift("N", 1);
    for (const auto& a : g.geometrics)
        if (Pf.var_index(a.symbol) >= 0) Pf = Pf.substitute(a.symbol, MultiPoly::variable(a.symbol, vars) * a.q);
    MultiPoly V = gcd(Q, Pf.with_vars(vars)).with_vars(vars);
    if (V.is_zero()) V = MultiPoly(Rational(1), vars);
    MultiPoly Vb = shift_back(V, "N", g.geometrics).with_vars(vars);

    // (4) numerator from U(N-1) a(N) / V(N-1) - U(N) / V(N) = G(N) / A(N)
    for (int du = 0; du <= opt.max_degree; ++du) {
        auto monos = monomials(nv, du);
        std::size_t k = monos.size();
        Matrix<Rational> m;
        std::vector<Rational> rhs;
        for (long N = N0; m.size() < std::max<std::size_t>(3 * k, k + 5) && N < N0 + 400; ++N) {
            auto pt = ctx.point(N), ptb = ctx.point(N - 1);
            std::map<std::string, Rational> mp;
            for (std::size_t i = 0; i < nv; ++i) mp[vars[i]] = pt[i];
            Rational vN = V.eval(mp), vb = Vb.eval(mp);
            if (vN == 0 || vb == 0) continue;
            Rational rv;
            try {
                rv = ctx.reduced_value(N);
            } catch (const Error&) {
                continue;
            }
            Rational ar = ctx.atom_ratio(N);
            std::vector<Rational> row;
            for (const auto& mo : monos) row.push_back(mono_value(mo, ptb) * ar / vb - mono_value(mo, pt) / vN);
            m.push_back(std::move(row));
            rhs.push_back(rv);
        }
        LinearSolution<Rational> sol;
        try {
            sol = solve_linear(m, rhs);
        } catch (const NotFound&) {
            continue;
        }
        MultiPoly U = from_coeffs(monos, sol.particular, 0, vars);
        ClosedForm cf;
        cf.geometrics = g.geometrics;
        cf.factorials = ctx.profile;
        MultiPoly h = U.is_zero() ? V : gcd(U, V);
        cf.num = U.is_zero() ? U : exact_div(U, h).with_vars(vars);
        cf.den = U.is_zero() ? MultiPoly(Rational(1), vars) : exact_div(V, h).with_vars(vars);
        // integer denominator with positive leading coefficient
        Rational c = cf.den.content();
        if (cf.den.leading_coeff() < 0) c = -c;
        cf.den *= Rational(1) / c;
        cf.num *= Rational(1) / c;
        // (5)
        if (verify_telescoping(cf, g).proof) return cf;
    }
    throw NotFound("no numerator of degree <= " + std::to_string(opt.max_degree) + " telescopes", "numerator");
}

}  // namespace

SummandSpec subtract_basis_series(const SummandSpec& f, const LimitGuess& limit) {
    SummandSpec g = f.normalized();
    for (const auto& [label, c] : limit.terms) {
        if (label == "1") continue;
        BasisConstant bc = basis_constant(label);
        if (!bc.series) throw NotFound("constant " + label + " has no series to subtract", "basis");
        try {
            g = combine(g, 1, *bc.series, -c);
        } catch (const InvalidInput& e) {
            throw NotFound(std::string("cannot subtract the series of ") + label + ": " + e.what(), "basis");
        }
    }
    g.start = f.start;
    return g;
}

ClosedForm guess_tail(const SummandSpec& f, const LimitGuess& limit, const TailOptions& opt) {
    TailContext ctx;
    ctx.g = subtract_basis_series(f, limit);
    ctx.profile = ctx.g.factorial_profile();
    ctx.vars = {"N"};
    for (const auto& a : ctx.g.geometrics) ctx.vars.push_back(a.symbol);
    if (ctx.g.rational.is_zero()) {
        ClosedForm zero;
        zero.num = MultiPoly(ctx.vars);
        zero.den = MultiPoly(Rational(1), ctx.vars);
        zero.geometrics = ctx.g.geometrics;
        zero.factorials = ctx.profile;
        return zero;
    }
    long W = 10 + 2 * opt.precision;
    std::optional<Rational> total;
    bool only_rational = std::all_of(limit.terms.begin(), limit.terms.end(),
                                     [](const auto& t) { return t.first == "1"; });
    if (only_rational) total = limit.coefficient("1");
    try {
        return tail_attempt(ctx, opt, W, total);
    } catch (const NotFound& e) {
        if (e.stage() != "ratio" || total) throw;
        return tail_attempt(ctx, opt, 2 * W, total);
    }
}

std::string GosperResult::to_string() const {
    std::string s;
    s += "limit: " + limit.to_string() + "  [" + limit_tag + "]\n";
    s += "ratio T(N)/T(N-1): " + ratio.to_string() + "  [" + ratio_tag + "]\n";
    s += "tail T(N) = sum_{n>N} (F(n) - series): " + tail.to_string() + "  [" + tail_tag + "]\n";
    return s;
}

nlohmann::json GosperResult::to_json() const {
    nlohmann::json j;
    nlohmann::json l;
    l["text"] = limit.to_string();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [lab, c] : limit.terms) terms.push_back({{"constant", lab}, {"coefficient", expmath::to_string(c)}});
    l["terms"] = terms;
    l["trusted_digits"] = limit.trusted_digits;
    l["tag"] = limit_tag;
    j["limit"] = l;
    j["ratio"] = {{"text", ratio.to_string()}, {"tag", ratio_tag}};
    nlohmann::json t = tail.to_json();
    t["tag"] = tail_tag;
    j["tail"] = t;
    return j;
}

GosperResult gosper_sum(const SummandSpec& f, const ConstantBasis& basis, const LimitOptions& lopt,
                        const TailOptions& topt) {
    GosperResult r;
    r.limit = guess_limit(f, basis, lopt);
    r.limit_tag = r.limit.exact ? "PROOF" : "GUESS";
    r.reduced = subtract_basis_series(f, r.limit);
    r.tail = guess_tail(f, r.limit, topt);
    r.check = verify_telescoping(r.tail, r.reduced);
    if (!r.check.proof) throw InternalError("returned tail does not telescope");
    r.tail_tag = "PROOF";

    auto vars = r.tail.vars();
    MultiPoly U = r.tail.num.with_vars(vars), V = r.tail.den.with_vars(vars);
    RatFunc atom(1);
    for (const auto& [s, e] : r.tail.factorials) {
        // A(N) / A(N-1) = prod_{j=0}^{s-1} (sN - j)^e
        MultiPoly prod(Rational(1), vars);
        for (long j = 0; j < s; ++j)
            prod *= MultiPoly::variable("N", vars) * Rational(s) - MultiPoly(Rational(j), vars);
        atom *= e >= 0 ? RatFunc(pow(prod, static_cast<unsigned>(e)))
                       : RatFunc(MultiPoly(Rational(1), vars), pow(prod, static_cast<unsigned>(-e)));
    }
    if (U.is_zero()) {
        r.ratio = RatFunc(0);
    } else {
        r.ratio = RatFunc(U * shift_back(V, "N", r.tail.geometrics), V * shift_back(U, "N", r.tail.geometrics)) * atom;
    }
    r.ratio_tag = "PROOF";

    // the proven tail pins the limit when it decays to zero
    long total_exp = 0;
    for (const auto& [s, e] : r.tail.factorials) total_exp += e;
    bool symbol_free = true;
    for (const auto& a : r.tail.geometrics)
        if (U.degree_in(a.symbol) > 0 || V.degree_in(a.symbol) > 0) symbol_free = false;
    bool decays = U.is_zero() || total_exp < 0 ||
                  (total_exp == 0 && symbol_free && U.degree_in("N") < V.degree_in("N"));
    if (decays && !r.limit.exact) {
        // sum_{n >= start} G(n) = T(start - 1) fixes the rational part of the limit
        Rational head = 0;
        for (const auto& [label, c] : r.limit.terms) {
            if (label == "1") continue;
            auto bc = basis_constant(label);
            for (long n = bc.series->start; n < f.start; ++n) head += c * bc.series->eval(n);
        }
        Rational t_before;
        try {
            t_before = r.tail.eval(f.start - 1);
        } catch (const PoleInRange&) {
            t_before = r.tail.eval(f.start) + r.reduced.eval(f.start);
        }
        Rational one = t_before - head;
        if (one != r.limit.coefficient("1")) {
            std::vector<std::pair<std::string, Rational>> terms;
            if (one != 0) terms.push_back({"1", one});
            for (const auto& t : r.limit.terms)
                if (t.first != "1") terms.push_back(t);
            r.limit.terms = terms;
        }
        r.limit_tag = "PROOF";
    }
    return r;
}

}  // namespace expmath
