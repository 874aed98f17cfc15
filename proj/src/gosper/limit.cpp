#include "expmath/gosper/limit.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "expmath/exact/partial_fractions.hpp"

namespace expmath {

namespace {

Integer pow10(long d) { return ipow(Integer(10), static_cast<unsigned long>(std::max<long>(d, 0))); }

Rational truncate_digits(const Rational& x, long digits) {
    Integer s = pow10(digits);
    Rational y = x * Rational(s);
    Integer t;
    mpz_fdiv_q(t.get_mpz_t(), y.get_num().get_mpz_t(), y.get_den().get_mpz_t());
    return make_rational(t, s);
}

Integer round_rational(const Rational& x) {
    Rational h = x + Rational(1, 2);
    Integer t;
    mpz_fdiv_q(t.get_mpz_t(), h.get_num().get_mpz_t(), h.get_den().get_mpz_t());
    return t;
}

// sum_{k>=0} (-1)^k x^(2k+1)/(2k+1) to `digits`
Rational arctan_series(const Rational& x, long digits) {
    Rational eps = make_rational(Integer(1), pow10(digits + 5));
    Rational sum = 0, p = x;
    Rational x2 = x * x;
    for (long k = 0;; ++k) {
        Rational t = p / Rational(2 * k + 1);
        sum += (k % 2) ? Rational(-t) : t;
        if (abs(t) < eps) break;
        p *= x2;
    }
    return sum;
}

// Decimal digits to which a and b agree (absolute).
long agreement(const Rational& a, const Rational& b, long cap) {
    Rational d = a - b;
    if (d == 0) return cap;
    double l = log10_abs(d);
    return std::min<long>(cap, static_cast<long>(std::floor(-l)));
}

}  // namespace

Rational BasisConstant::value(long digits) const {
    if (label == "1") return 1;
    if (label == "pi") {
        Rational v = Rational(16) * arctan_series(make_rational(1, 5), digits + 2) -
                     Rational(4) * arctan_series(make_rational(1, 239), digits + 2);
        return truncate_digits(v, digits + 3);
    }
    if (!series) throw InvalidInput("constant '" + label + "' has no evaluation rule");
    Rational eps = make_rational(Integer(1), pow10(digits + 5));
    Rational sum = 0;
    int small = 0;
    for (long n = series->start; small < 3; ++n) {
        Rational t = series->eval(n);
        sum += t;
        small = abs(t) < eps ? small + 1 : 0;
        if (n > 100000) throw InternalError("constant series does not converge fast enough");
    }
    return truncate_digits(sum, digits + 3);
}

BasisConstant basis_constant(const std::string& label) {
    BasisConstant c;
    c.label = label;
    SummandSpec s;
    if (label == "1") {
        c.note = "exact";
        return c;
    }
    if (label == "e") {
        s.factorials = {{1, 0, -1}};
    } else if (label == "1/e") {
        s.geometrics = {{"s", Rational(-1)}};
        s.rational = RatFunc::variable("s");
        s.factorials = {{1, 0, -1}};
    } else if (label == "cosh(1)") {
        s.factorials = {{2, 0, -1}};
    } else if (label == "sinh(1)") {
        s.factorials = {{2, 1, -1}};
    } else if (label == "pi") {
        c.note = "numeric only (no series atom)";
        return c;
    } else {
        throw InvalidInput("unknown constant '" + label + "' (known: 1, e, 1/e, cosh(1), sinh(1), pi)");
    }
    c.series = s;
    c.note = "series";
    return c;
}

ConstantBasis make_basis(const std::vector<std::string>& labels) {
    ConstantBasis b;
    for (const auto& l : labels) {
        if (std::any_of(b.begin(), b.end(), [&](const BasisConstant& c) { return c.label == l; }))
            throw InvalidInput("duplicate basis constant '" + l + "'");
        b.push_back(basis_constant(l));
    }
    return b;
}

ConstantBasis default_basis(const SummandSpec& f) {
    std::vector<std::string> labels{"1"};
    auto prof = f.factorial_profile();
    bool negative_base = std::any_of(f.geometrics.begin(), f.geometrics.end(),
                                     [](const GeometricAtom& g) { return g.q < 0; });
    if (prof.count(1) && prof.at(1) == -1) {
        labels.push_back("e");
        if (negative_base) labels.push_back("1/e");
    }
    if (prof.count(2) && prof.at(2) == -1) {
        labels.push_back("cosh(1)");
        labels.push_back("sinh(1)");
    }
    return make_basis(labels);
}

Rational LimitGuess::coefficient(const std::string& label) const {
    for (const auto& [l, c] : terms)
        if (l == label) return c;
    return 0;
}

std::string LimitGuess::to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& [l, c] = terms[i];
        std::string cs = expmath::to_string(c);
        if (i) {
            if (c < 0) {
                s += " - ";
                cs = expmath::to_string(Rational(-c));
            } else {
                s += " + ";
            }
        }
        if (l == "1") s += cs;
        else if (cs == "1") s += l;
        else if (cs == "-1") s += "-" + l;
        else s += cs + "*" + l;
    }
    return s;
}

Rational best_rational(const Rational& x, const Integer& bound) {
    Integer p0 = 1, q0 = 0, p1, q1 = 1;
    Integer num = x.get_num(), den = x.get_den();
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    p1 = a;
    Integer r = num - a * den;
    while (r != 0) {
        num = den;
        den = r;
        mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        r = num - a * den;
        Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > bound) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    return make_rational(p1, q1);
}

std::optional<Rational> telescoping_rational_limit(const SummandSpec& f) {
    SummandSpec g = f.normalized();
    if (!g.factorials.empty()) return std::nullopt;
    for (const auto& a : g.geometrics)
        if (g.rational.num().degree_in(a.symbol) > 0 || g.rational.den().degree_in(a.symbol) > 0)
            return std::nullopt;
    UniPoly num = g.rational.num().to_unipoly("n"), den = g.rational.den().to_unipoly("n");
    if (num.is_zero()) return Rational(0);
    if (num.degree() > den.degree() - 2) return std::nullopt;
    PartialFractions pf = partial_fractions(num, den);
    if (!pf.polynomial_part.is_zero()) return std::nullopt;

    struct Member {
        long shift;
        UniPoly numerator;
    };
    // class representative (monic) -> multiplicity -> members
    std::vector<std::pair<UniPoly, std::map<int, std::vector<Member>>>> classes;
    for (const auto& t : pf.terms) {
        UniPoly fm = t.factor.monic();
        Rational scale = rpow(t.factor.leading(), -t.multiplicity);
        UniPoly a = t.numerator * UniPoly(scale, "n");
        bool placed = false;
        for (auto& [rep, groups] : classes) {
            int d = rep.degree();
            if (fm.degree() != d) continue;
            // fm(n) = rep(n + s): compare the n^(d-1) coefficients
            Rational s = (fm.coeff(d - 1) - rep.coeff(d - 1)) / Rational(d);
            if (Rational(s).get_den() != 1) continue;
            long sv = Rational(s).get_num().get_si();
            if (rep.shift(Rational(sv)) != fm) continue;
            groups[t.multiplicity].push_back({sv, a});
            placed = true;
            break;
        }
        if (!placed) {
            classes.push_back({fm, {}});
            classes.back().second[t.multiplicity].push_back({0, a});
        }
    }
    Rational total = 0;
    long n0 = g.start;
    for (const auto& [rep, groups] : classes)
        for (const auto& [m, members] : groups) {
            UniPoly b(Rational(0), "n");
            long smax = members.front().shift;
            for (const auto& mb : members) {
                b = b + mb.numerator.shift(Rational(-mb.shift));
                smax = std::max(smax, mb.shift);
            }
            if (!b.is_zero()) return std::nullopt;
            for (const auto& mb : members)
                for (long n = n0; n <= n0 + smax - mb.shift - 1; ++n) {
                    Rational d = rpow(rep.eval(Rational(n + mb.shift)), m);
                    if (d == 0) return std::nullopt;
                    total += mb.numerator.eval(Rational(n)) / d;
                }
        }
    return Rational(total);
}

std::optional<std::vector<Integer>> integer_relation(const std::vector<Rational>& values, long digits,
                                                     const Integer& coeff_bound) {
    std::size_t n = values.size();
    if (n < 2) return std::nullopt;
    Integer K = pow10(digits);
    std::vector<std::vector<Integer>> b(n, std::vector<Integer>(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i) {
        b[i][i] = 1;
        b[i][n] = round_rational(values[i] * Rational(K));
    }
    // Gram-Schmidt data
    std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n, 0));
    std::vector<Rational> B(n);
    std::vector<std::vector<Rational>> bs(n);
    for (std::size_t i = 0; i < n; ++i) {
        bs[i].assign(n + 1, 0);
        for (std::size_t k = 0; k <= n; ++k) bs[i][k] = Rational(b[i][k]);
        for (std::size_t j = 0; j < i; ++j) {
            Rational num = 0;
            for (std::size_t k = 0; k <= n; ++k) num += Rational(b[i][k]) * bs[j][k];
            mu[i][j] = num / B[j];
            for (std::size_t k = 0; k <= n; ++k) bs[i][k] -= mu[i][j] * bs[j][k];
        }
        B[i] = 0;
        for (std::size_t k = 0; k <= n; ++k) B[i] += bs[i][k] * bs[i][k];
    }
    auto reduce = [&](std::size_t k, std::size_t l) {
        if (abs(mu[k][l]) * 2 <= 1) return;
        Integer r = round_rational(mu[k][l]);
        for (std::size_t c = 0; c <= n; ++c) b[k][c] -= r * b[l][c];
        for (std::size_t j = 0; j < l; ++j) mu[k][j] -= Rational(r) * mu[l][j];
        mu[k][l] -= Rational(r);
    };
    const Rational delta(3, 4);
    std::size_t k = 1;
    long guard = 0;
    while (k < n) {
        if (++guard > 200000) break;
        reduce(k, k - 1);
        if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            for (std::size_t l = k - 1; l-- > 0;) reduce(k, l);
            ++k;
        } else {
            Rational m = mu[k][k - 1];
            Rational Bn = B[k] + m * m * B[k - 1];
            mu[k][k - 1] = m * B[k - 1] / Bn;
            B[k] = B[k - 1] * B[k] / Bn;
            B[k - 1] = Bn;
            std::swap(b[k], b[k - 1]);
            for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu[k][j], mu[k - 1][j]);
            for (std::size_t i = k + 1; i < n; ++i) {
                Rational t = mu[i][k];
                mu[i][k] = mu[i][k - 1] - m * t;
                mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
            }
            if (k > 1) --k;
        }
    }
    // candidates, shortest first
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        Integer nx = 0, ny = 0;
        for (std::size_t c = 0; c < n; ++c) {
            nx += b[x][c] * b[x][c];
            ny += b[y][c] * b[y][c];
        }
        return nx < ny;
    });
    Rational tol = make_rational(Integer(1), pow10(digits - std::max<long>(5, digits / 10)));
    for (std::size_t idx : order) {
        std::vector<Integer> a(b[idx].begin(), b[idx].begin() + n);
        if (a[0] == 0) continue;
        bool small = std::all_of(a.begin(), a.end(), [&](const Integer& x) { return abs(x) <= coeff_bound; });
        if (!small) continue;
        Rational s = 0;
        for (std::size_t i = 0; i < n; ++i) s += Rational(a[i]) * values[i];
        if (abs(s) > tol) continue;
        if (a[0] < 0)
            for (auto& x : a) x = -x;
        Integer g = 0;
        for (const auto& x : a) g = gcd(g, Integer(abs(x)));
        for (auto& x : a) x /= g;
        return a;
    }
    return std::nullopt;
}

namespace {

LimitGuess guess_once(const SummandSpec& f, const ConstantBasis& basis, const LimitOptions& opt) {
    long target = opt.precision;
    long W = 10 + 2 * target;
    Rational cur = 0;
    long n = f.start, M = 0, trusted = 0;
    Rational half_sum = 0;
    for (long depth = 16;; depth *= 2) {
        while (M < depth) {
            if (M == depth / 2) half_sum = cur;
            cur += f.eval(n++);
            ++M;
        }
        trusted = agreement(cur, half_sum, W);
        if (trusted >= target || depth * 2 > opt.max_terms) break;
    }
    if (trusted < opt.min_trusted)
        throw SlowConvergence("partial sums agree to only " + std::to_string(trusted) + " digits after " +
                              std::to_string(M) + " terms");
    long digits = std::min(trusted, W) - 5;
    Integer bound = pow10(std::max<long>(digits / 3, 1));
    LimitGuess out;
    out.trusted_digits = trusted;
    Rational tol = make_rational(Integer(1), pow10(digits - 2));

    std::vector<const BasisConstant*> nonunit;
    bool has_one = false;
    for (const auto& c : basis) {
        if (c.label == "1") has_one = true;
        else nonunit.push_back(&c);
    }
    if (nonunit.empty()) {
        if (!has_one) throw InvalidInput("empty constant basis");
        Rational r = best_rational(cur, bound);
        if (abs(r - cur) > tol) throw UnknownLimit("no rational with denominator below 10^" +
                                                   std::to_string(digits / 3) + " fits the partial sums");
        if (r != 0) out.terms.push_back({"1", r});
        return out;
    }
    if (!has_one && nonunit.size() == 1) {
        Rational c = nonunit[0]->value(W);
        Rational r = best_rational(cur / c, bound);
        if (abs(r * c - cur) > tol) throw UnknownLimit("no rational multiple of " + nonunit[0]->label + " fits");
        if (r != 0) out.terms.push_back({nonunit[0]->label, r});
        return out;
    }
    std::vector<Rational> vals{cur};
    std::vector<std::string> labels;
    for (const auto& c : basis) {
        vals.push_back(c.value(W));
        labels.push_back(c.label);
    }
    auto rel = integer_relation(vals, digits, bound);
    if (!rel) throw UnknownLimit("no small integer relation between the sum and the basis");
    for (std::size_t i = 0; i < labels.size(); ++i) {
        Rational c = make_rational(-(*rel)[i + 1], (*rel)[0]);
        if (c != 0) out.terms.push_back({labels[i], c});
    }
    return out;
}

}  // namespace

LimitGuess guess_limit(const SummandSpec& f, const ConstantBasis& basis, const LimitOptions& opt) {
    if (auto exact = telescoping_rational_limit(f)) {
        LimitGuess g;
        g.exact = true;
        g.trusted_digits = -1;
        if (*exact != 0) g.terms.push_back({"1", *exact});
        return g;
    }
    try {
        return guess_once(f, basis, opt);
    } catch (const UnknownLimit&) {
        LimitOptions more = opt;
        more.precision *= 2;
        return guess_once(f, basis, more);
    }
}

}  // namespace expmath
