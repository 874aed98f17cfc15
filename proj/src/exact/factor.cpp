#include "expmath/exact/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "expmath/errors.hpp"

namespace expmath {

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    std::vector<std::pair<UniPoly, int>> out;
    if (p.degree() <= 0) return out;
    UniPoly f = p.primitive();
    UniPoly df = f.derivative();
    UniPoly a = gcd(f, df);
    UniPoly b = f / a;
    UniPoly c = df / a;
    UniPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UniPoly g = gcd(b, d);
        if (g.degree() > 0) out.push_back({g.primitive(), i});
        b = b / g;
        c = d / g;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

std::vector<Rational> rational_roots(const UniPoly& p) {
    std::vector<Rational> roots;
    if (p.degree() <= 0) return roots;
    std::vector<Integer> c = p.integer_coeffs();
    // strip the zero root first
    std::size_t low = 0;
    while (c[low] == 0) ++low;
    if (low > 0) roots.push_back(0);
    std::vector<Integer> q(c.begin() + low, c.end());
    if (q.size() <= 1) return roots;
    UniPoly qp(std::vector<Rational>(q.begin(), q.end()), p.var());
    auto num = positive_divisors(q.front());
    auto den = positive_divisors(q.back());
    std::set<Rational> found;
    for (const auto& a : num)
        for (const auto& b : den) {
            if (gcd(a, b) != 1) continue;
            for (int s : {1, -1}) {
                Rational r = make_rational(a * s, b);
                if (qp.eval(r) == 0) found.insert(r);
            }
        }
    roots.insert(roots.end(), found.begin(), found.end());
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace {

constexpr std::uint64_t kComboBudget = 4000000;

std::uint64_t count_divisors_cheap(const Integer& v) {
    if (v == 0) return UINT64_MAX;
    try {
        return positive_divisors(v, 5000).size();
    } catch (const InvalidInput&) {
        return UINT64_MAX;
    }
}

}  // namespace

std::optional<UniPoly> find_factor_of_degree(const UniPoly& p0, int d) {
    UniPoly p = p0.primitive();
    int n = p.degree();
    if (d <= 0 || d >= n) return std::nullopt;
    if (d == 1) {
        auto r = rational_roots(p);
        if (r.empty()) return std::nullopt;
        return UniPoly({-r[0], 1}, p.var()).primitive();
    }
    // choose d+1 evaluation points with small divisor counts
    std::vector<std::pair<std::uint64_t, long>> cand;
    for (long x = -12; x <= 12; ++x) {
        Integer v = p.eval(x).get_num();
        if (v == 0) return UniPoly({Rational(-x), 1}, p.var());  // linear factor found on the way
        cand.push_back({count_divisors_cheap(v), x});
    }
    std::sort(cand.begin(), cand.end());
    std::vector<long> xs;
    std::vector<std::vector<Integer>> divs;
    std::uint64_t combos = 1;
    for (int i = 0; i <= d; ++i) {
        long x = cand[i].second;
        xs.push_back(x);
        auto dv = positive_divisors(p.eval(x).get_num());
        divs.push_back(dv);
        combos *= dv.size() * (i == 0 ? 1 : 2);
        if (combos > kComboBudget) throw InvalidInput("Kronecker search budget exceeded");
    }
    // Lagrange basis polynomials on xs
    std::vector<UniPoly> basis;
    for (int i = 0; i <= d; ++i) {
        UniPoly l(Rational(1), p.var());
        for (int j = 0; j <= d; ++j) {
            if (j == i) continue;
            l *= UniPoly({Rational(-xs[j]), 1}, p.var()) * (Rational(1) / Rational(xs[i] - xs[j]));
        }
        basis.push_back(l);
    }
    Integer lc = p.leading().get_num();
    Integer c0 = p.coeff(0).get_num();
    std::vector<std::size_t> idx(d + 1, 0);
    std::vector<int> sign(d + 1, 1);
    // odometer over divisor choices and signs; the first value's sign is fixed positive
    for (;;) {
        UniPoly g(Rational(0), p.var());
        for (int i = 0; i <= d; ++i) g += basis[i] * Rational(divs[i][idx[i]] * sign[i]);
        if (g.degree() == d) {
            bool integral = true;
            for (const auto& c : g.coeffs())
                if (c.get_den() != 1) { integral = false; break; }
            if (integral && lc % g.leading().get_num() == 0 &&
                (g.coeff(0) == 0 || (c0 != 0 && c0 % g.coeff(0).get_num() == 0)) && divides(g, p))
                return g.primitive();
        }
        int k = 0;
        for (; k <= d; ++k) {
            if (k > 0 && sign[k] == 1) {
                sign[k] = -1;
                break;
            }
            sign[k] = 1;
            if (++idx[k] < divs[k].size()) break;
            idx[k] = 0;
        }
        if (k > d) break;
    }
    return std::nullopt;
}

namespace {

using ModPoly = std::vector<std::int64_t>;

void mtrim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t minv(std::int64_t a, std::int64_t p) {
    std::int64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

ModPoly mmod(ModPoly a, const ModPoly& b, std::int64_t p) {
    mtrim(a);
    std::int64_t inv = minv(b.back(), p);
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int da = static_cast<int>(a.size()) - 1;
        std::int64_t f = a.back() * inv % p;
        for (int j = 0; j <= db; ++j) a[da - db + j] = ((a[da - db + j] - f * b[j]) % p + p) % p;
        mtrim(a);
    }
    return a;
}

ModPoly mdiv(ModPoly a, const ModPoly& b, std::int64_t p) {
    mtrim(a);
    std::int64_t inv = minv(b.back(), p);
    int db = static_cast<int>(b.size()) - 1;
    int da = static_cast<int>(a.size()) - 1;
    if (da < db) return {};
    ModPoly q(da - db + 1, 0);
    for (int i = da; i >= db; --i) {
        std::int64_t f = a[i] * inv % p;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) a[i - db + j] = ((a[i - db + j] - f * b[j]) % p + p) % p;
    }
    return q;
}

ModPoly mmul(const ModPoly& a, const ModPoly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    mtrim(r);
    return r;
}

ModPoly mgcd(ModPoly a, ModPoly b, std::int64_t p) {
    mtrim(a);
    mtrim(b);
    while (!b.empty()) {
        ModPoly r = mmod(a, b, p);
        a = b;
        b = r;
    }
    return a;
}

ModPoly mpowmod(ModPoly base, std::int64_t e, const ModPoly& f, std::int64_t p) {
    ModPoly r{1};
    base = mmod(base, f, p);
    while (e) {
        if (e & 1) r = mmod(mmul(r, base, p), f, p);
        base = mmod(mmul(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

// Degrees of the irreducible factors mod p, or empty if p is unsuitable.
std::vector<int> degree_pattern(const std::vector<Integer>& c, std::int64_t p) {
    ModPoly f(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        Integer r = c[i] % p;
        if (r < 0) r += p;
        f[i] = r.get_si();
    }
    if (f.back() == 0) return {};
    ModPoly df;
    for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * static_cast<std::int64_t>(i) % p);
    mtrim(df);
    if (df.empty() || mgcd(f, df, p).size() != 1) return {};
    std::vector<int> degs;
    ModPoly h{0, 1};
    for (int i = 1; 2 * i <= static_cast<int>(f.size()) - 1; ++i) {
        h = mpowmod(h, p, f, p);
        ModPoly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = (hx[1] - 1 + p) % p;
        mtrim(hx);
        ModPoly g = mgcd(f, hx, p);
        int dg = static_cast<int>(g.size()) - 1;
        if (dg > 0) {
            for (int k = 0; k < dg / i; ++k) degs.push_back(i);
            f = mdiv(f, g, p);
            h = mmod(h, f, p);
        }
    }
    if (f.size() > 1) degs.push_back(static_cast<int>(f.size()) - 1);
    return degs;
}

}  // namespace

std::vector<int> possible_factor_degrees(const UniPoly& p0) {
    UniPoly p = p0.primitive();
    int n = p.degree();
    std::vector<Integer> c = p.integer_coeffs();
    std::set<int> allowed;
    for (int i = 1; i < n; ++i) allowed.insert(i);
    static const int primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                                 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157};
    int used = 0;
    for (int pr : primes) {
        auto degs = degree_pattern(c, pr);
        if (degs.empty()) continue;
        std::set<int> sums{0};
        for (int d : degs) {
            std::set<int> next = sums;
            for (int s : sums) next.insert(s + d);
            sums = next;
        }
        std::set<int> keep;
        for (int a : allowed)
            if (sums.count(a)) keep.insert(a);
        allowed = keep;
        if (allowed.empty() || ++used >= 24) break;
    }
    return {allowed.begin(), allowed.end()};
}

const char* to_string(Irreducibility v) {
    switch (v) {
        case Irreducibility::Irreducible: return "irreducible";
        case Irreducibility::Reducible: return "reducible";
        default: return "unknown";
    }
}

Irreducibility test_irreducible(const UniPoly& p0) {
    if (p0.degree() <= 0) return Irreducibility::Unknown;
    UniPoly p = p0.primitive();
    int n = p.degree();
    if (n == 1) return Irreducibility::Irreducible;
    if (gcd(p, p.derivative()).degree() > 0) return Irreducibility::Reducible;
    if (!rational_roots(p).empty()) return Irreducibility::Reducible;
    auto degs = possible_factor_degrees(p);
    if (degs.empty()) return Irreducibility::Irreducible;
    int smallest = degs.front();
    if (smallest > n / 2) return Irreducibility::Irreducible;
    if (n > 8) return Irreducibility::Unknown;
    for (int d : degs) {
        if (d > n / 2) break;
        try {
            if (find_factor_of_degree(p, d)) return Irreducibility::Reducible;
        } catch (const InvalidInput&) {
            return Irreducibility::Unknown;
        }
    }
    return Irreducibility::Irreducible;
}

namespace {

// Split a square-free primitive polynomial into irreducible pieces where possible.
void split_squarefree(const UniPoly& f, const std::vector<UniPoly>& hints, std::vector<UniPoly>& out, bool& complete) {
    std::vector<UniPoly> work{f};
    for (const auto& h : hints) {
        if (h.degree() <= 0) continue;
        std::vector<UniPoly> next;
        for (const auto& w : work) {
            UniPoly g = gcd(w, h.with_var(w.var()));
            if (g.degree() > 0 && g.degree() < w.degree()) {
                next.push_back(g.primitive());
                next.push_back((w / g).primitive());
            } else {
                next.push_back(w);
            }
        }
        work = next;
    }
    for (auto w : work) {
        for (const auto& r : rational_roots(w)) {
            UniPoly lin = UniPoly({-r, 1}, w.var()).primitive();
            out.push_back(lin);
            w = (w / lin).primitive();
        }
        while (w.degree() > 0) {
            Irreducibility t = test_irreducible(w);
            if (t == Irreducibility::Irreducible) {
                out.push_back(w.primitive());
                break;
            }
            if (t == Irreducibility::Unknown) {
                out.push_back(w.primitive());
                complete = false;
                break;
            }
            std::optional<UniPoly> g;
            for (int d : possible_factor_degrees(w)) {
                if (d > w.degree() / 2) break;
                if ((g = find_factor_of_degree(w, d))) break;
            }
            if (!g) {
                out.push_back(w.primitive());
                complete = false;
                break;
            }
            out.push_back(*g);
            w = (w / *g).primitive();
        }
    }
}

}  // namespace

Factorization factor(const UniPoly& p, const std::vector<UniPoly>& hints) {
    Factorization res;
    if (p.is_zero()) throw InvalidInput("factor of zero polynomial");
    res.unit = p.content();
    if (p.degree() == 0) {
        res.unit = p.coeff(0);
        return res;
    }
    for (const auto& [f, m] : squarefree_decomposition(p)) {
        std::vector<UniPoly> parts;
        split_squarefree(f, hints, parts, res.complete);
        for (auto& g : parts) res.factors.push_back({g, m});
    }
    std::sort(res.factors.begin(), res.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.to_string() < b.first.to_string();
    });
    return res;
}

}  // namespace expmath
