#include "expmath/exact/poly_nullspace.hpp"

#include <algorithm>
#include <random>

#include "expmath/errors.hpp"

namespace expmath {

namespace {

// Integer coefficient rows: each row scaled by the lcm of all coefficient denominators.
std::vector<std::vector<std::vector<Integer>>> integerize(const Matrix<UniPoly>& m) {
    std::vector<std::vector<std::vector<Integer>>> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        Integer l = 1;
        for (const auto& p : m[i])
            for (const auto& c : p.coeffs()) l = lcm(l, c.get_den());
        out[i].resize(m[i].size());
        for (std::size_t j = 0; j < m[i].size(); ++j)
            for (const auto& c : m[i][j].coeffs()) out[i][j].push_back(Rational(c * l).get_num());
    }
    return out;
}

Integer eval_int(const std::vector<Integer>& c, const Integer& x) {
    Integer r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

Matrix<Integer> eval_matrix(const std::vector<std::vector<std::vector<Integer>>>& m, const Integer& x,
                            const std::vector<int>& rows, const std::vector<int>& cols) {
    Matrix<Integer> r(rows.size(), std::vector<Integer>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) r[i][j] = eval_int(m[rows[i]][cols[j]], x);
    return r;
}

std::vector<int> iota_vec(std::size_t n) {
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i);
    return v;
}

}  // namespace

UniPoly interpolate(const std::vector<Integer>& xs, const std::vector<Rational>& ys, const std::string& var) {
    std::size_t n = xs.size();
    std::vector<Rational> dd(ys.begin(), ys.end());
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = n - 1; i >= k; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - k]);
            if (i == k) break;
        }
    // Horner on the Newton form
    std::vector<Rational> poly;
    for (std::size_t k = n; k-- > 0;) {
        // poly = poly * (x - xs[k]) + dd[k]
        std::vector<Rational> next(poly.size() + 1);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * xs[k];
        }
        next[0] += dd[k];
        poly = std::move(next);
    }
    return UniPoly(std::move(poly), var);
}

std::size_t polynomial_rank_estimate(const Matrix<UniPoly>& m, std::uint64_t seed) {
    if (m.empty() || m[0].empty()) return 0;
    auto im = integerize(m);
    std::mt19937_64 rng(seed);
    Integer x = static_cast<unsigned long>(rng() % 1000000007ULL) + 1000;
    auto a = eval_matrix(im, x, iota_vec(m.size()), iota_vec(m[0].size()));
    return fraction_free_reduce(a, m[0].size()).pivot_cols.size();
}

std::vector<std::vector<UniPoly>> polynomial_nullspace(const Matrix<UniPoly>& m, const std::string& var,
                                                       const Deadline* dl, std::uint64_t seed) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    for (const auto& r : m)
        if (r.size() != cols) throw InvalidInput("ragged matrix");
    auto im = integerize(m);
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 4; ++attempt) {
        check_deadline(dl, "nullspace");
        // rank profile at a random point
        Integer x0 = static_cast<unsigned long>(rng() % 1000000007ULL) + 1000;
        auto a0 = eval_matrix(im, x0, iota_vec(rows), iota_vec(cols));
        auto red0 = fraction_free_reduce(a0, cols, dl);
        std::vector<int> prow = red0.pivot_rows, pcol = red0.pivot_cols;
        std::size_t r = pcol.size();
        std::vector<int> free;
        {
            std::vector<bool> isp(cols, false);
            for (int c : pcol) isp[c] = true;
            for (std::size_t c = 0; c < cols; ++c)
                if (!isp[c]) free.push_back(static_cast<int>(c));
        }
        std::vector<std::vector<UniPoly>> basis;
        if (free.empty()) return basis;
        if (r == 0) {
            for (int f : free) {
                std::vector<UniPoly> v(cols, UniPoly(Rational(0), var));
                v[f] = UniPoly(Rational(1), var);
                basis.push_back(v);
            }
            return basis;
        }
        std::sort(prow.begin(), prow.end());
        // degree bound for every Cramer determinant
        long bound = 0;
        for (int i : prow) {
            int md = 0;
            for (std::size_t c = 0; c < cols; ++c) md = std::max(md, static_cast<int>(im[i][c].size()) - 1);
            bound += md;
        }
        std::vector<int> all_cols = pcol;
        all_cols.insert(all_cols.end(), free.begin(), free.end());
        std::vector<Integer> xs;
        // values[f][component]
        std::vector<std::vector<std::vector<Rational>>> vals(free.size(), std::vector<std::vector<Rational>>(r + 1));
        long t = 0;
        long skipped = 0;
        while (static_cast<long>(xs.size()) < bound + 1) {
            check_deadline(dl, "nullspace");
            Integer xt = t++;
            auto b = eval_matrix(im, xt, prow, all_cols);
            auto red = fraction_free_reduce(b, r, dl);
            if (red.pivot_cols.size() < r) {
                if (++skipped > bound + 64) break;
                continue;
            }
            Integer s = (red.swaps % 2) ? -1 : 1;
            xs.push_back(xt);
            for (std::size_t fi = 0; fi < free.size(); ++fi) {
                for (std::size_t i = 0; i < r; ++i) vals[fi][i].push_back(Rational(-s * red.m[i][r + fi]));
                vals[fi][r].push_back(Rational(s * red.det));
            }
        }
        if (static_cast<long>(xs.size()) < bound + 1) continue;
        bool ok = true;
        for (std::size_t fi = 0; fi < free.size() && ok; ++fi) {
            std::vector<UniPoly> v(cols, UniPoly(Rational(0), var));
            for (std::size_t i = 0; i < r; ++i) v[pcol[i]] = interpolate(xs, vals[fi][i], var);
            v[free[fi]] = interpolate(xs, vals[fi][r], var);
            UniPoly g(Rational(0), var);
            for (const auto& p : v) g = gcd(g, p);
            if (g.is_zero()) {
                ok = false;
                break;
            }
            for (auto& p : v) p = p / g;
            // integer, content-free, first nonzero positive
            Integer num = 0, den = 1;
            Rational first = 0;
            for (const auto& p : v) {
                if (p.is_zero()) continue;
                Rational c = p.content();
                if (first == 0) first = c;
                num = gcd(num, c.get_num());
                den = lcm(den, c.get_den());
            }
            Rational sc = make_rational(den, num);
            if (first < 0) sc = -sc;
            for (auto& p : v) p *= sc;
            // exact check against the original matrix
            for (std::size_t i = 0; i < rows && ok; ++i) {
                check_deadline(dl, "nullspace");
                UniPoly acc(Rational(0), var);
                for (std::size_t c = 0; c < cols; ++c)
                    if (!m[i][c].is_zero() && !v[c].is_zero()) acc += m[i][c].with_var(var) * v[c];
                if (!acc.is_zero()) ok = false;
            }
            if (ok) basis.push_back(std::move(v));
        }
        if (ok) return basis;
    }
    throw InternalError("polynomial nullspace could not be certified");
}

}  // namespace expmath
