#include "expmath/gw/gw_trees.hpp"

#include <algorithm>
#include <cmath>

namespace expmath {

void DegreeSet::validate() const {
    if (S.empty()) throw InvalidInput("degree set must be nonempty");
    if (*S.begin() < 1) throw InvalidInput("degree set elements must be positive");
}

namespace {

using ZPoly = std::vector<Integer>;  // truncated at z^k

// acc += a * b mod z^{k+1}
void mul_add(ZPoly& acc, const ZPoly& a, const ZPoly& b) {
    const std::size_t K = acc.size();
    for (std::size_t i = 0; i < K; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < K; ++j) acc[i + j] += a[i] * b[j];
    }
}

// Stirling numbers of the second kind S(i, r), 0 <= r <= i <= k
std::vector<std::vector<Integer>> stirling2(int k) {
    std::vector<std::vector<Integer>> s(k + 1, std::vector<Integer>(k + 1));
    s[0][0] = 1;
    for (int i = 1; i <= k; ++i)
        for (int r = 1; r <= i; ++r) s[i][r] = s[i - 1][r - 1] + r * s[i - 1][r];
    return s;
}

}  // namespace

SequenceSample tree_counts(const DegreeSet& S, long N) {
    HeightSeries hs = height_series(S, N, 0);
    SequenceSample out{0, {}};
    for (long n = 0; n <= N; ++n) out.values.emplace_back(hs.count(n));
    return out;
}

// G(x,z) = x P(G(x+xz, z)). With g_n = [x^n] G, the dilated series has coefficients
// h_n = (1+z)^n g_n, and g_{n+1} = [x^n] P(H) needs only h_0..h_n since h_0 = 0.
HeightSeries height_series(const DegreeSet& S, long N, int k) {
    S.validate();
    if (N < 0 || k < 0) throw InvalidInput("height_series needs N >= 0 and k >= 0");
    const std::size_t K = k + 1;
    const long top = S.max();

    HeightSeries hs;
    hs.N = N;
    hs.k = k;
    hs.coeffs.assign(N + 1, ZPoly(K));
    // pow[j][m] = [x^m] H^j for j = 1..top
    std::vector<std::vector<ZPoly>> pow(top + 1, std::vector<ZPoly>(N + 1, ZPoly(K)));
    std::vector<bool> nonzero(N + 1, false);

    for (long n = 0; n < N; ++n) {
        // h_n from g_n
        ZPoly& h = pow[1][n];
        const ZPoly& g = hs.coeffs[n];
        nonzero[n] = g[0] != 0;
        if (nonzero[n]) {
            // multiply by (1+z)^n using binomial(n, j)
            Integer bin = 1;
            for (std::size_t j = 0; j < K; ++j) {
                for (std::size_t i = 0; i + j < K; ++i) h[i + j] += bin * g[i];
                bin = bin * (n - static_cast<long>(j)) / static_cast<long>(j + 1);
            }
        }
        for (long j = 2; j <= top; ++j) {
            ZPoly& out = pow[j][n];
            for (long m = 1; m <= n; ++m) {
                if (!nonzero[m]) continue;
                const ZPoly& prev = pow[j - 1][n - m];
                if (prev[0] == 0 && std::all_of(prev.begin(), prev.end(), [](const Integer& v) { return v == 0; }))
                    continue;
                mul_add(out, pow[1][m], prev);
            }
        }
        ZPoly& next = hs.coeffs[n + 1];
        if (n == 0) next[0] += 1;
        for (long i : S.S) {
            const ZPoly& p = pow[i][n];
            for (std::size_t r = 0; r < K; ++r) next[r] += p[r];
        }
    }
    return hs;
}

Integer HeightSeries::factorial_numerator(long n, int r) const { return coeffs.at(n).at(r) * factorial(r); }

std::vector<Integer> HeightSeries::height_polynomial(long n) const {
    // P_n(y) = sum_r c_r (y - 1)^r
    std::vector<Integer> p(k + 1);
    for (int r = 0; r <= k; ++r) {
        const Integer& c = coeffs.at(n).at(r);
        if (c == 0) continue;
        for (int j = 0; j <= r; ++j) {
            Integer term = c * binomial(r, j);
            if ((r - j) % 2) p[j] -= term;
            else p[j] += term;
        }
    }
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    return p;
}

MomentRow moments(const HeightSeries& hs, long n) {
    if (n < 0 || n > hs.N) throw InvalidInput("n outside the computed range");
    const Integer& N0 = hs.count(n);
    if (N0 == 0) throw ZeroPopulation(n);
    const int k = hs.k;
    auto st = stirling2(k);

    MomentRow row;
    row.n = n;
    std::vector<Integer> Ni(k + 1);
    for (int i = 0; i <= k; ++i)
        for (int r = 0; r <= i; ++r) Ni[i] += st[i][r] * hs.factorial_numerator(n, r);
    for (int i = 0; i <= k; ++i) row.straight.push_back(make_rational(Ni[i], N0));
    row.mean = k >= 1 ? row.straight[1] : Rational(0);
    for (int i = 0; i <= k; ++i) {
        Rational m = 0, mu_r = 1;
        for (int r = 0; r <= i; ++r) {
            Rational term = Rational(binomial(i, r)) * mu_r * row.straight[i - r];
            if (r % 2) m -= term;
            else m += term;
            mu_r *= row.mean;
        }
        row.central.push_back(m);
    }
    if (k >= 2 && row.central[2] > 0) {
        const Rational& m2 = row.central[2];
        double sq = std::sqrt(to_double(m2));
        for (int i = 0; i <= k; ++i) {
            Rational scaled = row.central[i] / rpow(m2, i / 2);
            double v = to_double(scaled);
            if (i % 2) v /= sq;
            row.alpha.push_back(v);
        }
    }
    return row;
}

nlohmann::json MomentRow::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["mean"] = to_string(mean);
    if (central.size() > 2) j["m2"] = to_string(central[2]);
    j["alpha"] = alpha;
    return j;
}

nlohmann::json AlphaLimit::to_json() const {
    return {{"value", value}, {"error", error}, {"grid", grid}, {"samples", samples}};
}

std::vector<long> default_grid(const HeightSeries& hs, int levels) {
    std::vector<long> grid;
    long target = hs.N;
    for (int l = 0; l < levels && target >= 1; ++l, target /= 2) {
        long n = target;
        while (n >= 1 && hs.count(n) == 0) --n;
        if (n < 1 || (!grid.empty() && n >= grid.front())) break;
        grid.insert(grid.begin(), n);
    }
    return grid;
}

AlphaLimit alpha_limit_estimate(const HeightSeries& hs, int i, const std::vector<long>& grid) {
    if (grid.empty()) throw InvalidInput("empty extrapolation grid");
    if (i > hs.k) throw InvalidInput("alpha index exceeds the computed moment order");
    for (std::size_t t = 1; t < grid.size(); ++t)
        if (grid[t] <= grid[t - 1]) throw InvalidInput("extrapolation grid must be increasing");

    AlphaLimit out;
    out.grid = grid;
    std::vector<double> h;
    for (long n : grid) {
        MomentRow row = moments(hs, n);
        if (row.alpha.empty()) throw InvalidInput("alpha undefined at n = " + std::to_string(n));
        out.samples.push_back(row.alpha[i]);
        h.push_back(1.0 / std::sqrt(static_cast<double>(n)));
    }
    // Neville table evaluated at h = 0; diag[l] uses the last l+1 samples
    const std::size_t m = grid.size();
    std::vector<double> T = out.samples;
    std::vector<double> diag{T[m - 1]};
    for (std::size_t l = 1; l < m; ++l) {
        for (std::size_t t = m - 1; t >= l; --t)
            T[t] = (h[t - l] * T[t] - h[t] * T[t - 1]) / (h[t - l] - h[t]);
        diag.push_back(T[m - 1]);
    }
    out.value = diag.back();
    out.error = diag.size() > 1 ? std::fabs(diag.back() - diag[diag.size() - 2]) : std::fabs(out.value);
    return out;
}

double universal_alpha(int i) {
    static const double table[] = {0, 0, 1, 0.7005665293596503, 3.560394897132889, 7.2563753582799571,
                                   27.685525695770609, 90.0171829093603301, 358.80904151261251,
                                   1460.7011342971821};
    if (i < 2 || i > 9) throw InvalidInput("universal alpha known for 2 <= i <= 9");
    return table[i];
}

}  // namespace expmath
