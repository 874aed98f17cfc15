#include <cmath>
#include <numeric>

#include "expmath/paths/lattice_paths.hpp"

namespace expmath {

nlohmann::json FitResult::to_json() const {
    return {{"alpha", alpha},         {"beta", beta},   {"gamma", gamma},
            {"delta", delta},         {"stability", stability},
            {"alpha_half", alpha_half}, {"alpha_reduced", alpha_reduced()}, {"terms", terms}};
}

namespace {

// Least squares by modified Gram-Schmidt; rows x cols design matrix, column-major.
std::vector<double> least_squares(std::vector<std::vector<double>> cols, std::vector<double> y) {
    const std::size_t k = cols.size(), m = y.size();
    std::vector<std::vector<double>> R(k, std::vector<double>(k, 0.0));
    for (std::size_t j = 0; j < k; ++j) {
        double orig = std::sqrt(std::inner_product(cols[j].begin(), cols[j].end(), cols[j].begin(), 0.0));
        for (std::size_t i = 0; i < j; ++i) {
            double r = std::inner_product(cols[i].begin(), cols[i].end(), cols[j].begin(), 0.0);
            R[i][j] = r;
            for (std::size_t t = 0; t < m; ++t) cols[j][t] -= r * cols[i][t];
        }
        double norm = std::sqrt(std::inner_product(cols[j].begin(), cols[j].end(), cols[j].begin(), 0.0));
        if (!(norm > 1e-12 * orig)) throw IllConditioned("least-squares design matrix is numerically singular");
        R[j][j] = norm;
        for (auto& v : cols[j]) v /= norm;
    }
    std::vector<double> qty(k);
    for (std::size_t j = 0; j < k; ++j) {
        qty[j] = std::inner_product(cols[j].begin(), cols[j].end(), y.begin(), 0.0);
        for (std::size_t t = 0; t < m; ++t) y[t] -= qty[j] * cols[j][t];
    }
    std::vector<double> x(k);
    for (std::size_t j = k; j-- > 0;) {
        double s = qty[j];
        for (std::size_t i = j + 1; i < k; ++i) s -= R[j][i] * x[i];
        x[j] = s / R[j][j];
    }
    return x;
}

std::vector<double> fit_four(const std::vector<long>& ns, const std::vector<double>& r) {
    std::vector<std::vector<double>> cols(4, std::vector<double>(ns.size()));
    for (std::size_t t = 0; t < ns.size(); ++t) {
        double inv = 1.0 / static_cast<double>(ns[t]);
        double p = inv;
        for (int j = 0; j < 4; ++j, p *= inv) cols[j][t] = p;
    }
    return least_squares(std::move(cols), r);
}

}  // namespace

FitResult fit_alpha(const SequenceSample& series, long a, long b) {
    if (series.size() < 50) throw InsufficientData("fit_alpha needs at least 50 terms");
    std::vector<long> ns;
    std::vector<double> r;
    for (long n = std::max(series.offset, 1L); n < series.end(); ++n) {
        ns.push_back(n);
        r.push_back(to_double(Rational(series.at(n) / Rational(binomial((a + b) * n, a * n)))));
    }
    FitResult out;
    auto full = fit_four(ns, r);
    out.alpha = full[0];
    out.beta = full[1];
    out.gamma = full[2];
    out.delta = full[3];
    std::size_t half = ns.size() / 2;
    auto part = fit_four({ns.begin(), ns.begin() + half}, {r.begin(), r.begin() + half});
    out.alpha_half = part[0];
    out.stability = std::fabs(out.alpha_half - out.alpha) / std::fabs(out.alpha);
    out.gcd = std::gcd(a, b);
    out.terms = static_cast<long>(ns.size());
    return out;
}

double fit_exponent_3d(const SequenceSample& series, long a, long b, long c) {
    if (series.size() < 20) throw InsufficientData("fit_exponent_3d needs at least 20 terms");
    std::vector<double> xs, ys;
    long first = std::max(series.offset, 1L);
    long from = first + (series.end() - first) / 2;
    for (long n = from; n < series.end(); ++n) {
        Rational q(series.at(n) / Rational(total_3d(a, b, c, n)));
        if (q <= 0) continue;
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(log10_abs(q) * std::log(10.0));
    }
    if (xs.size() < 2) throw InsufficientData("fit_exponent_3d needs nonzero counts");
    double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
    double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return -sxy / sxx;
}

}  // namespace expmath
