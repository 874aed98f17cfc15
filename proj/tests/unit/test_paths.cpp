#include <algorithm>
#include <cmath>
#include <functional>

#include "doctest.h"
#include "expmath/paths/lattice_paths.hpp"
#include "support.hpp"

using namespace expmath;
using testing_support::Gen;

namespace {

// Every word over {E, N} with b n E's and a n N's, checked point by point with rational slopes.
Integer brute_2d(long a, long b, long n) {
    long steps = (a + b) * n;
    Integer count = 0;
    for (long mask = 0; mask < (1L << steps); ++mask) {
        if (__builtin_popcountl(mask) != a * n) continue;
        Rational x = 0, y = 0;
        bool ok = true;
        for (long s = 0; s < steps && ok; ++s) {
            if (mask >> s & 1) y += 1;
            else x += 1;
            ok = y <= Rational(a, b) * x;
        }
        if (ok) ++count;
    }
    return count;
}

// Above-time by midpoint, using rational coordinates.
std::vector<Integer> brute_histogram(long a, long b, long n) {
    long steps = (a + b) * n;
    std::vector<Integer> h(steps + 1);
    Rational half(1, 2), slope(a, b);
    for (long mask = 0; mask < (1L << steps); ++mask) {
        if (__builtin_popcountl(mask) != a * n) continue;
        Rational x = 0, y = 0;
        long above = 0;
        for (long s = 0; s < steps; ++s) {
            bool up = mask >> s & 1;
            Rational mx = up ? x : Rational(x + half), my = up ? Rational(y + half) : y;
            if (my > slope * mx) ++above;
            (up ? y : x) += 1;
        }
        ++h[above];
    }
    return h;
}

// Depth-first word enumeration with the prefix constraint.
Integer brute_3d(long a, long b, long c, long n) {
    long X = b * c * n, Y = a * c * n, Z = a * b * n;
    Integer count = 0;
    std::function<void(long, long, long)> go = [&](long x, long y, long z) {
        if (!(a * x <= b * y && b * y <= c * z)) return;
        if (x == X && y == Y && z == Z) {
            ++count;
            return;
        }
        if (x < X) go(x + 1, y, z);
        if (y < Y) go(x, y + 1, z);
        if (z < Z) go(x, y, z + 1);
    };
    go(0, 0, 0);
    return count;
}

Integer fuss_catalan(long a, long n) { return binomial((1 + a) * n, a * n) / (1 + a * n); }

}  // namespace

TEST_CASE("2D counts") {
    auto cat = count_2d_series(1, 1, 8);
    std::vector<long> want = {1, 2, 5, 14, 42, 132, 429, 1430};
    for (long n = 1; n <= 8; ++n) CHECK(cat.at(n) == want[n - 1]);
    CHECK(count_2d({3, 2, 3}) == brute_2d(3, 2, 3));
    CHECK(count_2d({3, 2, 3}) == count_2d_series(3, 2, 3).at(3));
    for (long a = 1; a <= 6; ++a) {
        auto s = count_2d_series(a, 1, 40);
        for (long n = 1; n <= 40; ++n) CHECK(s.at(n) == fuss_catalan(a, n));
    }
}

TEST_CASE("2D symmetry") {
    for (long a = 1; a <= 5; ++a)
        for (long b = 1; b <= 5; ++b) {
            auto s = count_2d_series(a, b, 12), t = count_2d_series(b, a, 12);
            CHECK(s.values == t.values);
        }
}

TEST_CASE("property: DP equals brute force for small problems") {
    Gen g(51);
    int done = 0;
    while (done < 25) {
        long a = g.range(1, 8), b = g.range(1, 8), n = g.range(1, 4);
        if ((a + b) * n > 16) continue;
        CHECK(count_2d({a, b, n}) == brute_2d(a, b, n));
        ++done;
    }
}

TEST_CASE("3D counts") {
    CHECK(count_3d({1, 1, 1, 1}) == 1);
    CHECK(count_3d({2, 1, 3, 1}) == brute_3d(2, 1, 3, 1));
    CHECK(count_3d({2, 1, 3, 1}) == 54);
    auto s = count_3d_series(1, 1, 1, 15);
    for (long n = 1; n <= 15; ++n) {
        Integer closed = 2 * multinomial({n, n, n}) / ((n + 1) * (n + 1) * (n + 2));
        CHECK(s.at(n) == closed);
    }
    for (auto [a, b, c] : std::vector<std::array<long, 3>>{{1, 2, 1}, {2, 1, 1}, {1, 1, 2}, {2, 3, 1}})
        CHECK(count_3d({a, b, c, 1}) == brute_3d(a, b, c, 1));
    CHECK(count_3d({1, 1, 2, 2}) == brute_3d(1, 1, 2, 2));
}

TEST_CASE("time above the line") {
    CHECK(time_above_histogram(1, 1, 1) == std::vector<Integer>{1, 0, 1});
    for (long n = 1; n <= 6; ++n) {
        auto h = time_above_histogram(1, 1, n);
        CHECK(h == brute_histogram(1, 1, n));
        for (std::size_t k = 1; k < h.size(); k += 2) CHECK(h[k] == 0);
    }
    CHECK(time_above_histogram(3, 2, 2) == brute_histogram(3, 2, 2));
    CHECK(time_above_histogram(2, 3, 2) == brute_histogram(2, 3, 2));

    // slope 3/2: the multiples of 5 form a U, the other classes are lopsided
    auto h = time_above_histogram(3, 2, 12);
    long L = 5 * 12;
    CHECK(h[0] > h[L / 2]);
    CHECK(h[L] > h[L / 2]);
    double ends = to_double(Rational(h[0])), far = to_double(Rational(h[L]));
    CHECK(std::fabs(ends - far) / ends < 0.5);
    // below/above mass ratio per residue class; class 4 leans furthest below, class 0 is balanced
    std::vector<double> lean(5);
    for (long r = 0; r < 5; ++r) {
        double lo = 0, hi = 0;
        for (long k = r; k <= L; k += 5) (k < L / 2 ? lo : hi) += to_double(Rational(h[k]));
        lean[r] = lo / hi;
    }
    CHECK(std::max_element(lean.begin(), lean.end()) - lean.begin() == 4);
    CHECK(std::fabs(lean[0] - 1) < 0.02);
    CHECK(lean[4] > 1.1);
}

TEST_CASE("property: histogram total is the binomial") {
    Gen g(52);
    for (int t = 0; t < 12; ++t) {
        long a = g.range(1, 5), b = g.range(1, 5), n = g.range(1, 4);
        auto h = time_above_histogram(a, b, n);
        Integer total = 0;
        for (auto& v : h) total += v;
        CHECK(total == binomial((a + b) * n, a * n));
    }
}

TEST_CASE("fitting alpha") {
    auto two = fit_alpha(count_2d_series(2, 1, 200), 2, 1);
    CHECK(two.alpha == doctest::Approx(0.5).epsilon(1e-3));
    auto f = fit_alpha(count_2d_series(3, 2, 300), 3, 2);
    CHECK(std::fabs(f.alpha - 0.240706636) < 1e-4);
    CHECK(f.stability < 1e-4);
    auto g5 = fit_alpha(count_2d_series(5, 2, 300), 5, 2);
    CHECK(std::fabs(g5.alpha - 0.1613399969) < 1e-4);
    auto r = fit_alpha(count_2d_series(4, 2, 150), 4, 2);
    CHECK(r.gcd == 2);
    CHECK(r.alpha_reduced() == doctest::Approx(0.5).epsilon(1e-3));
    CHECK_THROWS_AS(fit_alpha(count_2d_series(3, 2, 20), 3, 2), InsufficientData);
}

TEST_CASE("slope 3/2 satisfies an order-4 recurrence") {
    auto s = count_2d_series(3, 2, 300);
    auto op = guess_recurrence(s.slice(1, 101), 6, 12);
    CHECK(op.order() == 4);
    CHECK(verify(op, s).pass);
}

TEST_CASE("3D exponents") {
    CHECK(std::fabs(fit_exponent_3d(count_3d_series(1, 1, 1, 80), 1, 1, 1) - 3.0) < 0.2);
    CHECK(std::fabs(fit_exponent_3d(count_3d_series(1, 1, 4, 30), 1, 1, 4) - 2.5) < 0.2);
    CHECK(std::fabs(fit_exponent_3d(count_3d_series(2, 1, 1, 40), 2, 1, 1) - 2.7) < 0.2);
}
