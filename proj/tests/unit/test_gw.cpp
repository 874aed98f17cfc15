#include <cmath>
#include <map>

#include "doctest.h"
#include "expmath/exact/series.hpp"
#include "expmath/gw/gw_trees.hpp"
#include "support.hpp"

using namespace expmath;

namespace {

struct Tree {
    std::vector<Tree> kids;
};

long size(const Tree& t) {
    long s = 1;
    for (auto& c : t.kids) s += size(c);
    return s;
}

long total_height(const Tree& t, long depth = 0) {
    long h = depth;
    for (auto& c : t.kids) h += total_height(c, depth + 1);
    return h;
}

// H(t) = H(t_1) + ... + H(t_i) + n - 1
long height_by_decomposition(const Tree& t) {
    if (t.kids.empty()) return 0;
    long h = size(t) - 1;
    for (auto& c : t.kids) h += height_by_decomposition(c);
    return h;
}

// All ordered trees on n vertices whose internal vertices have a child count in S.
std::vector<Tree> all_trees(const std::set<long>& S, long n, std::map<long, std::vector<Tree>>& memo) {
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    std::vector<Tree> out;
    if (n == 1) out.push_back(Tree{});
    for (long i : S) {
        // ordered forests of i trees on n-1 vertices
        std::vector<std::vector<Tree>> forests{{}};
        for (long slot = 0; slot < i; ++slot) {
            std::vector<std::vector<Tree>> grown;
            for (auto& f : forests) {
                long used = 0;
                for (auto& t : f) used += size(t);
                long left = n - 1 - used, slots_after = i - slot - 1;
                for (long s = 1; s <= left - slots_after; ++s) {
                    if (slots_after == 0 && s != left) continue;
                    for (auto& t : all_trees(S, s, memo)) {
                        auto g = f;
                        g.push_back(t);
                        grown.push_back(std::move(g));
                    }
                }
            }
            forests = std::move(grown);
        }
        for (auto& f : forests) out.push_back(Tree{f});
    }
    memo[n] = out;
    return out;
}

std::vector<Integer> brute_polynomial(const std::vector<Tree>& trees) {
    std::vector<Integer> p(1);
    for (auto& t : trees) {
        long h = total_height(t);
        if (static_cast<long>(p.size()) <= h) p.resize(h + 1);
        p[h] += 1;
    }
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    return p;
}

}  // namespace

TEST_CASE("tree counts") {
    auto bin = tree_counts({{2}}, 41);
    for (long m = 0; m <= 20; ++m) {
        CHECK(bin.at(2 * m + 1) == binomial(2 * m, m) / (m + 1));
        if (m > 0) CHECK(bin.at(2 * m) == 0);
    }
    auto paths = tree_counts({{1}}, 30);
    CHECK(paths.at(0) == 0);
    for (long n = 1; n <= 30; ++n) CHECK(paths.at(n) == 1);

    std::map<long, std::vector<Tree>> memo;
    auto motz = tree_counts({{1, 2}}, 10);
    std::vector<long> motzkin = {1, 1, 2, 4, 9, 21, 51, 127, 323, 835};
    for (long n = 1; n <= 10; ++n) {
        CHECK(motz.at(n) == motzkin[n - 1]);
        CHECK(motz.at(n) == static_cast<long>(all_trees({1, 2}, n, memo).size()));
    }
}

TEST_CASE("height series matches exhaustive enumeration for every S in {1,2,3}") {
    for (int mask = 1; mask < 8; ++mask) {
        std::set<long> S;
        for (long i = 1; i <= 3; ++i)
            if (mask >> (i - 1) & 1) S.insert(i);
        // k = 45 covers the path tree on 10 vertices
        auto hs = height_series({S}, 10, 45);
        auto counts = tree_counts({S}, 10);
        std::map<long, std::vector<Tree>> memo;
        for (long n = 1; n <= 10; ++n) {
            auto trees = all_trees(S, n, memo);
            CHECK(hs.count(n) == counts.at(n));
            if (trees.empty()) {
                CHECK(hs.count(n) == 0);
                continue;
            }
            CHECK(hs.height_polynomial(n) == brute_polynomial(trees));
        }
    }
}

TEST_CASE("complete binary trees") {
    auto hs = height_series({{2}}, 9, 4);
    CHECK(hs.height_polynomial(3) == std::vector<Integer>{0, 0, 1});
    std::vector<Integer> F;
    for (int r = 0; r <= 4; ++r) F.push_back(hs.factorial_numerator(3, r));
    CHECK(F == std::vector<Integer>{1, 2, 2, 0, 0});

    std::map<long, std::vector<Tree>> memo;
    for (long n = 1; n <= 9; n += 2) {
        Integer direct = 0, split = 0;
        for (auto& t : all_trees({2}, n, memo)) {
            direct += total_height(t);
            split += height_by_decomposition(t);
        }
        CHECK(split == direct);
        CHECK(hs.factorial_numerator(n, 1) == direct);
    }

    auto five = moments(hs, 5);
    CHECK(five.mean == 6);
    CHECK(five.central[2] == 0);
    CHECK(five.alpha.empty());
    auto three = moments(hs, 3);
    for (std::size_t i = 2; i < three.central.size(); ++i) CHECK(three.central[i] == 0);
    CHECK_THROWS_AS(moments(hs, 4), ZeroPopulation);
}

TEST_CASE("functional equation holds through the dilation") {
    const int k = 4;
    const long N = 16;
    auto hs = height_series({{1, 3}}, N, k);
    TruncatedSeries<UniPoly> G(N, UniPoly(Rational(0), "z"));
    for (long n = 0; n <= N; ++n) {
        std::vector<Rational> c(hs.coeffs[n].begin(), hs.coeffs[n].end());
        G[n] = UniPoly(c, "z");
    }
    auto H = series_substitute_dilate(G, k);
    auto H3 = H * H * H;
    for (long n = 0; n < N; ++n) {
        UniPoly rhs = truncate_poly(H[n] + H3[n], k);
        if (n == 0) rhs += UniPoly(Rational(1), "z");
        CHECK(rhs == G[n + 1]);
    }
}

TEST_CASE("moment identities against enumeration") {
    std::map<long, std::vector<Tree>> memo;
    auto hs = height_series({{1, 2, 3}}, 9, 4);
    for (long n = 2; n <= 9; ++n) {
        auto trees = all_trees({1, 2, 3}, n, memo);
        std::vector<Integer> N(5);
        for (auto& t : trees) {
            Integer h = total_height(t), p = 1;
            for (int i = 0; i <= 4; ++i, p *= h) N[i] += p;
        }
        auto row = moments(hs, n);
        Integer N0 = static_cast<long>(trees.size());
        for (int i = 0; i <= 4; ++i) CHECK(row.straight[i] == make_rational(N[i], N0));
        CHECK(row.straight[1] == make_rational(hs.factorial_numerator(n, 1), N0));
        CHECK(row.straight[2] == make_rational(hs.factorial_numerator(n, 2) + hs.factorial_numerator(n, 1), N0));
    }
}

TEST_CASE("property: variance and Pearson inequality") {
    testing_support::Gen g(61);
    for (int t = 0; t < 4; ++t) {
        std::set<long> S;
        while (S.empty())
            for (long i = 1; i <= 4; ++i)
                if (g.coin()) S.insert(i);
        auto hs = height_series({S}, 80, 4);
        for (long n = 1; n <= 80; ++n) {
            if (hs.count(n) == 0) continue;
            auto row = moments(hs, n);
            CHECK(row.central[2] >= 0);
            if (row.alpha.empty()) continue;
            CHECK(row.alpha[2] == doctest::Approx(1.0));
            CHECK(row.alpha[4] >= 1 + row.alpha[3] * row.alpha[3] - 1e-9);
        }
    }
}

TEST_CASE("scaled moments approach the universal limits") {
    for (auto S : std::vector<std::set<long>>{{2}, {1, 2}, {3}}) {
        auto hs = height_series({S}, 400, 5);
        auto grid = default_grid(hs);
        CHECK(grid.size() == 5);
        auto a2 = alpha_limit_estimate(hs, 2, grid);
        CHECK(a2.value == doctest::Approx(1.0));
        for (int i = 3; i <= 5; ++i) {
            auto a = alpha_limit_estimate(hs, i, grid);
            CHECK(std::fabs(a.value / universal_alpha(i) - 1) < 0.01);
            CHECK(a.error < 0.05 * universal_alpha(i));
        }
    }
    auto hs = height_series({{2}}, 50, 3);
    CHECK_THROWS_AS(alpha_limit_estimate(hs, 3, {10, 21}), ZeroPopulation);
    CHECK_THROWS_AS(alpha_limit_estimate(hs, 3, {21, 11}), InvalidInput);
}
