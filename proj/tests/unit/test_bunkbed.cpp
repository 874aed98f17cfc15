#include <algorithm>
#include <numeric>
#include <sstream>

#include "doctest.h"
#include "expmath/bunkbed/scan.hpp"
#include "support.hpp"

using namespace expmath;

namespace {

using Edges = std::vector<std::pair<int, int>>;

bool reaches(int nv, const Edges& edges, std::uint64_t kept, int a, int b) {
    std::vector<std::vector<int>> adj(nv);
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (kept >> e & 1) {
            adj[edges[e].first].push_back(edges[e].second);
            adj[edges[e].second].push_back(edges[e].first);
        }
    std::vector<bool> seen(nv);
    std::vector<int> stack{a};
    seen[a] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[u])
            if (!seen[w]) seen[w] = true, stack.push_back(w);
    }
    return seen[b];
}

// Bunk bed built by hand: copy vertices at n.., rungs at every vertex or all but s, f.
Edges bunkbed_by_hand(const SimpleGraph& g, bool terminal_rungs) {
    Edges out;
    for (auto [u, v] : g.edges) out.push_back({u, v}), out.push_back({u + g.n, v + g.n});
    for (int v = 0; v < g.n; ++v)
        if (terminal_rungs || (v != g.s && v != g.f)) out.push_back({v, v + g.n});
    return out;
}

// P(s~f) - P(s~f') at a rational p, summing configuration weights directly.
Rational difference_at(const SimpleGraph& g, bool terminal_rungs, const Rational& p) {
    Edges e = bunkbed_by_hand(g, terminal_rungs);
    const int m = static_cast<int>(e.size());
    Rational total = 0;
    for (std::uint64_t kept = 0; kept < (std::uint64_t{1} << m); ++kept) {
        int sign = int(reaches(2 * g.n, e, kept, g.s, g.f)) - int(reaches(2 * g.n, e, kept, g.s, g.f + g.n));
        if (sign == 0) continue;
        int k = __builtin_popcountll(kept);
        Rational w = 1;
        for (int i = 0; i < m; ++i) w *= i < k ? p : Rational(1 - p);
        total += sign * w;
    }
    return total;
}

std::vector<std::vector<int>> pairs_outside(const SimpleGraph& g) {
    std::vector<std::vector<int>> out;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            if (a != g.s && a != g.f && b != g.s && b != g.f) out.push_back({a, b});
    return out;
}

bool path_avoiding(const SimpleGraph& g, const std::vector<int>& X) {
    Edges kept;
    for (auto [u, v] : g.edges)
        if (std::find(X.begin(), X.end(), u) == X.end() && std::find(X.begin(), X.end(), v) == X.end())
            kept.push_back({u, v});
    return reaches(g.n, kept, ~std::uint64_t{0}, g.s, g.f);
}

int automorphisms(const SimpleGraph& g) {
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    int count = 0;
    do {
        bool ok = true;
        for (auto [u, v] : g.edges) ok = ok && g.has_edge(perm[u], perm[v]);
        count += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

SimpleGraph random_graph(testing_support::Gen& gen, int n) {
    Edges e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (gen.coin()) e.push_back({u, v});
    int s = static_cast<int>(gen.range(0, n - 1)), f;
    do f = static_cast<int>(gen.range(0, n - 1));
    while (f == s);
    return SimpleGraph(n, e, s, f);
}

}  // namespace

TEST_CASE("connectivity profiles") {
    SimpleGraph k2(2, {{0, 1}});
    auto prof = connectivity_profile(k2, {0, 1});
    CHECK(prof.polynomial({0, 0}) == p_poly({0, 1}));
    CHECK(prof.polynomial({0, 1}) == p_poly({1, -1}));

    SimpleGraph tri(3, {{0, 1}, {0, 2}, {1, 2}});
    auto t = connectivity_profile(tri, {0, 1, 2});
    CHECK(t.polynomial({0, 0, 0}) == p_poly({0, 0, 3, -2}));
    CHECK(t.polynomial({0, 1, 2}) == p_poly({1, -3, 3, -1}));
    CHECK(t.total() == p_poly({1}));

    CHECK_THROWS_AS(connectivity_profile(tri, {0, 1, 5}), InvalidInput);
}

TEST_CASE("property: profile totals are one") {
    testing_support::Gen gen(41);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = random_graph(gen, static_cast<int>(gen.range(2, 6)));
        std::vector<int> term(g.n);
        std::iota(term.begin(), term.end(), 0);
        CHECK(connectivity_profile(g, term).total() == p_poly({1}));
    }
}

TEST_CASE("K2 difference polynomial") {
    SimpleGraph k2(2, {{0, 1}});
    auto c = connection_polynomials(k2);
    CHECK(c.to_f == p_poly({0, 1, 0, 1, -1}));
    CHECK(c.to_f_prime == p_poly({0, 0, 2, 0, -1}));
    CHECK(c.difference() == p_poly({0, 1, -2, 1}));
    CHECK(difference_polynomial(k2, Rungs::NoTerminals) == p_poly({0, 1}));
    CHECK(bunkbed_edge_count(k2, Rungs::All) == 4);
    CHECK(bunkbed_edge_count(k2, Rungs::NoTerminals) == 2);
}

TEST_CASE("difference polynomials against direct evaluation") {
    std::vector<SimpleGraph> gs{
        SimpleGraph(3, {{0, 1}, {1, 2}}, 0, 2),
        SimpleGraph(3, {{0, 1}, {1, 2}}, 1, 2),
        SimpleGraph(3, {{0, 1}, {0, 2}, {1, 2}}, 0, 1),
        SimpleGraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, 0, 2),
    };
    for (auto& g : gs)
        for (bool all : {true, false}) {
            Rungs r = all ? Rungs::All : Rungs::NoTerminals;
            UniPoly d = difference_polynomial(g, r);
            CHECK(d == difference_polynomial_bruteforce(g, r));
            for (auto p : {make_rational(1, 3), make_rational(1, 2), make_rational(4, 5)})
                CHECK(d.eval(p) == difference_at(g, all, p));
        }
}

TEST_CASE("property: profile method equals enumeration") {
    testing_support::Gen gen(42);
    for (int trial = 0; trial < 12; ++trial) {
        auto g = random_graph(gen, static_cast<int>(gen.range(2, 5)));
        Rungs r = gen.coin() ? Rungs::All : Rungs::NoTerminals;
        if (bunkbed_edge_count(g, r) > 16) continue;
        UniPoly d = difference_polynomial(g, r);
        CHECK(d == difference_polynomial_bruteforce(g, r));
        Rational p = make_rational(gen.range(1, 9), 10);
        CHECK(d.eval(p) == difference_at(g, r == Rungs::All, p));
    }
}

TEST_CASE("basic properties of D") {
    SimpleGraph split(4, {{0, 1}, {2, 3}}, 0, 2);
    CHECK(difference_polynomial(split).is_zero());

    testing_support::Gen gen(43);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = random_graph(gen, static_cast<int>(gen.range(2, 5)));
        UniPoly d = difference_polynomial(g);
        CHECK(d.eval(0) == 0);
        CHECK(d.eval(1) == 0);
        CHECK(d.degree() <= bunkbed_edge_count(g, Rungs::All));
        SimpleGraph swapped(g.n, g.edges, g.f, g.s);
        CHECK(difference_polynomial(swapped) == d);
    }
}

TEST_CASE("conditioning on the rung set") {
    SimpleGraph p3(3, {{0, 1}, {1, 2}}, 0, 2);
    CHECK(conditional_difference(p3, {1}).is_zero());
    CHECK(conditional_difference(p3, {}) == p_poly({0, 0, 1}));
    CHECK_THROWS_AS(conditional_difference(p3, {0}), InvalidInput);
    CHECK_THROWS_AS(conditional_difference(SimpleGraph(4, {{0, 1}, {1, 2}, {2, 3}}, 0, 3), {1, 1}), InvalidInput);

    // two retained rungs: never negative, and strictly positive exactly when s reaches f avoiding X
    for (int n = 4; n <= 5; ++n)
        for (auto& base : connected_graphs(n))
            for (int s = 0; s < n; ++s)
                for (int f = s + 1; f < n; ++f) {
                    SimpleGraph g(n, base.edges, s, f);
                    for (auto& X : pairs_outside(g)) {
                        UniPoly d = conditional_difference(g, X);
                        auto cert = certify_nonnegative(d);
                        CHECK(cert.nonnegative);
                        CHECK(d.is_zero() != path_avoiding(g, X));
                    }
                }
}

TEST_CASE("nonnegativity certificates") {
    auto good = certify_nonnegative(p_poly({0, 1, -2, 1}));
    CHECK(good.nonnegative);
    CHECK(good.p_exponent == 1);
    CHECK(good.one_minus_p_exponent == 2);
    CHECK_FALSE(good.counterexample);

    auto bad = certify_nonnegative(p_poly({make_rational(-1, 2), 1}));
    CHECK_FALSE(bad.nonnegative);
    REQUIRE(bad.counterexample);
    CHECK(*bad.counterexample > 0);
    CHECK(*bad.counterexample < make_rational(1, 2));

    // double root inside (0,1) touches zero without changing sign
    auto touch = certify_nonnegative(p_poly({make_rational(1, 4), -1, 1}));
    CHECK(touch.nonnegative);
    // (p - 1/3)(p - 2/3) dips below zero between its roots
    auto dip = certify_nonnegative(p_poly({make_rational(2, 9), -1, 1}));
    CHECK_FALSE(dip.nonnegative);
    REQUIRE(dip.counterexample);
    CHECK(p_poly({make_rational(2, 9), -1, 1}).eval(*dip.counterexample) < 0);

    CHECK(certify_nonnegative(p_poly({})).identically_zero);
}

TEST_CASE("property: certificate agrees with dense sampling") {
    testing_support::Gen gen(44);
    for (int trial = 0; trial < 40; ++trial) {
        UniPoly q = gen.unipoly(5, "p", 4);
        if (q.is_zero()) continue;
        auto cert = certify_nonnegative(q);
        bool sampled_negative = false;
        for (int i = 0; i <= 400; ++i) sampled_negative = sampled_negative || q.eval(make_rational(i, 400)) < 0;
        if (sampled_negative) CHECK_FALSE(cert.nonnegative);
        if (!cert.nonnegative) CHECK(q.eval(*cert.counterexample) < 0);
    }
}

TEST_CASE("factor structure") {
    SimpleGraph k2(2, {{0, 1}});
    auto fs = factor_structure(difference_polynomial(k2), k2);
    CHECK(fs.p_exponent == 1);
    CHECK(fs.one_minus_p_exponent == 2);
    CHECK(fs.distance == 1);
    CHECK(fs.cut_in_g == 1);
    CHECK(fs.cut_in_bunkbed == 2);
    CHECK(fs.cut_match() == "bunkbed");
    CHECK(fs.irreducibility_label() == "constant");
    CHECK_THROWS_AS(factor_structure(p_poly({}), k2), InvalidInput);

    // triangle: the rest splits as (p^2 - p - 1)(p^3 - p - 1)
    SimpleGraph tri(3, {{0, 1}, {0, 2}, {1, 2}}, 0, 1);
    auto ft = factor_structure(difference_polynomial(tri), tri);
    CHECK(ft.p_exponent == 1);
    CHECK(ft.one_minus_p_exponent == 3);
    CHECK(ft.rest.degree() == 5);
    CHECK(ft.irreducible == Irreducibility::Reducible);
}

TEST_CASE("graph utilities") {
    std::istringstream in("# a path\n0 1\n1 2  \n\ns=0 f=2\n");
    auto g = SimpleGraph::parse(in);
    CHECK(g.n == 3);
    CHECK(g.edges.size() == 2);
    CHECK(g.s == 0);
    CHECK(g.f == 2);
    std::istringstream back(g.to_text());
    auto again = SimpleGraph::parse(back);
    CHECK(again.edges == g.edges);
    CHECK(again.s == g.s);

    std::istringstream no_terminals("0 1\n");
    CHECK_THROWS_AS(SimpleGraph::parse(no_terminals), InvalidInput);
    CHECK_THROWS_AS(SimpleGraph(3, {{0, 0}}), InvalidInput);
    CHECK_THROWS_AS(SimpleGraph(3, {{0, 1}, {1, 0}}), InvalidInput);
    CHECK_THROWS_AS(SimpleGraph(3, {{0, 1}}, 1, 1), InvalidInput);

    SimpleGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, 0, 2);
    CHECK(distance(4, c4.edges, 0, 2) == 2);
    CHECK(min_edge_cut(4, c4.edges, 0, 2) == 2);
    CHECK(min_edge_cut(8, bunkbed_edges(c4, Rungs::All), 0, 2) == 3);
    CHECK(distance(4, {{0, 1}, {2, 3}}, 0, 2) == -1);
}

TEST_CASE("connected graph enumeration") {
    // labeled connected graphs: sum over classes of n!/|Aut|
    const std::vector<int> classes{0, 1, 1, 2, 6, 21}, labeled{0, 1, 1, 4, 38, 728};
    for (int n = 1; n <= 5; ++n) {
        auto gs = connected_graphs(n);
        CHECK(static_cast<int>(gs.size()) == classes[n]);
        if (n < 2) continue;
        int fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        int total = 0;
        for (auto& g : gs) {
            CHECK(is_connected(n, g.edges));
            total += fact / automorphisms(g);
        }
        CHECK(total == labeled[n]);
        for (std::size_t i = 0; i < gs.size(); ++i)
            for (std::size_t j = i + 1; j < gs.size(); ++j) CHECK_FALSE(isomorphic(gs[i], gs[j]));
    }
}

TEST_CASE("scan to four vertices") {
    ScanOptions opt;
    opt.max_vertices = 4;
    opt.brute_max_edges = 16;
    opt.jobs = 2;
    auto report = scan_graphs(opt);
    CHECK(report.graph_counts == std::vector<int>{0, 1, 1, 2, 6});
    CHECK(report.rows.size() == 20);
    CHECK(report.all_certified());
    CHECK(report.brute_checked() == 20);
    CHECK(report.brute_all_agree());
    for (auto& r : report.rows) {
        REQUIRE(r.factors);
        CHECK(r.factors->distance_matches());
    }
    std::ostringstream csv;
    report.write_csv(csv);
    const std::string text = csv.str();
    CHECK(text.rfind("graph,edges,s,f,difference,status", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 21);
    CHECK_THROWS_AS(scan_graphs({7}), InvalidInput);
}
