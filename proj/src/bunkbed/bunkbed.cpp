#include "expmath/bunkbed/bunkbed.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace expmath {

UniPoly p_poly(std::vector<Rational> coeffs) { return UniPoly(std::move(coeffs), "p"); }

UniPoly EdgeCounts::polynomial() const {
    // p^k (1-p)^(m-k) = sum_j C(m-k, j) (-1)^j p^(k+j)
    std::vector<Rational> out(m + 1);
    for (int k = 0; k <= m; ++k) {
        if (c[k] == 0) continue;
        Integer ck(static_cast<long>(c[k]));
        for (int j = 0; j <= m - k; ++j) {
            Integer t = ck * binomial(m - k, j);
            if (j % 2) out[k + j] -= t;
            else out[k + j] += t;
        }
    }
    return p_poly(out);
}

UniPoly ConnectivityProfile::polynomial(const Partition& pi) const {
    auto it = parts.find(pi);
    return it == parts.end() ? p_poly({}) : it->second.polynomial();
}

UniPoly ConnectivityProfile::total() const {
    UniPoly t = p_poly({});
    for (auto& [pi, counts] : parts) t += counts.polynomial();
    return t;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Restricted growth labels of the given elements under uf.
Partition labels_of(UnionFind& uf, const std::vector<int>& elems) {
    Partition out(elems.size());
    std::vector<int> roots;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        int r = uf.find(elems[i]);
        auto it = std::find(roots.begin(), roots.end(), r);
        out[i] = static_cast<int>(it - roots.begin());
        if (it == roots.end()) roots.push_back(r);
    }
    return out;
}

Partition relabel(const Partition& pi) {
    Partition out(pi.size());
    std::vector<int> seen;
    for (std::size_t i = 0; i < pi.size(); ++i) {
        auto it = std::find(seen.begin(), seen.end(), pi[i]);
        out[i] = static_cast<int>(it - seen.begin());
        if (it == seen.end()) seen.push_back(pi[i]);
    }
    return out;
}

std::uint32_t pack(const Partition& pi) {
    std::uint32_t key = 0;
    for (int l : pi) key = key << 3 | static_cast<std::uint32_t>(l);
    return key;
}

void add_shifted(std::vector<std::int64_t>& dst, const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) dst[i + j] += a[i] * b[j];
    }
}

// Copy-edge counts (length 2|E|+1) of s<->f and s<->f' given exactly the rungs at X.
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> conditional_counts(const SimpleGraph& g,
                                                                                   const ConnectivityProfile& full,
                                                                                   const std::vector<int>& X) {
    const int E = static_cast<int>(g.edges.size());
    std::vector<int> T{g.s, g.f};
    for (int x : X)
        if (x != g.s && x != g.f) T.push_back(x);
    std::vector<int> rung_at;  // indices into T
    for (int x : X) rung_at.push_back(static_cast<int>(std::find(T.begin(), T.end(), x) - T.begin()));

    std::map<Partition, std::vector<std::int64_t>> restricted;
    for (auto& [pi, counts] : full.parts) {
        Partition sub(T.size());
        for (std::size_t i = 0; i < T.size(); ++i) sub[i] = pi[T[i]];
        auto& acc = restricted[relabel(sub)];
        if (acc.empty()) acc.assign(E + 1, 0);
        for (int k = 0; k <= E; ++k) acc[k] += counts.c[k];
    }
    std::vector<std::pair<Partition, std::vector<std::int64_t>>> list(restricted.begin(), restricted.end());

    const int t = static_cast<int>(T.size());
    std::vector<std::int64_t> to_f(2 * E + 1, 0), to_fp(2 * E + 1, 0);
    std::vector<std::int64_t> acc_f(E + 1), acc_fp(E + 1);
    for (auto& [pi, cnt] : list) {
        std::fill(acc_f.begin(), acc_f.end(), 0);
        std::fill(acc_fp.begin(), acc_fp.end(), 0);
        for (auto& [pj, cnt2] : list) {
            UnionFind uf(2 * t);
            std::vector<int> first(t, -1), first2(t, -1);
            for (int i = 0; i < t; ++i) {
                if (first[pi[i]] < 0) first[pi[i]] = i;
                else uf.unite(i, first[pi[i]]);
                if (first2[pj[i]] < 0) first2[pj[i]] = i;
                else uf.unite(t + i, t + first2[pj[i]]);
            }
            for (int r : rung_at) uf.unite(r, t + r);
            int rs = uf.find(0);
            bool f_ok = rs == uf.find(1), fp_ok = rs == uf.find(t + 1);
            for (int k = 0; k <= E; ++k) {
                if (f_ok) acc_f[k] += cnt2[k];
                if (fp_ok) acc_fp[k] += cnt2[k];
            }
        }
        add_shifted(to_f, cnt, acc_f);
        add_shifted(to_fp, cnt, acc_fp);
    }
    return {to_f, to_fp};
}

ConnectivityProfile all_vertex_profile(const SimpleGraph& g) {
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    return connectivity_profile(g, all);
}

}  // namespace

ConnectivityProfile connectivity_profile(const SimpleGraph& g, const std::vector<int>& terminals) {
    g.validate();
    if (terminals.size() > 8) throw TooLarge("at most 8 terminals");
    if (g.edges.size() > 24) throw TooLarge("at most 24 edges per copy");
    for (int v : terminals)
        if (v < 0 || v >= g.n) throw InvalidInput("terminal out of range");
    const int E = static_cast<int>(g.edges.size());

    std::unordered_map<std::uint32_t, std::pair<Partition, std::vector<std::int64_t>>> acc;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << E); ++mask) {
        UnionFind uf(g.n);
        for (int e = 0; e < E; ++e)
            if (mask >> e & 1) uf.unite(g.edges[e].first, g.edges[e].second);
        Partition pi = labels_of(uf, terminals);
        auto& slot = acc[pack(pi)];
        if (slot.second.empty()) slot = {pi, std::vector<std::int64_t>(E + 1, 0)};
        ++slot.second[__builtin_popcountll(mask)];
    }
    ConnectivityProfile prof;
    prof.terminals = terminals;
    for (auto& [key, entry] : acc) prof.parts[entry.first] = EdgeCounts{E, entry.second};
    return prof;
}

const char* to_string(Rungs r) { return r == Rungs::All ? "all" : "no-terminals"; }

Rungs parse_rungs(const std::string& s) {
    if (s == "all") return Rungs::All;
    if (s == "no-terminals") return Rungs::NoTerminals;
    throw InvalidInput("rungs must be 'all' or 'no-terminals'");
}

std::vector<int> rung_vertices(const SimpleGraph& g, Rungs r) {
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (r == Rungs::All || (v != g.s && v != g.f)) out.push_back(v);
    return out;
}

int bunkbed_edge_count(const SimpleGraph& g, Rungs rungs) {
    return 2 * static_cast<int>(g.edges.size()) + static_cast<int>(rung_vertices(g, rungs).size());
}

std::vector<std::pair<int, int>> bunkbed_edges(const SimpleGraph& g, Rungs rungs) {
    std::vector<std::pair<int, int>> out = g.edges;
    for (auto [u, v] : g.edges) out.push_back({u + g.n, v + g.n});
    for (int v : rung_vertices(g, rungs)) out.push_back({v, v + g.n});
    return out;
}

ConnectionPolynomials connection_polynomials(const SimpleGraph& g, Rungs rungs) {
    g.validate();
    const auto R = rung_vertices(g, rungs);
    const int E = static_cast<int>(g.edges.size()), r = static_cast<int>(R.size());
    const int M = 2 * E + r;
    ConnectivityProfile full = all_vertex_profile(g);

    EdgeCounts f{M, std::vector<std::int64_t>(M + 1, 0)}, fp{M, std::vector<std::int64_t>(M + 1, 0)};
    for (std::uint32_t xm = 0; xm < (1u << r); ++xm) {
        std::vector<int> X;
        for (int i = 0; i < r; ++i)
            if (xm >> i & 1) X.push_back(R[i]);
        auto [cf, cfp] = conditional_counts(g, full, X);
        const int shift = static_cast<int>(X.size());
        for (int k = 0; k <= 2 * E; ++k) {
            f.c[k + shift] += cf[k];
            fp.c[k + shift] += cfp[k];
        }
    }
    return {f.polynomial(), fp.polynomial()};
}

UniPoly difference_polynomial(const SimpleGraph& g, Rungs rungs) { return connection_polynomials(g, rungs).difference(); }

UniPoly difference_polynomial_bruteforce(const SimpleGraph& g, Rungs rungs) {
    g.validate();
    auto edges = bunkbed_edges(g, rungs);
    const int M = static_cast<int>(edges.size());
    if (M > 24) throw TooLarge("brute force limited to 24 bunk bed edges");
    EdgeCounts d{M, std::vector<std::int64_t>(M + 1, 0)};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << M); ++mask) {
        UnionFind uf(2 * g.n);
        for (int e = 0; e < M; ++e)
            if (mask >> e & 1) uf.unite(edges[e].first, edges[e].second);
        int rs = uf.find(g.s);
        int k = __builtin_popcountll(mask);
        d.c[k] += (rs == uf.find(g.f)) - (rs == uf.find(g.f + g.n));
    }
    return d.polynomial();
}

UniPoly conditional_difference(const SimpleGraph& g, const std::vector<int>& X) {
    g.validate();
    std::vector<int> sorted = X;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InvalidInput("repeated vertex in X");
    for (int x : X)
        if (x < 0 || x >= g.n || x == g.s || x == g.f) throw InvalidInput("X must be a subset of V minus {s, f}");
    auto [cf, cfp] = conditional_counts(g, all_vertex_profile(g), X);
    const int E = static_cast<int>(g.edges.size());
    EdgeCounts d{2 * E, std::vector<std::int64_t>(2 * E + 1, 0)};
    for (int k = 0; k <= 2 * E; ++k) d.c[k] = cf[k] - cfp[k];
    return d.polynomial();
}

}  // namespace expmath
