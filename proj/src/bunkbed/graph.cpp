#include "expmath/bunkbed/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace expmath {

SimpleGraph::SimpleGraph(int n_, std::vector<std::pair<int, int>> edges_, int s_, int f_)
    : n(n_), edges(std::move(edges_)), s(s_), f(f_) {
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    validate();
}

void SimpleGraph::validate() const {
    if (n < 2) throw InvalidInput("graph needs at least two vertices");
    if (n > 16) throw TooLarge("graph has more than 16 vertices");
    if (s < 0 || s >= n || f < 0 || f >= n) throw InvalidInput("s or f out of range");
    if (s == f) throw InvalidInput("s and f must differ");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v >= n || u >= v) throw InvalidInput("bad edge " + std::to_string(u) + " " + std::to_string(v));
        if (!seen.insert({u, v}).second) throw InvalidInput("duplicate edge");
    }
}

bool SimpleGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end();
}

int pair_index(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

std::uint64_t SimpleGraph::edge_mask() const {
    std::uint64_t m = 0;
    for (auto [u, v] : edges) m |= std::uint64_t{1} << pair_index(n, u, v);
    return m;
}

SimpleGraph SimpleGraph::parse(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int s = -1, f = -1, top = -1;
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (line.find('=') != std::string::npos) {
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) throw InvalidInput("bad token '" + tok + "'");
                std::string key = tok.substr(0, eq);
                int val = std::stoi(tok.substr(eq + 1));
                if (key == "s") s = val;
                else if (key == "f") f = val;
                else throw InvalidInput("unknown key '" + key + "'");
            }
            continue;
        }
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) throw InvalidInput("bad edge line '" + line + "'");
        edges.push_back({u, v});
        top = std::max({top, u, v});
    }
    if (s < 0 || f < 0) throw InvalidInput("graph input needs a line 's=<id> f=<id>'");
    top = std::max({top, s, f});
    return SimpleGraph(top + 1, edges, s, f);
}

std::string SimpleGraph::to_text() const {
    std::ostringstream o;
    for (auto [u, v] : edges) o << u << ' ' << v << '\n';
    o << "s=" << s << " f=" << f << '\n';
    return o.str();
}

std::string SimpleGraph::label() const {
    std::ostringstream o;
    o << n << ':';
    for (std::size_t i = 0; i < edges.size(); ++i) o << (i ? "," : "") << edges[i].first << '-' << edges[i].second;
    return o.str();
}

bool is_connected(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int comps = n;
    for (auto [u, v] : edges) {
        int a = find(u), b = find(v);
        if (a != b) parent[a] = b, --comps;
    }
    return comps == 1;
}

int distance(int n, const std::vector<std::pair<int, int>>& edges, int s, int t) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) adj[u].push_back(v), adj[v].push_back(u);
    std::vector<int> d(n, -1);
    std::queue<int> q;
    d[s] = 0;
    q.push(s);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u])
            if (d[v] < 0) d[v] = d[u] + 1, q.push(v);
    }
    return d[t];
}

int min_edge_cut(int n, const std::vector<std::pair<int, int>>& edges, int s, int t) {
    // each undirected edge is two arcs of capacity 1
    std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
    for (auto [u, v] : edges) ++cap[u][v], ++cap[v][u];
    int flow = 0;
    while (true) {
        std::vector<int> prev(n, -1);
        prev[s] = s;
        std::queue<int> q;
        q.push(s);
        while (!q.empty() && prev[t] < 0) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v)
                if (prev[v] < 0 && cap[u][v] > 0) prev[v] = u, q.push(v);
        }
        if (prev[t] < 0) return flow;
        for (int v = t; v != s; v = prev[v]) --cap[prev[v]][v], ++cap[v][prev[v]];
        ++flow;
    }
}

namespace {

std::uint64_t permuted_mask(int n, std::uint64_t mask, const std::vector<int>& perm) {
    std::uint64_t out = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (mask >> pair_index(n, u, v) & 1) out |= std::uint64_t{1} << pair_index(n, perm[u], perm[v]);
    return out;
}

}  // namespace

std::uint64_t canonical_mask(const SimpleGraph& g) {
    if (g.n > 8) throw TooLarge("canonical form limited to 8 vertices");
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t mask = g.edge_mask(), best = ~std::uint64_t{0};
    do best = std::min(best, permuted_mask(g.n, mask, perm));
    while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    std::vector<int> perm(a.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges)
            if (!b.has_edge(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<SimpleGraph> connected_graphs(int n) {
    if (n < 1) return {};
    if (n > 6) throw TooLarge("graph enumeration limited to 6 vertices");
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
    std::vector<SimpleGraph> out;
    if (n == 1) {
        SimpleGraph g;
        g.n = 1;
        g.s = g.f = 0;
        out.push_back(g);
        return out;
    }
    // every relabeling is visited, so keeping masks equal to their own canonical form dedups
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        if (static_cast<int>(__builtin_popcountll(mask)) < n - 1) continue;
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1) edges.push_back(slots[i]);
        if (!is_connected(n, edges)) continue;
        bool minimal = true;
        for (auto& p : perms)
            if (permuted_mask(n, mask, p) < mask) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(SimpleGraph(n, edges, 0, 1));
    }
    return out;
}

}  // namespace expmath
