#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "expmath/errors.hpp"

namespace expmath {

class TooLarge : public InvalidInput {
public:
    explicit TooLarge(const std::string& what) : InvalidInput("TooLarge", what) {}
};

// Simple undirected graph on vertices 0..n-1 with distinguished s != f.
struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v
    int s = 0, f = 1;

    SimpleGraph() = default;
    SimpleGraph(int n, std::vector<std::pair<int, int>> edges, int s = 0, int f = 1);

    void validate() const;  // also normalizes nothing; throws on loops, duplicates, s == f
    bool has_edge(int u, int v) const;
    std::uint64_t edge_mask() const;  // bit index of (u,v) in the upper triangle, row-major

    // "u v" per line, plus a line "s=<id> f=<id>"; '#' comments.
    static SimpleGraph parse(std::istream& in);
    std::string to_text() const;
    // "n:u-v,u-v,..." with edges sorted
    std::string label() const;
};

int pair_index(int n, int u, int v);

bool is_connected(int n, const std::vector<std::pair<int, int>>& edges);
// BFS distance, -1 when unreachable
int distance(int n, const std::vector<std::pair<int, int>>& edges, int s, int t);
// Minimum number of edges separating s from t (unit-capacity max flow).
int min_edge_cut(int n, const std::vector<std::pair<int, int>>& edges, int s, int t);

// Lexicographically smallest upper-triangle bit string over all vertex relabelings (n <= 8).
std::uint64_t canonical_mask(const SimpleGraph& g);
bool isomorphic(const SimpleGraph& a, const SimpleGraph& b);  // by explicit permutation search
// One representative per isomorphism class of connected graphs on n vertices, n <= 6.
std::vector<SimpleGraph> connected_graphs(int n);

}  // namespace expmath
