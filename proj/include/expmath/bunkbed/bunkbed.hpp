#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "expmath/bunkbed/graph.hpp"
#include "expmath/exact/unipoly.hpp"

namespace expmath {

// Polynomials in the retention probability p use the variable name "p".
UniPoly p_poly(std::vector<Rational> coeffs);

// Configuration counts by number of retained edges: sum_k c_k p^k (1-p)^(m-k).
struct EdgeCounts {
    int m = 0;                     // number of random edges
    std::vector<std::int64_t> c;  // size m + 1
    UniPoly polynomial() const;
};

// Set partition of the terminals as restricted growth labels, e.g. {0,0,1} = {t0,t1}{t2}.
using Partition = std::vector<int>;

struct ConnectivityProfile {
    std::vector<int> terminals;
    std::map<Partition, EdgeCounts> parts;
    UniPoly polynomial(const Partition& pi) const;
    UniPoly total() const;  // identically 1
};

// Exhaustive over the 2^|E| edge subsets with union-find. Caps: 8 terminals, 24 edges.
ConnectivityProfile connectivity_profile(const SimpleGraph& g, const std::vector<int>& terminals);

// Which outside edges (v, v') exist: all of them (the plain product G x K2), or all except at s and f.
enum class Rungs { All, NoTerminals };
const char* to_string(Rungs r);
Rungs parse_rungs(const std::string& s);
std::vector<int> rung_vertices(const SimpleGraph& g, Rungs r);

struct ConnectionPolynomials {
    UniPoly to_f;        // P(s <-> f)
    UniPoly to_f_prime;  // P(s <-> f')
    UniPoly difference() const { return to_f - to_f_prime; }
};

// Profiles of the two independent copies, combined over every retained rung set X.
ConnectionPolynomials connection_polynomials(const SimpleGraph& g, Rungs rungs = Rungs::All);
UniPoly difference_polynomial(const SimpleGraph& g, Rungs rungs = Rungs::All);
// Same quantity by enumerating every edge subset of the whole bunk bed graph (at most 24 edges).
UniPoly difference_polynomial_bruteforce(const SimpleGraph& g, Rungs rungs = Rungs::All);
int bunkbed_edge_count(const SimpleGraph& g, Rungs rungs);
// The bunk bed graph itself: vertex v of G' is v + n.
std::vector<std::pair<int, int>> bunkbed_edges(const SimpleGraph& g, Rungs rungs);

// Given that exactly the rungs at X are retained (X excludes s and f); polynomial in the copy-edge p.
UniPoly conditional_difference(const SimpleGraph& g, const std::vector<int>& X);

}  // namespace expmath
