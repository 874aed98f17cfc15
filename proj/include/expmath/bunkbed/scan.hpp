#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "expmath/bunkbed/bunkbed.hpp"
#include "expmath/bunkbed/certify.hpp"

namespace expmath {

struct ScanOptions {
    int max_vertices = 5;
    Rungs rungs = Rungs::All;
    int brute_max_edges = 10;  // cross-check against whole-graph enumeration up to this many edges
    int jobs = 1;
};

struct ScanRow {
    SimpleGraph graph;  // s, f set
    std::string canonical;
    UniPoly difference;
    NonnegCertificate certificate;
    std::optional<FactorStructure> factors;  // absent when the difference is identically zero
    std::optional<bool> brute_agrees;
};

struct ScanReport {
    std::vector<int> graph_counts;  // index n: nonisomorphic connected graphs on n vertices
    std::vector<ScanRow> rows;
    bool all_certified() const;
    int brute_checked() const;
    bool brute_all_agree() const;
    void write_csv(std::ostream& out) const;
};

// Every connected graph up to max_vertices and every {s, f} up to automorphism.
ScanReport scan_graphs(const ScanOptions& opt = {});

}  // namespace expmath
