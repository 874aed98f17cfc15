#include "expmath/bunkbed/scan.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

namespace expmath {

namespace {

std::string pair_key(const SimpleGraph& g, std::uint64_t canon) {
    std::ostringstream o;
    o << g.n << ":0x" << std::hex << canon << std::dec;
    return o.str();
}

// Smallest (relabeled edge mask, sorted terminal pair) over all relabelings.
std::tuple<std::uint64_t, int, int> marked_canonical(const SimpleGraph& g) {
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::tuple<std::uint64_t, int, int> best{~std::uint64_t{0}, 0, 0};
    do {
        std::uint64_t m = 0;
        for (auto [u, v] : g.edges) m |= std::uint64_t{1} << pair_index(g.n, perm[u], perm[v]);
        int a = perm[g.s], b = perm[g.f];
        best = std::min(best, std::make_tuple(m, std::min(a, b), std::max(a, b)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

ScanRow evaluate(const SimpleGraph& g, const ScanOptions& opt) {
    ScanRow row;
    row.graph = g;
    row.canonical = pair_key(g, canonical_mask(g));
    row.difference = difference_polynomial(g, opt.rungs);
    row.certificate = certify_nonnegative(row.difference);
    if (!row.difference.is_zero()) row.factors = factor_structure(row.difference, g, opt.rungs);
    if (bunkbed_edge_count(g, opt.rungs) <= opt.brute_max_edges)
        row.brute_agrees = difference_polynomial_bruteforce(g, opt.rungs) == row.difference;
    return row;
}

}  // namespace

bool ScanReport::all_certified() const {
    return std::all_of(rows.begin(), rows.end(), [](const ScanRow& r) { return r.certificate.nonnegative; });
}

int ScanReport::brute_checked() const {
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const ScanRow& r) { return r.brute_agrees.has_value(); }));
}

bool ScanReport::brute_all_agree() const {
    return std::all_of(rows.begin(), rows.end(), [](const ScanRow& r) { return r.brute_agrees.value_or(true); });
}

void ScanReport::write_csv(std::ostream& out) const {
    out << "graph,edges,s,f,difference,status,p_exponent,one_minus_p_exponent,distance,cut_g,cut_bunkbed,irreducible,strict,brute_force\n";
    for (auto& r : rows) {
        std::string edges;
        for (auto [u, v] : r.graph.edges) edges += (edges.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
        out << r.canonical << ',' << edges << ',' << r.graph.s << ',' << r.graph.f << ",\""
            << r.difference.to_string() << "\"," << (r.certificate.nonnegative ? "certified" : "counterexample");
        if (r.factors) {
            auto& f = *r.factors;
            out << ',' << f.p_exponent << ',' << f.one_minus_p_exponent << ',' << f.distance << ',' << f.cut_in_g << ','
                << f.cut_in_bunkbed << ',' << f.irreducibility_label();
        } else {
            out << ",,,,,,";
        }
        out << ',' << (r.difference.is_zero() ? "no" : "yes") << ','
            << (r.brute_agrees ? (*r.brute_agrees ? "agree" : "DISAGREE") : "skipped") << '\n';
    }
}

ScanReport scan_graphs(const ScanOptions& opt) {
    if (opt.max_vertices < 1 || opt.max_vertices > 6) throw InvalidInput("max_vertices must be between 1 and 6");
    ScanReport report;
    report.graph_counts.assign(opt.max_vertices + 1, 0);
    std::vector<SimpleGraph> tasks;
    for (int n = 1; n <= opt.max_vertices; ++n) {
        auto graphs = connected_graphs(n);
        report.graph_counts[n] = static_cast<int>(graphs.size());
        if (n < 2) continue;
        for (auto& g : graphs) {
            std::set<std::tuple<std::uint64_t, int, int>> seen;
            for (int s = 0; s < n; ++s)
                for (int f = s + 1; f < n; ++f) {
                    SimpleGraph h(n, g.edges, s, f);
                    if (seen.insert(marked_canonical(h)).second) tasks.push_back(h);
                }
        }
    }
    report.rows.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
        try {
            for (std::size_t i; (i = next++) < tasks.size();) report.rows[i] = evaluate(tasks[i], opt);
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mu);
            if (!failure) failure = std::current_exception();
            next = tasks.size();
        }
    };
    int jobs = std::max(1, opt.jobs);
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return report;
}

}  // namespace expmath
