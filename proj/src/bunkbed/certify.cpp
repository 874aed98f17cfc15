#include "expmath/bunkbed/certify.hpp"

#include <algorithm>

namespace expmath {

Valuations strip_endpoints(const UniPoly& q) {
    if (q.is_zero()) throw InvalidInput("zero polynomial has no valuations");
    Valuations v;
    v.rest = q;
    const UniPoly p = UniPoly::variable(q.var()), one_minus = UniPoly(std::vector<Rational>{1, -1}, q.var());
    while (v.rest.eval(0) == 0) v.rest = v.rest / p, ++v.at_zero;
    while (v.rest.eval(1) == 0) v.rest = v.rest / one_minus, ++v.at_one;
    return v;
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain{p};
    if (p.degree() < 1) return chain;
    chain.push_back(p.derivative());
    while (!chain.back().is_constant()) {
        UniPoly r = chain[chain.size() - 2] % chain.back();
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sign_changes(const std::vector<UniPoly>& chain, const Rational& x) {
    int changes = 0, last = 0;
    for (auto& q : chain) {
        int s = sgn(q.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int count_roots(const std::vector<UniPoly>& chain, const Rational& a, const Rational& b) {
    return sign_changes(chain, a) - sign_changes(chain, b);
}

namespace {

// A point of (a, b) where p does not vanish, near the middle.
Rational split_point(const UniPoly& p, const Rational& a, const Rational& b) {
    for (long d = 2;; ++d) {
        Rational m = a + (b - a) * make_rational(d / 2, d);
        if (p.eval(m) != 0) return m;
    }
}

}  // namespace

NonnegCertificate certify_nonnegative(const UniPoly& q) {
    NonnegCertificate cert;
    if (q.is_zero()) {
        cert.nonnegative = true;
        cert.identically_zero = true;
        cert.rest = q;
        return cert;
    }
    Valuations v = strip_endpoints(q);
    cert.p_exponent = v.at_zero;
    cert.one_minus_p_exponent = v.at_one;
    cert.rest = v.rest;

    // square-free part keeps the sign pattern of the distinct roots
    UniPoly sf = v.rest.degree() >= 1 ? v.rest / gcd(v.rest, v.rest.derivative()) : v.rest;
    cert.sturm = sturm_chain(sf);

    std::vector<std::pair<Rational, Rational>> work{{Rational(0), Rational(1)}};
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        int k = count_roots(cert.sturm, a, b);
        if (k == 0) continue;
        if (k == 1 && a > 0 && b < 1) {
            cert.root_intervals.push_back({a, b});
            continue;
        }
        Rational m = split_point(sf, a, b);
        work.push_back({a, m});
        work.push_back({m, b});
    }
    std::sort(cert.root_intervals.begin(), cert.root_intervals.end());

    std::vector<Rational> edges{Rational(0)};
    for (auto& [a, b] : cert.root_intervals) edges.push_back(a), edges.push_back(b);
    edges.push_back(Rational(1));
    cert.nonnegative = true;
    for (std::size_t i = 0; i + 1 < edges.size(); i += 2) {
        Rational mid = (edges[i] + edges[i + 1]) / 2;
        Rational val = v.rest.eval(mid);
        cert.samples.push_back({mid, val});
        if (val < 0 && !cert.counterexample) {
            cert.nonnegative = false;
            // mid lies in (0,1) unless the gap is a single endpoint, which r(0), r(1) != 0 rules out
            cert.counterexample = mid;
        }
    }
    return cert;
}

nlohmann::json NonnegCertificate::to_json() const {
    nlohmann::json j;
    j["status"] = nonnegative ? "certified" : "counterexample";
    j["identically_zero"] = identically_zero;
    j["p_exponent"] = p_exponent;
    j["one_minus_p_exponent"] = one_minus_p_exponent;
    j["rest"] = rest.to_string();
    auto& chain = j["sturm"] = nlohmann::json::array();
    for (auto& s : sturm) chain.push_back(s.to_string());
    auto& iv = j["root_intervals"] = nlohmann::json::array();
    for (auto& [a, b] : root_intervals) iv.push_back({to_string(a), to_string(b)});
    auto& sm = j["samples"] = nlohmann::json::array();
    for (auto& [x, y] : samples) sm.push_back({to_string(x), to_string(y)});
    if (counterexample) j["counterexample"] = to_string(*counterexample);
    return j;
}

std::string FactorStructure::cut_match() const {
    bool g = cut_in_g == one_minus_p_exponent, b = cut_in_bunkbed == one_minus_p_exponent;
    return g && b ? "both" : g ? "G" : b ? "bunkbed" : "neither";
}

std::string FactorStructure::irreducibility_label() const {
    return rest.degree() < 1 ? "constant" : expmath::to_string(irreducible);
}

nlohmann::json FactorStructure::to_json() const {
    return {{"p_exponent", p_exponent},
            {"one_minus_p_exponent", one_minus_p_exponent},
            {"rest", rest.to_string()},
            {"irreducible", irreducibility_label()},
            {"distance", distance},
            {"cut_in_g", cut_in_g},
            {"cut_in_bunkbed", cut_in_bunkbed},
            {"cut_match", cut_match()}};
}

FactorStructure factor_structure(const UniPoly& q, const SimpleGraph& g, Rungs rungs) {
    if (q.is_zero()) throw InvalidInput("factor_structure needs a nonzero polynomial");
    FactorStructure fs;
    Valuations v = strip_endpoints(q);
    fs.p_exponent = v.at_zero;
    fs.one_minus_p_exponent = v.at_one;
    fs.rest = v.rest;
    fs.irreducible = v.rest.degree() < 1 ? Irreducibility::Unknown : test_irreducible(v.rest);
    fs.distance = distance(g.n, g.edges, g.s, g.f);
    fs.cut_in_g = min_edge_cut(g.n, g.edges, g.s, g.f);
    fs.cut_in_bunkbed = min_edge_cut(2 * g.n, bunkbed_edges(g, rungs), g.s, g.f);
    return fs;
}

}  // namespace expmath
