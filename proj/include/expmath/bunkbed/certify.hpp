#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "expmath/bunkbed/bunkbed.hpp"
#include "expmath/exact/factor.hpp"
#include "expmath/exact/unipoly.hpp"

namespace expmath {

// q = p^a (1-p)^b r with r(0), r(1) != 0. q >= 0 on [0,1] iff r > 0 at one point of every
// root-free gap of the square-free part of r in (0,1).
struct NonnegCertificate {
    bool nonnegative = false;
    bool identically_zero = false;
    int p_exponent = 0, one_minus_p_exponent = 0;
    UniPoly rest;
    std::vector<UniPoly> sturm;                                 // chain of the square-free part of rest
    std::vector<std::pair<Rational, Rational>> root_intervals;  // (a, b], one distinct root each
    std::vector<std::pair<Rational, Rational>> samples;         // (point, rest(point)) per gap
    std::optional<Rational> counterexample;                     // q(p0) < 0, p0 in (0,1)

    nlohmann::json to_json() const;
};

NonnegCertificate certify_nonnegative(const UniPoly& q);

// Sturm chain p, p', -rem(p, p'), ...
std::vector<UniPoly> sturm_chain(const UniPoly& p);
int sign_changes(const std::vector<UniPoly>& chain, const Rational& x);
// Distinct roots in (a, b] for a square-free p with p(a) != 0.
int count_roots(const std::vector<UniPoly>& chain, const Rational& a, const Rational& b);

struct FactorStructure {
    int p_exponent = 0;
    int one_minus_p_exponent = 0;
    UniPoly rest;
    Irreducibility irreducible = Irreducibility::Unknown;
    int distance = -1;      // shortest s-f path in G
    int cut_in_g = 0;       // min s-f edge cut in G
    int cut_in_bunkbed = 0; // min s-f edge cut in the bunk bed graph
    bool distance_matches() const { return distance == p_exponent; }
    // "bunkbed", "G", "both" or "neither"
    std::string cut_match() const;
    // to_string(irreducible), or "constant" when nothing is left after stripping
    std::string irreducibility_label() const;
    nlohmann::json to_json() const;
};

FactorStructure factor_structure(const UniPoly& q, const SimpleGraph& g, Rungs rungs = Rungs::All);

// p-adic and (1-p)-adic valuations with the remaining factor.
struct Valuations {
    int at_zero = 0, at_one = 0;
    UniPoly rest;
};
Valuations strip_endpoints(const UniPoly& q);

}  // namespace expmath
