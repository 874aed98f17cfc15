#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "expmath/exact/unipoly.hpp"

namespace expmath {

// Yun's algorithm. Returns (primitive square-free part, multiplicity) pairs, multiplicities increasing.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const UniPoly& p);

// Kronecker search for a primitive integer factor of exactly degree d. Empty if none exists;
// throws InvalidInput when the search would exceed its combination budget.
std::optional<UniPoly> find_factor_of_degree(const UniPoly& p, int d);

// Factor degrees compatible with the factorization pattern modulo several small primes.
// Each returned degree e means some factor of degree e over Q is not yet ruled out.
std::vector<int> possible_factor_degrees(const UniPoly& p);

enum class Irreducibility { Irreducible, Reducible, Unknown };
const char* to_string(Irreducibility v);

// Decided exactly up to degree 8; above that only disproved by a found factor.
Irreducibility test_irreducible(const UniPoly& p);

struct Factorization {
    Rational unit;  // p = unit * prod f^m
    std::vector<std::pair<UniPoly, int>> factors;  // primitive, positive leading coefficient
    bool complete = true;  // every listed factor proven irreducible
};

// Square-free split, caller hints, rational roots, then Kronecker splitting up to degree 8.
Factorization factor(const UniPoly& p, const std::vector<UniPoly>& hints = {});

}  // namespace expmath
