#pragma once

#include <cstdint>
#include <vector>

#include "expmath/deadline.hpp"
#include "expmath/exact/matrix.hpp"
#include "expmath/exact/unipoly.hpp"

namespace expmath {

// Nullspace over Q(n) of a matrix with entries in Q[n], computed by evaluation at integer
// points, fraction-free integer elimination and interpolation of the Cramer vectors.
// Each returned vector has polynomial entries with no common factor, integer coefficients
// and positive leading coefficient on its first nonzero entry. Every vector is checked
// exactly against the input before it is returned.
std::vector<std::vector<UniPoly>> polynomial_nullspace(const Matrix<UniPoly>& m, const std::string& var,
                                                       const Deadline* dl = nullptr, std::uint64_t seed = 1);

// Rank over Q(n), by evaluation at a random point (Monte Carlo, used as a cheap pre-check).
std::size_t polynomial_rank_estimate(const Matrix<UniPoly>& m, std::uint64_t seed = 1);

// Newton interpolation through (xs[i], ys[i]).
UniPoly interpolate(const std::vector<Integer>& xs, const std::vector<Rational>& ys, const std::string& var);

}  // namespace expmath
