#pragma once

#include <vector>

#include "expmath/deadline.hpp"
#include "expmath/errors.hpp"
#include "expmath/exact/matrix.hpp"
#include "expmath/exact/ratfunc.hpp"

namespace expmath {

class NoSolution : public NotFound {
public:
    NoSolution() : NotFound("NoSolution", "linear system is inconsistent", "solve") {}
};

template <class F>
struct LinearSolution {
    std::vector<F> particular;
    std::vector<std::vector<F>> nullspace;
};

// Exact solve by fraction-free elimination. Throws NoSolution when inconsistent.
LinearSolution<Rational> solve_linear(const Matrix<Rational>& a, const std::vector<Rational>& rhs);
LinearSolution<RatFunc> solve_linear(const Matrix<RatFunc>& a, const std::vector<RatFunc>& rhs,
                                     const Deadline* dl = nullptr);

// Nullspace over the fraction field of the entries, returned as polynomial vectors
// scaled so that each vector is primitive.
std::vector<std::vector<MultiPoly>> nullspace_polynomial(const Matrix<MultiPoly>& a, const Deadline* dl = nullptr);

Rational determinant(const Matrix<Rational>& a);

}  // namespace expmath
