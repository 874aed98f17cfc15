#pragma once

#include <functional>
#include <vector>

#include "expmath/deadline.hpp"
#include "expmath/exact/multipoly.hpp"
#include "expmath/exact/rational.hpp"
#include "expmath/exact/unipoly.hpp"

namespace expmath {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Ring hooks used by the fraction-free eliminator.
inline bool ring_is_zero(const Integer& a) { return a == 0; }
inline bool ring_is_zero(const MultiPoly& a) { return a.is_zero(); }
inline bool ring_is_zero(const UniPoly& a) { return a.is_zero(); }
inline std::size_t ring_cost(const Integer& a) { return mpz_sizeinbase(a.get_mpz_t(), 2); }
inline std::size_t ring_cost(const MultiPoly& a) {
    std::size_t c = 0;
    for (const auto& [e, v] : a.terms()) c += 1 + mpz_sizeinbase(v.get_num().get_mpz_t(), 2) / 64;
    return c * 64 + static_cast<std::size_t>(a.total_degree());
}
inline Integer ring_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
inline MultiPoly ring_div(const MultiPoly& a, const MultiPoly& b) { return exact_div(a, b); }
inline Integer ring_one(const Integer&) { return 1; }
inline MultiPoly ring_one(const MultiPoly& like) { return MultiPoly(Rational(1), like.vars()); }

template <class R>
struct ReducedForm {
    Matrix<R> m;
    std::vector<int> pivot_rows;  // original row index of the i-th pivot
    std::vector<int> pivot_cols;
    R det;  // every pivot equals this value at the end
    int swaps = 0;
};

// Fraction-free Gauss-Jordan (Bareiss update applied to all other rows). Pivots are searched
// only in the first pivot_limit columns; later columns ride along (augmented part).
template <class R>
ReducedForm<R> fraction_free_reduce(Matrix<R> a, std::size_t pivot_limit, const Deadline* dl = nullptr) {
    ReducedForm<R> out;
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::vector<int> perm(rows);
    for (std::size_t i = 0; i < rows; ++i) perm[i] = static_cast<int>(i);
    R prev = rows ? ring_one(a[0].empty() ? R() : a[0][0]) : R();
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_limit && r < rows; ++c) {
        check_deadline(dl, "elimination");
        std::size_t best = rows;
        std::size_t best_cost = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (ring_is_zero(a[i][c])) continue;
            std::size_t cost = ring_cost(a[i][c]);
            if (best == rows || cost < best_cost) {
                best = i;
                best_cost = cost;
            }
        }
        if (best == rows) continue;
        if (best != r) {
            std::swap(a[best], a[r]);
            std::swap(perm[best], perm[r]);
            ++out.swaps;
        }
        const R piv = a[r][c];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const R f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == c) continue;
                if (ring_is_zero(f)) {
                    if (!ring_is_zero(a[i][j])) a[i][j] = ring_div(R(piv * a[i][j]), prev);
                } else {
                    a[i][j] = ring_div(R(piv * a[i][j] - f * a[r][j]), prev);
                }
            }
            a[i][c] = R();
            if constexpr (std::is_same_v<R, MultiPoly>) a[i][c] = MultiPoly(piv.vars());
        }
        prev = piv;
        out.pivot_rows.push_back(perm[r]);
        out.pivot_cols.push_back(static_cast<int>(c));
        ++r;
    }
    out.det = prev;
    out.m = std::move(a);
    // rows are permuted: row i of m corresponds to original row perm[i]
    return out;
}

}  // namespace expmath
