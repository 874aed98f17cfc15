#pragma once

#include <set>
#include <vector>

#include "json.hpp"

#include "expmath/errors.hpp"
#include "expmath/exact/rational.hpp"
#include "expmath/recurrence/recurrence.hpp"

namespace expmath {

// Allowed child counts of internal vertices. Leaves are always allowed.
struct DegreeSet {
    std::set<long> S;
    void validate() const;
    long max() const { return *S.rbegin(); }
};

class ZeroPopulation : public InvalidInput {
public:
    explicit ZeroPopulation(long n)
        : InvalidInput("ZeroPopulation", "no trees with " + std::to_string(n) + " vertices") {}
};

// f_0..f_N from f = x (1 + sum_{i in S} f^i)
SequenceSample tree_counts(const DegreeSet& S, long N);

// coeffs[n][r] = [z^r] P_n(1+z), where P_n(y) = sum over n-vertex trees of y^{total height}.
struct HeightSeries {
    long N = 0;
    int k = 0;
    std::vector<std::vector<Integer>> coeffs;

    const Integer& count(long n) const { return coeffs.at(n).at(0); }
    // F_r(n) = r! [z^r] P_n(1+z), the r-th factorial moment numerator
    Integer factorial_numerator(long n, int r) const;
    // Full P_n(y), coefficient vector in y. Needs k >= deg P_n.
    std::vector<Integer> height_polynomial(long n) const;
};

HeightSeries height_series(const DegreeSet& S, long N, int k);

struct MomentRow {
    long n = 0;
    Rational mean;
    std::vector<Rational> straight;  // E[X^i], i = 0..k
    std::vector<Rational> central;   // m_i, i = 0..k
    std::vector<double> alpha;       // alpha_i = m_i / m_2^{i/2}; empty when m_2 = 0
    nlohmann::json to_json() const;
};

MomentRow moments(const HeightSeries& hs, long n);

struct AlphaLimit {
    double value = 0;
    double error = 0;  // difference between the last two extrapolation levels
    std::vector<long> grid;
    std::vector<double> samples;
    nlohmann::json to_json() const;
};

// Richardson extrapolation in h = n^{-1/2} of alpha_i over grid (every f_n must be positive).
AlphaLimit alpha_limit_estimate(const HeightSeries& hs, int i, const std::vector<long>& grid);
// Geometric grid ending at the largest n <= N with trees: about N, N/2, N/4, ...
std::vector<long> default_grid(const HeightSeries& hs, int levels = 5);

// Limits of alpha_3..alpha_9 for the Brownian excursion area, for comparison.
double universal_alpha(int i);

}  // namespace expmath
