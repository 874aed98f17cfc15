#pragma once

#include <vector>

#include "json.hpp"

#include "expmath/errors.hpp"
#include "expmath/exact/rational.hpp"
#include "expmath/recurrence/recurrence.hpp"

namespace expmath {

// Unit steps E=(1,0), N=(0,1) from (0,0) to (b n, a n), every visited point with b*y <= a*x.
struct SlopeProblem {
    long a = 1, b = 1, n = 1;
    void validate() const;
};

// Unit steps in x, y, z with a*x <= b*y <= c*z throughout, ending at (bc n, ac n, ab n).
struct Slope3DProblem {
    long a = 1, b = 1, c = 1, n = 1;
    void validate() const;
};

Integer count_2d(const SlopeProblem& prob);
// A_{a,b,1..N}, offset 1. One DP sweep serves every n since the region does not depend on n.
SequenceSample count_2d_series(long a, long b, long N);

Integer count_3d(const Slope3DProblem& prob);
SequenceSample count_3d_series(long a, long b, long c, long N);
// Number of unrestricted paths to the 3D endpoint.
Integer total_3d(long a, long b, long c, long n);

// Entry k counts unrestricted paths (0,0) -> (b n, a n) with exactly k steps whose midpoint lies
// strictly above y = (a/b) x. Sums to binomial((a+b)n, an).
std::vector<Integer> time_above_histogram(long a, long b, long n);

class IllConditioned : public InvalidInput {
public:
    explicit IllConditioned(const std::string& what) : InvalidInput("IllConditioned", what) {}
};

// A_n / binomial((a+b)n, an) ~ alpha/n + beta/n^2 + gamma/n^3 + delta/n^4
struct FitResult {
    double alpha = 0, beta = 0, gamma = 0, delta = 0;
    double alpha_half = 0;  // refit on the first half of the data
    double stability = 0;   // |alpha_half - alpha| / |alpha|
    long gcd = 1;
    long terms = 0;
    // alpha * gcd(a, b): the constant for the reduced slope, which is what tables of the slope quote
    double alpha_reduced() const { return alpha * static_cast<double>(gcd); }
    nlohmann::json to_json() const;
};

FitResult fit_alpha(const SequenceSample& series, long a, long b);

// count / total ~ C n^{-e}; returns e from a log-log regression over the second half of the data.
double fit_exponent_3d(const SequenceSample& series, long a, long b, long c);

}  // namespace expmath
