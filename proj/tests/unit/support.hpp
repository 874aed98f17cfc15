#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "expmath/exact/multipoly.hpp"
#include "expmath/exact/ratfunc.hpp"
#include "expmath/exact/unipoly.hpp"

namespace testing_support {

using namespace expmath;

inline std::uint64_t seed() {
    const char* s = std::getenv("EXPMATH_SEED");
    return s ? std::strtoull(s, nullptr, 10) : 1;
}

class Gen {
public:
    explicit Gen(std::uint64_t salt = 0) : rng_(seed() * 1000003ULL + salt) {}

    long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return range(0, 1) == 1; }

    Rational rational(long mag = 20) {
        long den = range(1, mag);
        return make_rational(range(-mag, mag), den);
    }
    Rational nonzero_rational(long mag = 20) {
        Rational r;
        do r = rational(mag);
        while (r == 0);
        return r;
    }
    UniPoly unipoly(int max_deg, const std::string& var = "x", long mag = 9) {
        int d = static_cast<int>(range(0, max_deg));
        std::vector<Rational> c(d + 1);
        for (auto& x : c) x = rational(mag);
        return UniPoly(c, var);
    }
    MultiPoly multipoly(const std::vector<std::string>& vars, int max_deg, int terms, long mag = 9) {
        MultiPoly p(vars);
        for (int t = 0; t < terms; ++t) {
            Exponents e(vars.size());
            int left = static_cast<int>(range(0, max_deg));
            for (auto& x : e) {
                x = static_cast<int>(range(0, left));
                left -= x;
            }
            p.add_term(e, rational(mag));
        }
        return p;
    }
    RatFunc ratfunc(const std::vector<std::string>& vars) {
        MultiPoly d;
        do d = multipoly(vars, 2, 3);
        while (d.is_zero());
        return RatFunc(multipoly(vars, 2, 3), d);
    }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace testing_support
