#pragma once

#include <string>

#include "expmath/gosper/limit.hpp"
#include "expmath/gosper/summand.hpp"

namespace expmath {

struct TailOptions {
    int max_degree = 6;
    long precision = 120;  // working digits for the tail values (doubled once on failure)
};

// F minus the basis series weighted by the limit's coefficients (the constant "1" is dropped).
SummandSpec subtract_basis_series(const SummandSpec& f, const LimitGuess& limit);

// Closed form T with T(N-1) - T(N) = G(N), G = subtract_basis_series(f, limit).
// Throws NotFound tagged with the failing stage (basis, ratio, numerator, verify).
ClosedForm guess_tail(const SummandSpec& f, const LimitGuess& limit, const TailOptions& opt = {});

struct GosperResult {
    LimitGuess limit;
    SummandSpec reduced;  // G
    RatFunc ratio;        // T(N) / T(N-1)
    ClosedForm tail;
    TelescopeCheck check;
    std::string limit_tag, ratio_tag, tail_tag;  // PROOF or GUESS

    std::string to_string() const;
    nlohmann::json to_json() const;
};

// guess_limit, guess_tail and the telescoping proof.
GosperResult gosper_sum(const SummandSpec& f, const ConstantBasis& basis, const LimitOptions& lopt = {},
                        const TailOptions& topt = {});

}  // namespace expmath
