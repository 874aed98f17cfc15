#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "expmath/errors.hpp"
#include "expmath/exact/rational.hpp"
#include "expmath/exact/unipoly.hpp"

namespace expmath {

// Values x_offset, x_{offset+1}, ...
struct SequenceSample {
    long offset = 0;
    std::vector<Rational> values;

    std::size_t size() const { return values.size(); }
    long end() const { return offset + static_cast<long>(values.size()); }  // one past the last index
    const Rational& at(long n) const;
    SequenceSample slice(long from, long to) const;  // indices [from, to)
};

SequenceSample read_sequence(std::istream& in);  // one value per line; '#' comments; "# offset k" sets offset
void write_sequence(std::ostream& out, const SequenceSample& s);

// sum_{i=0}^{I} c_i(n) x_{n+i} = 0
class RecurrenceOperator {
public:
    RecurrenceOperator() = default;
    explicit RecurrenceOperator(std::vector<UniPoly> coeffs, std::string var = "n");

    int order() const { return static_cast<int>(c_.size()) - 1; }
    int degree() const;
    const std::vector<UniPoly>& coeffs() const { return c_; }
    const UniPoly& coeff(int i) const { return c_.at(i); }
    const std::string& var() const { return var_; }

    // Content-free with positive leading rational coefficient of c_I.
    RecurrenceOperator normalized() const;
    // c_i(n) -> c_i(n + s)
    RecurrenceOperator shift_argument(long s) const;
    // sum_i c_i(n) x_{n+i}
    Rational apply(const SequenceSample& x, long n) const;

    // "(c_I(n))*N^I + ... + (c_0(n))"
    std::string to_string() const;
    nlohmann::json to_json() const;
    static RecurrenceOperator from_json(const nlohmann::json& j);
    // Accepts the text format above, plain "-N^2 + 3N - 1", and an optional "0=" prefix / "x_n" suffix.
    static RecurrenceOperator parse(const std::string& text, const std::string& var = "n");

    bool operator==(const RecurrenceOperator& o) const { return var_ == o.var_ && c_ == o.c_; }

private:
    std::vector<UniPoly> c_;
    std::string var_ = "n";
};

class SingularPoint : public InvalidInput {
public:
    explicit SingularPoint(long n)
        : InvalidInput("SingularPoint", "leading coefficient vanishes at n = " + std::to_string(n)), n_(n) {}
    long n() const { return n_; }

private:
    long n_;
};

class InsufficientData : public InvalidInput {
public:
    explicit InsufficientData(const std::string& what) : InvalidInput("InsufficientData", what) {}
};

struct VerifyResult {
    bool pass = true;
    long first_bad = 0;  // meaningful when !pass
};

VerifyResult verify(const RecurrenceOperator& op, const SequenceSample& data);

// Generates `count` values; the first I are `initial`.
SequenceSample unroll(const RecurrenceOperator& op, const SequenceSample& initial, std::size_t count);

bool operators_equal_up_to_unit(const RecurrenceOperator& a, const RecurrenceOperator& b);

// Smallest |s| <= range (ties: negative first) such that op.shift_argument(s) verifies on data.
std::optional<long> verifying_shift(const RecurrenceOperator& op, const SequenceSample& data, long range = 2);

struct GuessOptions {
    int margin = 10;  // held-out equations
    bool modular_precheck = true;
};

// Searches (I, J) by increasing I + J, then increasing I. Throws NotFound / InsufficientData.
RecurrenceOperator guess_recurrence(const SequenceSample& data, int max_order, int max_degree,
                                    const GuessOptions& opt = {});
// One fixed (I, J) attempt; empty when only the zero solution exists.
std::optional<RecurrenceOperator> guess_recurrence_exact(const SequenceSample& data, int order, int degree,
                                                         const GuessOptions& opt = {});

}  // namespace expmath
