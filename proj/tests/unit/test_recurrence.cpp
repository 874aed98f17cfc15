#include <sstream>

#include "doctest.h"
#include "expmath/exact/parse.hpp"
#include "expmath/recurrence/recurrence.hpp"
#include "support.hpp"

using namespace expmath;
using testing_support::Gen;

namespace {

SequenceSample seq(std::vector<Rational> v, long offset = 0) {
    SequenceSample s;
    s.offset = offset;
    s.values = std::move(v);
    return s;
}

SequenceSample catalan(int count) {
    SequenceSample s;
    for (int n = 0; n < count; ++n) s.values.push_back(make_rational(binomial(2 * n, n), n + 1));
    return s;
}

// Motzkin numbers by their defining convolution M_{n+1} = M_n + sum M_k M_{n-1-k}.
SequenceSample motzkin(int count) {
    std::vector<Integer> m{1};
    while (static_cast<int>(m.size()) < count) {
        long n = static_cast<long>(m.size()) - 1;
        Integer v = m[n];
        for (long k = 0; k <= n - 1; ++k) v += m[k] * m[n - 1 - k];
        m.push_back(v);
    }
    SequenceSample s;
    for (const auto& x : m) s.values.push_back(Rational(x));
    return s;
}

RecurrenceOperator op(const std::string& text) { return RecurrenceOperator::parse(text); }

}  // namespace

TEST_CASE("guess_recurrence: powers of two") {
    std::vector<Rational> v;
    for (int n = 0; n < 30; ++n) v.push_back(Rational(ipow(2, n)));
    auto g = guess_recurrence(seq(v), 1, 0);
    CHECK(g.order() == 1);
    CHECK(operators_equal_up_to_unit(g, op("N - 2")));
}

TEST_CASE("guess_recurrence: Catalan against the binomial formula") {
    SequenceSample c = catalan(50);
    auto g = guess_recurrence(c, 1, 1);
    CHECK(operators_equal_up_to_unit(g, op("(n+2)*N - (4*n+2)")));
    CHECK(verify(g, c).pass);
}

TEST_CASE("guess_recurrence: Motzkin operator matches the displayed form after a shift") {
    SequenceSample m = motzkin(60);
    auto g = guess_recurrence(m, 2, 1);
    CHECK(g.order() == 2);
    CHECK(verify(g, m).pass);
    // displayed form (n+2) M_{n+2} = (2n+1) M_{n+1} + (3n-3) M_n uses a different index origin
    RecurrenceOperator shown = op("(n+2)*N^2 - (2*n+1)*N - (3*n-3)");
    CHECK_FALSE(verify(shown, m).pass);
    auto s = verifying_shift(shown, m);
    REQUIRE(s.has_value());
    CHECK(*s == 2);
    CHECK(operators_equal_up_to_unit(g, shown.shift_argument(*s)));
}

TEST_CASE("guess_recurrence error cases") {
    CHECK_THROWS_AS(guess_recurrence(catalan(5), 1, 1), InsufficientData);
    // a sequence with no low-order description
    Gen g(21);
    std::vector<Rational> noise;
    for (int i = 0; i < 40; ++i) noise.push_back(g.rational(1000));
    CHECK_THROWS_AS(guess_recurrence(seq(noise), 1, 1), NotFound);
}

TEST_CASE("unroll examples") {
    auto s = unroll(op("N - 2"), seq({1}), 5);
    CHECK(s.values == std::vector<Rational>{1, 2, 4, 8, 16});
    auto f = unroll(op("N^2 - N - 1"), seq({0, 1}), 10);
    CHECK(f.values == std::vector<Rational>{0, 1, 1, 2, 3, 5, 8, 13, 21, 34});
    auto g = guess_recurrence(catalan(30), 1, 1);
    auto c = unroll(g, seq({1}), 30);
    CHECK(c.values == catalan(30).values);
    CHECK_THROWS_AS(unroll(op("(n-3)*N - 1"), seq({1}), 10), SingularPoint);
}

TEST_CASE("verify examples") {
    std::vector<Rational> v;
    for (int n = 0; n < 20; ++n) v.push_back(Rational(ipow(2, n)));
    CHECK(verify(op("N-2"), seq(v)).pass);
    auto r = verify(op("N-3"), seq(v, 4));
    CHECK_FALSE(r.pass);
    CHECK(r.first_bad == 4);
}

TEST_CASE("operators_equal_up_to_unit examples") {
    CHECK(operators_equal_up_to_unit(op("N-2"), op("2*N-4")));
    CHECK_FALSE(operators_equal_up_to_unit(op("N-2"), op("N-3")));
    CHECK(operators_equal_up_to_unit(op("0=(-N^2 + 3N - 1)x_n"), op("N^2 - 3N + 1")));
}

TEST_CASE("text and json forms round trip") {
    RecurrenceOperator a = op("(n+2)*N - (4*n+2)").normalized();
    CHECK(a.to_string() == "(n + 2)*N + (-4*n - 2)");
    CHECK(RecurrenceOperator::parse(a.to_string()) == a);
    CHECK(RecurrenceOperator::from_json(a.to_json()) == a);
    std::stringstream ss;
    write_sequence(ss, seq({1, Rational(1, 2), -3}, 2));
    auto back = read_sequence(ss);
    CHECK(back.offset == 2);
    CHECK(back.values == std::vector<Rational>{1, Rational(1, 2), -3});
}

TEST_CASE("property: normalization is idempotent") {
    Gen g(22);
    for (int t = 0; t < 100; ++t) {
        int I = static_cast<int>(g.range(0, 3));
        std::vector<UniPoly> cs;
        for (int i = 0; i <= I; ++i) cs.push_back(g.unipoly(3, "n"));
        if (cs.back().is_zero()) cs.back() = UniPoly(Rational(1), "n");
        RecurrenceOperator o(cs);
        CHECK(o.normalized().normalized() == o.normalized());
        CHECK(operators_equal_up_to_unit(o, RecurrenceOperator(cs) .normalized()));
    }
}

TEST_CASE("property: guess/unroll round trip on random operators") {
    Gen g(23);
    for (int t = 0; t < 12; ++t) {
        int I = static_cast<int>(g.range(1, 3)), J = static_cast<int>(g.range(0, 2));
        std::vector<UniPoly> cs;
        for (int i = 0; i < I; ++i) {
            std::vector<Rational> c(J + 1);
            for (auto& x : c) x = g.range(-6, 6);
            cs.push_back(UniPoly(c, "n"));
        }
        // leading coefficient with roots at negative integers only, so it never vanishes on n >= 0
        UniPoly lead(Rational(g.range(1, 3)), "n");
        for (int j = 0; j < J; ++j) lead *= UniPoly({Rational(g.range(1, 5)), 1}, "n");
        cs.push_back(lead);
        RecurrenceOperator truth(cs);
        SequenceSample init;
        for (int i = 0; i < I; ++i) init.values.push_back(g.range(-9, 9));
        if (std::all_of(init.values.begin(), init.values.end(), [](const Rational& x) { return x == 0; }))
            init.values[0] = 1;
        long enough = (I + 1) * (J + 1) + I + 10 + 8;
        SequenceSample all = unroll(truth, init, enough + 200);
        SequenceSample head = all.slice(0, enough);
        auto guessed = guess_recurrence(head, 3, 2);
        CHECK(verify(guessed, head).pass);
        CHECK(verify(guessed, all).pass);
    }
}
