#include <map>

#include "doctest.h"
#include "support.hpp"

#include "expmath/exact/parse.hpp"
#include "expmath/gosper/tail.hpp"

using namespace expmath;
using testing_support::Gen;

namespace {

SummandSpec summand(const std::string& rational, std::vector<FactorialAtom> facts,
                    std::vector<GeometricAtom> geos = {}, long start = 0) {
    SummandSpec s;
    s.geometrics = std::move(geos);
    s.rational = parse_ratfunc(rational, s.vars());
    s.factorials = std::move(facts);
    s.start = start;
    return s;
}

SummandSpec monthly() { return summand("1/(n^4+n^2+1)", {{1, 0, -1}}); }
SummandSpec cosh_example() { return summand("n^2+1", {{2, 0, -1}}); }
SummandSpec stress() {
    return summand(
        "(36n^9-126n^8+489n^7-1343n^6+1633n^5-784n^4-582n^3-310n^2-735n+237)/"
        "((n^3-2n^2+11n-3)*(n^3+n^2+10n+7))",
        {{2, 0, -1}});
}
SummandSpec multibasic() {
    return summand(
        "-1/4*(4*t^2*n^2 + 2*n*t^3 - t^4 + 3*n*t^2 + 2*n*t + 4*n^2 - t^3 - 7*t^2 - 4*t - 12)/"
        "((t^2/4+1)*(t^2+1))",
        {{1, 0, -1}}, {{"t", Rational(2)}});
}

// closed form from text in N and symbols with factorial carrier
ClosedForm closed(const std::string& num, const std::string& den, std::map<long, int> facts,
                  std::vector<GeometricAtom> geos = {}) {
    ClosedForm c;
    c.geometrics = geos;
    auto vars = c.vars();
    c.num = parse_multipoly(num, vars);
    c.den = parse_multipoly(den, vars);
    c.factorials = facts;
    return c;
}

bool same_values(const ClosedForm& a, const std::function<Rational(long)>& b, long from, long count) {
    for (long N = from; N < from + count; ++N)
        if (a.eval(N) != b(N)) return false;
    return true;
}

}  // namespace

TEST_CASE("partial sums") {
    auto s = partial_sums(summand("1/t", {}, {{"t", Rational(2)}}), 4);
    CHECK(s.values == std::vector<Rational>{1, make_rational(3, 2), make_rational(7, 4), make_rational(15, 8)});
    auto h = partial_sums(summand("1/(n*(n+1))", {}, {}, 1), 3);
    CHECK(h.values == std::vector<Rational>{make_rational(1, 2), make_rational(2, 3), make_rational(3, 4)});
    CHECK_THROWS_AS(partial_sums(summand("1/(n-2)", {}), 5), PoleInRange);

    // independent summation over a common integer denominator
    auto m = partial_sums(monthly(), 20);
    Integer num = 0, den = 1;
    for (long n = 0; n < 20; ++n) {
        Integer d = (Integer(n) * n * n * n + Integer(n) * n + 1) * factorial(n);
        num = num * d + den;
        den *= d;
        CHECK(m.values[n] == make_rational(num, den));
    }
}

TEST_CASE("rational summand limits") {
    auto g = guess_limit(summand("1/(n*(n+1))", {}, {}, 1), make_basis({"1"}));
    CHECK(g.exact);
    CHECK(g.coefficient("1") == 1);
    auto g2 = guess_limit(summand("1/((n+1)*(n+3))", {}, {}, 0), make_basis({"1"}));
    CHECK(g2.exact);
    CHECK(g2.coefficient("1") == make_rational(3, 4));
    CHECK_THROWS_AS(guess_limit(summand("1/(n+1)^2", {}), make_basis({"1"})), SlowConvergence);
}

TEST_CASE("limit guessing") {
    auto geo = guess_limit(summand("1/t", {}, {{"t", Rational(2)}}), make_basis({"1"}));
    CHECK(geo.coefficient("1") == 2);
    auto c = guess_limit(cosh_example(), make_basis({"cosh(1)", "sinh(1)"}));
    CHECK(c.coefficient("cosh(1)") == make_rational(5, 4));
    CHECK(c.coefficient("sinh(1)") == make_rational(1, 4));
    auto st = guess_limit(stress(), default_basis(stress()));
    CHECK(st.coefficient("cosh(1)") == -11);
    CHECK(st.coefficient("sinh(1)") == 0);
    CHECK(st.coefficient("1") == 0);
    auto mo = guess_limit(monthly(), default_basis(monthly()));
    CHECK(mo.coefficient("e") == make_rational(1, 2));

    LimitOptions p1, p2;
    p1.precision = 30;
    p2.precision = 60;
    for (const auto& f : {cosh_example(), monthly(), multibasic()}) {
        auto a = guess_limit(f, default_basis(f), p1), b = guess_limit(f, default_basis(f), p2);
        CHECK(a.terms == b.terms);
    }
}

TEST_CASE("integer relations and reconstruction") {
    CHECK(best_rational(make_rational(Integer("314159265358979", 10), Integer("100000000000000", 10)), 1000) ==
          make_rational(355, 113));
    std::vector<Rational> v{basis_constant("e").value(60) * Rational(3, 7) + Rational(2),
                            basis_constant("1").value(60), basis_constant("e").value(60)};
    auto rel = integer_relation(v, 50, Integer(1000000));
    REQUIRE(rel);
    CHECK((*rel)[0] == 7);
    CHECK((*rel)[1] == -14);
    CHECK((*rel)[2] == -3);
}

TEST_CASE("telescoping verification") {
    std::vector<GeometricAtom> two{{"t", Rational(2)}};
    SummandSpec geo = summand("1/t", {}, two);
    CHECK(verify_telescoping(closed("2", "t", {}, two), geo, TailConvention::From).proof);
    auto wrong = verify_telescoping(closed("2", "t", {}, two), geo, TailConvention::After);
    CHECK_FALSE(wrong.proof);
    CHECK(wrong.refuted_at == 0);
    CHECK(verify_telescoping(closed("1", "t", {}, two), geo).proof);

    // monthly problem: F - e/2 telescopes with T = -(1+N)/(2(N^2+N+1) N!)
    SummandSpec g = summand("(1-n^2-n^4)/(2n^4+2n^2+2)", {{1, 0, -1}});
    CHECK(verify_telescoping(closed("-(1+N)", "2*(N^2+N+1)", {{1, -1}}), g).proof);
    CHECK_FALSE(verify_telescoping(closed("(1+N)", "2*(N^2+N+1)", {{1, -1}}), g).proof);

    // multibasic: the displayed form pairs with the series 1/(n-1)! for e
    SummandSpec shifted = combine(multibasic(), 1, summand("1", {{1, -1, -1}}), -1);
    auto paper = closed("-(t+N+3+t^2)", "t^2+1", {{1, -1}}, two);
    CHECK(verify_telescoping(paper, shifted).proof);
}

TEST_CASE("atom rewrite soundness") {
    Gen gen(21);
    std::vector<GeometricAtom> geos{{"t", make_rational(3, 2)}};
    for (int trial = 0; trial < 5; ++trial) {
        MultiPoly p = gen.multipoly({"N", "t"}, 3, 4);
        MultiPoly b = shift_back(p, "N", geos);
        for (int k = 0; k < 30; ++k) {
            long N = gen.range(-10, 20);
            Rational direct = p.eval({{"N", N - 1}, {"t", rpow(make_rational(3, 2), N - 1)}});
            CHECK(b.eval({{"N", N}, {"t", rpow(make_rational(3, 2), N)}}) == direct);
        }
    }
}

TEST_CASE("tails of the worked examples") {
    auto ch = gosper_sum(cosh_example(), make_basis({"cosh(1)", "sinh(1)"}));
    CHECK(ch.tail_tag == "PROOF");
    CHECK(ch.limit_tag == "PROOF");
    CHECK(same_values(ch.tail, [](long N) { return make_rational(Integer(N + 1), 2 * factorial(2 * N + 1)); }, 0, 30));

    auto mo = gosper_sum(monthly(), default_basis(monthly()));
    CHECK(mo.limit.coefficient("e") == make_rational(1, 2));
    CHECK(same_values(mo.tail, [](long N) {
        return Rational(-make_rational(Integer(N + 1), 2 * (Integer(N) * N + N + 1) * factorial(N)));
    }, 0, 30));

    auto st = gosper_sum(stress(), default_basis(stress()));
    CHECK(same_values(st.tail, [](long N) {
        Integer n(N);
        return make_rational(9 * n * n * n * n + 3 * n * n + 2, (n * n * n + n * n + 10 * n + 7) * factorial(2 * N));
    }, 0, 30));

    auto mb = gosper_sum(multibasic(), default_basis(multibasic()));
    CHECK(mb.limit.to_string() == "e");
    CHECK(mb.tail_tag == "PROOF");
    CHECK(same_values(mb.tail, [](long N) {
        Integer t = ipow(Integer(2), N);
        return make_rational(-(t + N + 2), (t * t + 1) * factorial(N));
    }, 0, 30));

    auto tel = gosper_sum(summand("1/(n*(n+1))", {}, {}, 1), make_basis({"1"}));
    CHECK(same_values(tel.tail, [](long N) { return make_rational(1, N + 1); }, 1, 30));
}

TEST_CASE("proven tails are consistent with partial sums") {
    for (const auto& f : {cosh_example(), monthly(), multibasic()}) {
        auto r = gosper_sum(f, default_basis(f));
        auto xs = partial_sums(r.reduced, 51);
        // x_N + T(N - 1) is the same for all N
        Rational c = xs.at(f.start + 1) + r.tail.eval(f.start);
        for (long N = f.start + 1; N < f.start + 51; ++N) CHECK(xs.at(N) + r.tail.eval(N - 1) == c);
    }
}

TEST_CASE("property: r(n)/n! telescopes for random polynomials r") {
    Gen g(83);
    for (int t = 0; t < 6; ++t) {
        std::string r = std::to_string(g.range(-9, 9));
        int deg = static_cast<int>(g.range(1, 3));
        for (int d = 1; d <= deg; ++d) r += " + " + std::to_string(d == deg ? g.range(1, 9) : g.range(-9, 9)) + "*n^" + std::to_string(d);
        auto f = summand(r, {{1, 0, -1}});
        INFO("r = ", r);
        auto res = gosper_sum(f, default_basis(f));
        CHECK(res.tail_tag == "PROOF");
        auto xs = partial_sums(res.reduced, 31);
        Rational c = xs.at(1) + res.tail.eval(0);
        for (long N = 1; N < 31; ++N) CHECK(xs.at(N) + res.tail.eval(N - 1) == c);
    }
}

TEST_CASE("a tail with an integer zero") {
    // sum_{n > N} (n^2 - 5n + 8)/n! = 5 (e - sum_{n <= N} 1/n!) + (N - 3)/N!, so T(3) = 0
    auto f = summand("n^2 - 5n + 8", {{1, 0, -1}});
    auto r = gosper_sum(f, default_basis(f));
    CHECK(r.tail_tag == "PROOF");
    CHECK(r.limit.coefficient("e") == 5);
    CHECK(same_values(r.tail, [](long N) { return make_rational(Integer(N - 3), factorial(N)); }, 0, 30));
}
