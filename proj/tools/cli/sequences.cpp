#include <random>

#include "common.hpp"

namespace cli {

using namespace expmath;

namespace {

struct SeqInput {
    std::string file, values;
    long offset = 0;
    void add(CLI::App* app) {
        app->add_option("--file", file, "Sequence file, one value per line ('-' reads stdin)");
        app->add_option("--values", values, "Inline values, comma separated");
        app->add_option("--offset", offset, "Index of the first value");
    }
    SequenceSample load() const { return load_sequence(file, values, offset); }
};

RecurrenceOperator load_operator(const std::string& text, const std::string& json_arg) {
    if (text.empty() == json_arg.empty()) throw InvalidInput("give exactly one of --op and --op-json");
    return text.empty() ? RecurrenceOperator::from_json(load_json(json_arg)) : RecurrenceOperator::parse(text);
}

SequenceSample catalan(int count) {
    SequenceSample s;
    for (int n = 0; n < count; ++n) s.values.push_back(make_rational(binomial(2 * n, n), n + 1));
    return s;
}

}  // namespace

void add_sequence_commands(CLI::App& app, Globals& g, Registry& reg) {
    {
        struct Opts {
            SeqInput in;
            int max_order = 4, max_degree = 4, margin = 10;
            std::string format = "text";
        };
        auto o = std::make_shared<Opts>();
        auto& c = new_command(app, reg, "guess", "Guess a polynomial-coefficient recurrence from sequence data");
        o->in.add(c.app);
        c.app->add_option("--max-order", o->max_order, "Largest order I")->check(CLI::PositiveNumber);
        c.app->add_option("--max-degree", o->max_degree, "Largest coefficient degree J")->check(CLI::NonNegativeNumber);
        c.app->add_option("--margin", o->margin, "Held-out equations")->check(CLI::NonNegativeNumber);
        c.app->add_option("--format", o->format)->check(CLI::IsMember({"text", "json"}));
        c.run = [o](std::ostream& out) {
            auto data = o->in.load();
            GuessOptions opt;
            opt.margin = o->margin;
            auto op = guess_recurrence(data, o->max_order, o->max_degree, opt).normalized();
            if (o->format == "json") {
                auto j = op.to_json();
                j["text"] = op.to_string();
                j["terms"] = data.size();
                out << j.dump(2) << "\n";
            } else {
                out << op.to_string() << "\n";
            }
            return 0;
        };
        c.checks = [] {
            auto op = guess_recurrence(catalan(40), 2, 2);
            std::vector<Rational> pow2;
            for (int n = 0; n < 30; ++n) pow2.push_back(Rational(ipow(Integer(2), n)));
            return std::vector<Check>{
                {"Catalan numbers give (n+2)N - (4n+2)",
                 operators_equal_up_to_unit(op, RecurrenceOperator::parse("(n+2)*N - (4*n+2)"))},
                {"powers of two give N - 2",
                 operators_equal_up_to_unit(guess_recurrence(SequenceSample{0, pow2}, 1, 0), RecurrenceOperator::parse("N - 2"))},
            };
        };
    }
    {
        struct Opts {
            std::string op, op_json, initial;
            long count = 20, offset = 0;
            std::string format = "text";
        };
        auto o = std::make_shared<Opts>();
        auto& c = new_command(app, reg, "unroll", "Generate terms of a sequence from a recurrence and initial values");
        c.app->add_option("--op", o->op, "Operator text, e.g. \"(n+2)*N - (4*n+2)\"");
        c.app->add_option("--op-json", o->op_json, "Operator as JSON (path or inline)");
        c.app->add_option("--initial", o->initial, "Initial values, comma separated");
        c.app->add_option("--count", o->count, "Number of terms")->check(CLI::PositiveNumber);
        c.app->add_option("--offset", o->offset, "Index of the first initial value");
        c.app->add_option("--format", o->format)->check(CLI::IsMember({"text", "json"}));
        c.run = [o](std::ostream& out) {
            auto op = load_operator(o->op, o->op_json);
            if (o->initial.empty()) throw InvalidInput("--initial is required");
            auto init = load_sequence("", o->initial, o->offset);
            auto s = unroll(op, init, static_cast<std::size_t>(o->count));
            if (o->format == "json") {
                nlohmann::json j{{"offset", s.offset}, {"values", nlohmann::json::array()}};
                for (auto& v : s.values) j["values"].push_back(to_string(v));
                out << j.dump(2) << "\n";
            } else {
                write_sequence(out, s);
            }
            return 0;
        };
        c.checks = [&g] {
            auto fib = unroll(RecurrenceOperator::parse("N^2 - N - 1"), SequenceSample{0, {0, 1}}, 11);
            // a random first-order operator unrolled and guessed back
            std::mt19937_64 rng(g.seed);
            auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
            RecurrenceOperator op({UniPoly({Rational(pick(1, 5)), Rational(pick(1, 4))}, "n"),
                                   UniPoly({Rational(pick(1, 5)), Rational(1)}, "n")});
            auto s = unroll(op, SequenceSample{0, {1}}, 30);
            return std::vector<Check>{
                {"Fibonacci from N^2 - N - 1", fib.values.back() == 55},
                {"guess recovers a random first-order operator (seed " + std::to_string(g.seed) + ")",
                 operators_equal_up_to_unit(guess_recurrence(s, 1, 1), op)},
            };
        };
    }
    {
        struct Opts {
            std::string op, op_json;
            SeqInput in;
            long shift_range = 0;
            std::string format = "text";
        };
        auto o = std::make_shared<Opts>();
        auto& c = new_command(app, reg, "verify", "Check a recurrence against sequence data (exit 1 on FAIL)");
        c.app->add_option("--op", o->op, "Operator text");
        c.app->add_option("--op-json", o->op_json, "Operator as JSON (path or inline)");
        o->in.add(c.app);
        c.app->add_option("--shift-range", o->shift_range, "On failure, also try n -> n+s for |s| up to this")
            ->check(CLI::NonNegativeNumber);
        c.app->add_option("--format", o->format)->check(CLI::IsMember({"text", "json"}));
        c.run = [o](std::ostream& out) {
            auto op = load_operator(o->op, o->op_json);
            auto data = o->in.load();
            auto r = verify(op, data);
            std::optional<long> shift;
            if (!r.pass && o->shift_range > 0) shift = verifying_shift(op, data, o->shift_range);
            if (o->format == "json") {
                nlohmann::json j{{"status", r.pass ? "PASS" : "FAIL"}};
                if (!r.pass) j["first_bad"] = r.first_bad;
                if (shift) j["verifying_shift"] = *shift;
                out << j.dump(2) << "\n";
            } else {
                out << (r.pass ? "PASS" : "FAIL at n=" + std::to_string(r.first_bad)) << "\n";
                if (shift) out << "passes after n -> n" << (*shift < 0 ? "" : "+") << *shift << "\n";
            }
            return r.pass ? 0 : 1;
        };
        c.checks = [] {
            auto cat = catalan(30);
            return std::vector<Check>{
                {"Catalan passes (n+2)N - (4n+2)", verify(RecurrenceOperator::parse("(n+2)*N - (4*n+2)"), cat).pass},
                {"Catalan fails N - 2", !verify(RecurrenceOperator::parse("N - 2"), cat).pass},
            };
        };
    }
}

}  // namespace cli
