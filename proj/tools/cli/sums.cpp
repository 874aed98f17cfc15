#include <algorithm>

#include "common.hpp"

#include "expmath/celine/celine.hpp"
#include "expmath/exact/parse.hpp"
#include "expmath/gosper/tail.hpp"

namespace cli {

using namespace expmath;

namespace {

void reject_unknown(const nlohmann::json& j, const std::vector<std::string>& known, const std::string& what) {
    if (!j.is_object()) throw InvalidInput(what + " must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw InvalidInput("unknown key '" + it.key() + "' in " + what);
}

// "fibonacci", "central_trinomial", or an explicit recurrence; "d" raises the terms to a power.
AuxSequence load_aux(const nlohmann::json& j, const std::vector<std::string>& params) {
    if (j.is_string()) {
        auto name = j.get<std::string>();
        if (name == "fibonacci") return AuxSequence::fibonacci();
        if (name == "central_trinomial") return AuxSequence::central_trinomial();
        throw InvalidInput("unknown auxiliary sequence '" + name + "'");
    }
    if (j.contains("name")) {
        reject_unknown(j, {"name", "d"}, "auxiliary sequence");
        auto a = load_aux(j.at("name"), params);
        a.d = j.value("d", 1);
        if (a.d < 1) throw InvalidInput("d must be positive");
        return a;
    }
    return AuxSequence::from_json(j, params);
}

std::vector<Rational> rationals(const nlohmann::json& arr) {
    std::vector<Rational> out;
    for (auto& v : arr) out.push_back(v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>()));
    return out;
}

struct CelineJob {
    ProperHypTerm term;
    std::optional<AuxSequence> aux;
    // nested: outer sum over an inner sequence given by a recurrence
    std::optional<RecurrenceOperator> inner;
    std::vector<Rational> inner_initials;
    int max_I = 4, max_J = 4;
    CelineOptions opt;
};

CelineJob load_celine_job(const nlohmann::json& j) {
    reject_unknown(j, {"term", "aux", "inner", "max_I", "max_J", "verify_terms", "timeout", "window"}, "celine job");
    CelineJob job;
    job.term = ProperHypTerm::from_json(j.at("term"));
    if (j.contains("aux")) job.aux = load_aux(j.at("aux"), job.term.params);
    if (j.contains("inner")) {
        const auto& in = j.at("inner");
        reject_unknown(in, {"operator", "initials", "term", "initial_count"}, "inner sum");
        if (in.contains("operator")) {
            job.inner = RecurrenceOperator::parse(in.at("operator").get<std::string>());
            job.inner_initials = rationals(in.at("initials"));
        } else {
            // the inner sum is itself found by Celine's method
            auto h = ProperHypTerm::from_json(in.at("term"));
            long count = in.value("initial_count", 20L);
            job.inner = search_sum_recurrence(h, nullptr, 4, 4).rational();
            job.inner_initials = direct_sum_terms(h, nullptr, count).values;
        }
    }
    job.max_I = j.value("max_I", 4);
    job.max_J = j.value("max_J", 4);
    job.opt.verify_terms = j.value("verify_terms", 30L);
    job.opt.timeout_s = j.value("timeout", 0.0);
    if (j.contains("window")) {
        const auto& w = j.at("window");
        reject_unknown(w, {"lo", "hi_slope", "hi_offset"}, "window");
        job.opt.window.lo = w.value("lo", 0L);
        job.opt.window.hi_slope = w.value("hi_slope", 1L);
        job.opt.window.hi_offset = w.value("hi_offset", 0L);
        job.opt.window.explicit_bounds = true;
    }
    return job;
}

CelineResult run_celine(const CelineJob& job) {
    if (job.inner) {
        if (job.aux) throw InvalidInput("a nested sum takes no auxiliary sequence");
        return nested_sum(job.term, *job.inner, job.inner_initials, job.max_I, job.max_J, job.opt);
    }
    return search_sum_recurrence(job.term, job.aux ? &*job.aux : nullptr, job.max_I, job.max_J, job.opt);
}

struct GsumJob {
    SummandSpec summand;
    std::vector<std::string> basis;  // empty: chosen from the factorial atoms
    int max_degree = 6;
};

GsumJob load_gsum_job(const nlohmann::json& j) {
    GsumJob job;
    if (!j.contains("summand")) {
        job.summand = SummandSpec::from_json(j);
        return job;
    }
    reject_unknown(j, {"summand", "basis", "max_degree"}, "gsum job");
    job.summand = SummandSpec::from_json(j.at("summand"));
    if (j.contains("basis")) job.basis = j.at("basis").get<std::vector<std::string>>();
    job.max_degree = j.value("max_degree", 6);
    return job;
}

SummandSpec summand_from_text(const std::string& rational, std::vector<FactorialAtom> facts, long start = 0) {
    SummandSpec s;
    s.rational = parse_ratfunc(rational, s.vars());
    s.factorials = std::move(facts);
    s.start = start;
    return s;
}

}  // namespace

void add_sum_commands(CLI::App& app, Globals&, Registry& reg) {
    {
        struct Opts {
            std::string spec, format = "text";
            int max_I = 0, max_J = 0;
            double timeout = -1;
        };
        auto o = std::make_shared<Opts>();
        auto& c = new_command(app, reg, "celine", "Find a recurrence for a sum of hypergeometric terms (Sister Celine)");
        c.app->add_option("--spec", o->spec, "Job JSON: path, '-' or inline");
        c.app->add_option("--max-order", o->max_I, "Override max_I")->check(CLI::PositiveNumber);
        c.app->add_option("--max-degree", o->max_J, "Override max_J")->check(CLI::PositiveNumber);
        c.app->add_option("--timeout", o->timeout, "Seconds per (I, J) attempt")->check(CLI::NonNegativeNumber);
        c.app->add_option("--format", o->format)->check(CLI::IsMember({"text", "json"}));
        c.run = [o](std::ostream& out) {
            if (o->spec.empty()) throw InvalidInput("--spec is required");
            auto job = load_celine_job(load_json(o->spec));
            if (o->max_I) job.max_I = o->max_I;
            if (o->max_J) job.max_J = o->max_J;
            if (o->timeout >= 0) job.opt.timeout_s = o->timeout;
            auto r = run_celine(job);
            if (o->format == "json") {
                auto j = r.report();
                if (!r.has_params()) j["display"] = display_operator(r.rational());
                out << j.dump(2) << "\n";
            } else {
                out << (r.has_params() ? r.op.normalized().to_string() : display_operator(r.rational())) << "\n";
            }
            return 0;
        };
        c.checks = [] {
            auto b = ProperHypTerm::binomial_nk();
            auto fib = AuxSequence::fibonacci();
            auto two = search_sum_recurrence(b, nullptr, 2, 2).rational();
            auto f = search_sum_recurrence(b, &fib, 4, 4).rational();
            auto three = nested_sum(b, two, {1}, 3, 3).rational();
            return std::vector<Check>{
                {"sum of binomials gives N - 2", operators_equal_up_to_unit(two, RecurrenceOperator::parse("N - 2"))},
                {"binomial transform of Fibonacci gives N^2 - 3N + 1",
                 operators_equal_up_to_unit(f, RecurrenceOperator::parse("N^2 - 3*N + 1"))},
                {"nested sum of 2^i binom(n,i) gives N - 3",
                 operators_equal_up_to_unit(three, RecurrenceOperator::parse("N - 3"))},
            };
        };
    }
    {
        struct Opts {
            std::string spec, basis, format = "text";
            long precision = 0;
            int max_degree = 0;
        };
        auto o = std::make_shared<Opts>();
        auto& c = new_command(app, reg, "gsum",
                              "Guess the limit and a closed-form tail of a series, then prove the tail by telescoping");
        c.app->add_option("--spec", o->spec, "Summand JSON (or {summand, basis, max_degree}): path, '-' or inline");
        c.app->add_option("--basis", o->basis, "Constants, comma separated: 1, e, 1/e, cosh(1), sinh(1), pi");
        c.app->add_option("--precision", o->precision, "Trusted digits for the limit (default: EXPMATH_PRECISION or 40)")
            ->check(CLI::PositiveNumber);
        c.app->add_option("--max-degree", o->max_degree, "Largest tail numerator degree")->check(CLI::PositiveNumber);
        c.app->add_option("--format", o->format)->check(CLI::IsMember({"text", "json"}));
        c.run = [o](std::ostream& out) {
            if (o->spec.empty()) throw InvalidInput("--spec is required");
            auto job = load_gsum_job(load_json(o->spec));
            if (!o->basis.empty()) job.basis = split(o->basis, ",");
            if (o->max_degree) job.max_degree = o->max_degree;
            LimitOptions lopt;
            lopt.precision = o->precision ? o->precision : default_precision(lopt.precision);
            lopt.min_trusted = std::min(lopt.min_trusted, lopt.precision);
            TailOptions topt;
            topt.max_degree = job.max_degree;
            auto basis = job.basis.empty() ? default_basis(job.summand) : make_basis(job.basis);
            auto r = gosper_sum(job.summand, basis, lopt, topt);
            if (o->format == "json") out << r.to_json().dump(2) << "\n";
            else out << r.to_string();
            return 0;
        };
        c.checks = [] {
            auto tel = gosper_sum(summand_from_text("1/(n*(n+1))", {}, 1), make_basis({"1"}));
            auto ch = gosper_sum(summand_from_text("n^2+1", {{2, 0, -1}}), make_basis({"cosh(1)", "sinh(1)"}));
            bool tail_ok = true;
            for (long N = 1; N < 10; ++N) tail_ok = tail_ok && tel.tail.eval(N) == make_rational(1, N + 1);
            return std::vector<Check>{
                {"sum 1/(n(n+1)) has tail 1/(N+1)", tail_ok && tel.check.proof},
                {"sum (n^2+1)/(2n)! telescopes with a proof", ch.check.proof && ch.tail_tag == "PROOF"},
            };
        };
    }
}

}  // namespace cli
