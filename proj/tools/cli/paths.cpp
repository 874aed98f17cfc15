#include <cmath>
#include <iomanip>

#include "common.hpp"

#include "expmath/paths/lattice_paths.hpp"

namespace cli {

using namespace expmath;

namespace {

void write_fit_text(std::ostream& out, const FitResult& f) {
    out << std::setprecision(10) << "alpha " << f.alpha << "\n"
        << "alpha_reduced " << f.alpha_reduced() << "\n"
        << "beta " << f.beta << "\n"
        << "gamma " << f.gamma << "\n"
        << "delta " << f.delta << "\n"
        << "stability " << f.stability << "\n"
        << "terms " << f.terms << "\n";
}

}  // namespace

void add_path_commands(CLI::App& app, Globals&, Registry& reg) {
    {
        struct Opts {
            long a = 1, b = 1, n = 0, series = 0;
            std::string format = "text";
        };
        auto o = std::make_shared<Opts>();
        auto& c = new_command(app, reg, "paths2d", "Count lattice paths staying below y = (a/b) x");
        c.app->add_option("--a", o->a)->check(CLI::PositiveNumber);
        c.app->add_option("--b", o->b)->check(CLI::PositiveNumber);
        c.app->add_option("--n", o->n, "Endpoint (b n, a n)")->check(CLI::PositiveNumber);
        c.app->add_option("--series", o->series, "Print n = 1..N instead")->check(CLI::PositiveNumber);
        c.app->add_option("--format", o->format)->check(CLI::IsMember({"text", "csv", "json"}));
        c.run = [o](std::ostream& out) {
            if ((o->n > 0) == (o->series > 0)) throw InvalidInput("give exactly one of --n and --series");
            SequenceSample s = o->series ? count_2d_series(o->a, o->b, o->series)
                                         : SequenceSample{o->n, {Rational(count_2d({o->a, o->b, o->n}))}};
            if (o->format == "json") {
                nlohmann::json j{{"a", o->a}, {"b", o->b}, {"offset", s.offset}, {"counts", nlohmann::json::array()}};
                for (auto& v : s.values) j["counts"].push_back(to_string(v));
                out << j.dump(2) << "\n";
            } else if (o->format == "csv") {
                out << "n,count\n";
                for (long n = s.offset; n < s.end(); ++n) out << n << ',' << to_string(s.at(n)) << "\n";
            } else {
                for (auto& v : s.values) out << to_string(v) << "\n";
            }
            return 0;
        };
        c.checks = [] {
            auto cat = count_2d_series(1, 1, 10);
            return std::vector<Check>{
                {"slope 1 gives Catalan 1, 2, 5, ..., 16796", cat.at(1) == 1 && cat.at(10) == 16796},
                {"slope 2, n = 3 gives 12", count_2d({2, 1, 3}) == 12},
            };
        };
    }
    {
        struct Opts {
            long a = 1, b = 1, c = 1, n = 0, series = 0;
            bool exponent = false;
            std::string format = "text";
        };
        auto o = std::make_shared<Opts>();
        auto& c = new_command(app, reg, "paths3d", "Count 3D lattice paths with a x <= b y <= c z");
        c.app->add_option("--a", o->a)->check(CLI::PositiveNumber);
        c.app->add_option("--b", o->b)->check(CLI::PositiveNumber);
        c.app->add_option("--c", o->c)->check(CLI::PositiveNumber);
        c.app->add_option("--n", o->n, "Endpoint (bc n, ac n, ab n)")->check(CLI::PositiveNumber);
        c.app->add_option("--series", o->series, "Print n = 1..N instead")->check(CLI::PositiveNumber);
        c.app->add_flag("--exponent", o->exponent, "With --series: also fit count/total ~ C n^-e");
        c.app->add_option("--format", o->format)->check(CLI::IsMember({"text", "csv", "json"}));
        c.run = [o](std::ostream& out) {
            if ((o->n > 0) == (o->series > 0)) throw InvalidInput("give exactly one of --n and --series");
            if (o->exponent && !o->series) throw InvalidInput("--exponent needs --series");
            SequenceSample s = o->series ? count_3d_series(o->a, o->b, o->c, o->series)
                                         : SequenceSample{o->n, {Rational(count_3d({o->a, o->b, o->c, o->n}))}};
            std::optional<double> e;
            if (o->exponent) e = fit_exponent_3d(s, o->a, o->b, o->c);
            if (o->format == "json") {
                nlohmann::json j{{"a", o->a}, {"b", o->b}, {"c", o->c}, {"offset", s.offset},
                                 {"counts", nlohmann::json::array()}};
                for (auto& v : s.values) j["counts"].push_back(to_string(v));
                if (e) j["exponent"] = *e;
                out << j.dump(2) << "\n";
            } else if (o->format == "csv") {
                out << "n,count,total\n";
                for (long n = s.offset; n < s.end(); ++n)
                    out << n << ',' << to_string(s.at(n)) << ',' << to_string(total_3d(o->a, o->b, o->c, n)) << "\n";
                if (e) out << "# exponent " << std::setprecision(10) << *e << "\n";
            } else {
                for (auto& v : s.values) out << to_string(v) << "\n";
                if (e) out << "exponent " << std::setprecision(10) << *e << "\n";
            }
            return 0;
        };
        c.checks = [] {
            return std::vector<Check>{
                {"(1,1,1), n = 2 gives 5", count_3d({1, 1, 1, 2}) == 5},
                {"(2,1,3), n = 1 gives 54", count_3d({2, 1, 3, 1}) == 54},
            };
        };
    }
    {
        struct Opts {
            long a = 1, b = 1, n = 1;
            std::string format = "csv";
        };
        auto o = std::make_shared<Opts>();
        auto& c = new_command(app, reg, "arcsine", "Histogram of steps above the line y = (a/b) x over all paths");
        c.app->add_option("--a", o->a)->check(CLI::PositiveNumber);
        c.app->add_option("--b", o->b)->check(CLI::PositiveNumber);
        c.app->add_option("--n", o->n)->check(CLI::PositiveNumber);
        c.app->add_option("--format", o->format)->check(CLI::IsMember({"csv", "json"}));
        c.run = [o](std::ostream& out) {
            auto h = time_above_histogram(o->a, o->b, o->n);
            if (o->format == "json") {
                nlohmann::json j{{"a", o->a}, {"b", o->b}, {"n", o->n}, {"counts", nlohmann::json::array()}};
                for (auto& v : h) j["counts"].push_back(to_string(v));
                out << j.dump(2) << "\n";
            } else {
                out << "k,count\n";
                for (std::size_t k = 0; k < h.size(); ++k) out << k << ',' << to_string(h[k]) << "\n";
            }
            return 0;
        };
        c.checks = [] {
            auto h = time_above_histogram(1, 1, 1);
            auto big = time_above_histogram(1, 1, 5);
            Integer total = 0;
            for (auto& v : big) total += v;
            return std::vector<Check>{
                {"slope 1, n = 1 gives [1, 0, 1]", h == std::vector<Integer>{1, 0, 1}},
                {"slope 1, n = 5 sums to binomial(10, 5)", total == 252},
            };
        };
    }
    {
        struct Opts {
            long a = 3, b = 2, terms = 300;
            long c = 0;
            std::string format = "text";
        };
        auto o = std::make_shared<Opts>();
        auto& c = new_command(app, reg, "fit", "Fit the asymptotic constant of the path counts");
        c.app->add_option("--a", o->a)->check(CLI::PositiveNumber);
        c.app->add_option("--b", o->b)->check(CLI::PositiveNumber);
        c.app->add_option("--c", o->c, "Fit the 3D exponent instead")->check(CLI::PositiveNumber);
        c.app->add_option("--terms", o->terms, "Series length")->check(CLI::PositiveNumber);
        c.app->add_option("--format", o->format)->check(CLI::IsMember({"text", "json"}));
        c.run = [o](std::ostream& out) {
            if (o->c) {
                double e = fit_exponent_3d(count_3d_series(o->a, o->b, o->c, o->terms), o->a, o->b, o->c);
                if (o->format == "json") out << nlohmann::json{{"exponent", e}, {"terms", o->terms}}.dump(2) << "\n";
                else out << std::setprecision(10) << "exponent " << e << "\n";
                return 0;
            }
            auto f = fit_alpha(count_2d_series(o->a, o->b, o->terms), o->a, o->b);
            if (o->format == "json") out << f.to_json().dump(2) << "\n";
            else write_fit_text(out, f);
            return 0;
        };
        c.checks = [] {
            auto f = fit_alpha(count_2d_series(1, 1, 120), 1, 1);
            return std::vector<Check>{
                {"slope 1 gives alpha = 1 within 0.5% (Catalan / binomial = 1/(n+1))", std::abs(f.alpha - 1) < 5e-3},
            };
        };
    }
}

}  // namespace cli
