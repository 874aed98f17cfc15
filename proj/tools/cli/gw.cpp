#include <iomanip>

#include "common.hpp"

#include "expmath/gw/gw_trees.hpp"

namespace cli {

using namespace expmath;

void add_gw_commands(CLI::App& app, Globals&, Registry& reg) {
    struct Opts {
        std::string degrees = "2";
        long max_n = 100, step = 1;
        int moments = 4, levels = 5;
        bool counts = false, extrapolate = false;
        std::string format = "csv";
    };
    auto o = std::make_shared<Opts>();
    auto& c = new_command(app, reg, "gwtrees", "Total height statistics of Galton-Watson tree families");
    c.app->add_option("--degrees", o->degrees, "Allowed child counts S, comma separated");
    c.app->add_option("--max-n", o->max_n, "Largest number of vertices")->check(CLI::PositiveNumber);
    c.app->add_option("--moments", o->moments, "Highest moment k")->check(CLI::Range(2, 12));
    c.app->add_option("--step", o->step, "Print every step-th n")->check(CLI::PositiveNumber);
    c.app->add_flag("--counts", o->counts, "Only the tree counts f_0..f_N");
    c.app->add_flag("--extrapolate", o->extrapolate, "Limits of alpha_3..alpha_k by Richardson extrapolation");
    c.app->add_option("--levels", o->levels, "Extrapolation grid size")->check(CLI::Range(2, 12));
    c.app->add_option("--format", o->format)->check(CLI::IsMember({"csv", "json"}));
    c.run = [o](std::ostream& out) {
        DegreeSet S;
        for (long d : parse_longs(o->degrees)) S.S.insert(d);
        S.validate();
        if (o->counts) {
            auto f = tree_counts(S, o->max_n);
            if (o->format == "json") {
                nlohmann::json j = nlohmann::json::array();
                for (auto& v : f.values) j.push_back(to_string(v));
                out << j.dump(2) << "\n";
            } else {
                out << "n,count\n";
                for (long n = 0; n < f.end(); ++n) out << n << ',' << to_string(f.at(n)) << "\n";
            }
            return 0;
        }
        auto hs = height_series(S, o->max_n, o->moments);
        if (o->extrapolate) {
            auto grid = default_grid(hs, o->levels);
            nlohmann::json j = nlohmann::json::array();
            if (o->format == "csv") out << "i,estimate,error,universal\n";
            for (int i = 3; i <= o->moments; ++i) {
                auto lim = alpha_limit_estimate(hs, i, grid);
                double u = i <= 9 ? universal_alpha(i) : 0;
                if (o->format == "json") {
                    auto e = lim.to_json();
                    e["i"] = i;
                    if (i <= 9) e["universal"] = u;
                    j.push_back(e);
                } else {
                    out << i << ',' << std::setprecision(10) << lim.value << ',' << lim.error << ',';
                    if (i <= 9) out << u;
                    out << "\n";
                }
            }
            if (o->format == "json") out << j.dump(2) << "\n";
            return 0;
        }
        nlohmann::json rows = nlohmann::json::array();
        if (o->format == "csv") {
            out << "n,count,mean";
            for (int i = 3; i <= o->moments; ++i) out << ",alpha_" << i;
            out << "\n";
        }
        for (long n = 1; n <= o->max_n; n += o->step) {
            if (hs.count(n) == 0) continue;
            auto row = moments(hs, n);
            if (o->format == "json") {
                auto j = row.to_json();
                j["count"] = to_string(hs.count(n));
                rows.push_back(j);
                continue;
            }
            out << n << ',' << to_string(hs.count(n)) << ',' << to_string(row.mean);
            for (int i = 3; i <= o->moments; ++i) {
                out << ',';
                if (!row.alpha.empty()) out << std::setprecision(12) << row.alpha[i];
            }
            out << "\n";
        }
        if (o->format == "json") out << rows.dump(2) << "\n";
        return 0;
    };
    c.checks = [] {
        auto f = tree_counts({{2}}, 9);
        auto hs = height_series({{2}}, 5, 2);
        auto five = moments(hs, 5);
        return std::vector<Check>{
            {"S = {2}: f_7 = 5, f_8 = 0, f_9 = 14", f.at(8) == 0 && f.at(9) == 14 && f.at(7) == 5},
            {"both 5-vertex binary trees have total height 6", five.mean == 6 && five.central[2] == 0},
        };
    };
}

}  // namespace cli
