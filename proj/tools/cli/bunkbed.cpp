#include <sstream>

#include "common.hpp"

#include "expmath/bunkbed/scan.hpp"

namespace cli {

using namespace expmath;

namespace {

struct GraphInput {
    std::string file, edges;
    int s = -1, f = -1, n = 0;
    void add(CLI::App* app) {
        app->add_option("--graph", file, "Graph file: 'u v' per line and 's=<id> f=<id>' ('-' reads stdin)");
        app->add_option("--edges", edges, "Inline edges, e.g. \"0-1 1-2\"");
        app->add_option("--s", s, "With --edges: terminal s");
        app->add_option("--f", f, "With --edges: terminal f");
        app->add_option("--vertices", n, "With --edges: vertex count (default: largest label + 1)");
    }
    SimpleGraph load() const {
        if (file.empty() == edges.empty()) throw InvalidInput("give exactly one of --graph and --edges");
        if (!file.empty()) {
            std::istringstream in(load_text(file));
            return SimpleGraph::parse(in);
        }
        if (s < 0 || f < 0) throw InvalidInput("--edges needs --s and --f");
        std::vector<std::pair<int, int>> e;
        int top = std::max(s, f);
        for (auto& tok : split(edges, " ,;")) {
            auto dash = tok.find('-');
            if (dash == std::string::npos) throw InvalidInput("bad edge '" + tok + "', expected u-v");
            auto ends = parse_longs(tok.substr(0, dash) + "," + tok.substr(dash + 1));
            if (ends.size() != 2) throw InvalidInput("bad edge '" + tok + "', expected u-v");
            e.push_back({static_cast<int>(ends[0]), static_cast<int>(ends[1])});
            top = std::max<int>({top, static_cast<int>(ends[0]), static_cast<int>(ends[1])});
        }
        return SimpleGraph(n ? n : top + 1, e, s, f);
    }
};

nlohmann::json row_json(const ScanRow& r) {
    nlohmann::json j{{"graph", r.graph.label()},
                     {"canonical", r.canonical},
                     {"s", r.graph.s},
                     {"f", r.graph.f},
                     {"difference", r.difference.to_string()},
                     {"certificate", r.certificate.to_json()}};
    if (r.factors) j["factors"] = r.factors->to_json();
    if (r.brute_agrees) j["brute_force"] = *r.brute_agrees ? "agree" : "DISAGREE";
    return j;
}

}  // namespace

void add_bunkbed_commands(CLI::App& app, Globals& g, Registry& reg) {
    auto& parent = new_command(app, reg, "bunkbed", "Bunk bed difference polynomials and their certificates");
    parent.app->require_subcommand(0, 1);
    parent.run = [](std::ostream&) -> int { throw InvalidInput("choose one of: poly, condition, scan"); };
    auto bunkbed_checks = [] {
        SimpleGraph k2(2, {{0, 1}});
        UniPoly d = difference_polynomial(k2);
        ScanOptions opt;
        opt.max_vertices = 3;
        auto rep = scan_graphs(opt);
        return std::vector<Check>{
            {"K2 gives p(1-p)^2", d == p_poly({0, 1, -2, 1})},
            {"K2 agrees with enumeration", difference_polynomial_bruteforce(k2) == d},
            {"scan to 3 vertices is certified", rep.all_certified() && rep.brute_all_agree()},
        };
    };
    parent.checks = bunkbed_checks;
    CLI::App* bb = parent.app;

    {
        struct Opts {
            GraphInput in;
            std::string rungs = "all", format = "text";
            bool brute = false;
        };
        auto o = std::make_shared<Opts>();
        auto& c = new_command(*bb, reg, "poly", "D(p) = P(s~f) - P(s~f') for one graph, with its certificate");
        o->in.add(c.app);
        c.app->add_option("--rungs", o->rungs, "Outside edges: all, or no-terminals")
            ->check(CLI::IsMember({"all", "no-terminals"}));
        c.app->add_flag("--brute-force", o->brute, "Also enumerate the whole bunk bed graph and compare");
        c.app->add_option("--format", o->format)->check(CLI::IsMember({"text", "json"}));
        c.run = [o](std::ostream& out) {
            auto gr = o->in.load();
            auto rungs = parse_rungs(o->rungs);
            auto cp = connection_polynomials(gr, rungs);
            UniPoly d = cp.difference();
            auto cert = certify_nonnegative(d);
            std::optional<FactorStructure> fs;
            if (!d.is_zero()) fs = factor_structure(d, gr, rungs);
            std::optional<bool> agree;
            if (o->brute) agree = difference_polynomial_bruteforce(gr, rungs) == d;
            if (o->format == "json") {
                nlohmann::json j{{"graph", gr.label()},
                                 {"rungs", to_string(rungs)},
                                 {"to_f", cp.to_f.to_string()},
                                 {"to_f_prime", cp.to_f_prime.to_string()},
                                 {"difference", d.to_string()},
                                 {"certificate", cert.to_json()}};
                if (fs) j["factors"] = fs->to_json();
                if (agree) j["brute_force"] = *agree ? "agree" : "DISAGREE";
                out << j.dump(2) << "\n";
            } else {
                out << "P(s~f)  = " << cp.to_f.to_string() << "\n"
                    << "P(s~f') = " << cp.to_f_prime.to_string() << "\n"
                    << "D       = " << d.to_string() << "\n"
                    << "status  = " << (cert.nonnegative ? "certified" : "counterexample");
                if (cert.counterexample) out << " at p = " << to_string(*cert.counterexample);
                out << "\n";
                if (fs)
                    out << "factors = p^" << fs->p_exponent << " (1-p)^" << fs->one_minus_p_exponent << " * ("
                        << fs->rest.to_string() << "), rest " << fs->irreducibility_label() << "\n"
                        << "distance " << fs->distance << ", cut in G " << fs->cut_in_g << ", cut in bunk bed "
                        << fs->cut_in_bunkbed << "\n";
                if (agree) out << "brute force " << (*agree ? "agrees" : "DISAGREES") << "\n";
            }
            return agree.value_or(true) ? 0 : 4;
        };
        c.checks = bunkbed_checks;
    }
    {
        struct Opts {
            GraphInput in;
            std::string x, format = "text";
        };
        auto o = std::make_shared<Opts>();
        auto& c = new_command(*bb, reg, "condition", "D(p) given that exactly the outside edges at X are retained");
        o->in.add(c.app);
        c.app->add_option("--x", o->x, "Vertices of X, comma separated (not s or f)");
        c.app->add_option("--format", o->format)->check(CLI::IsMember({"text", "json"}));
        c.run = [o](std::ostream& out) {
            auto gr = o->in.load();
            std::vector<int> X;
            for (long v : parse_longs(o->x)) X.push_back(static_cast<int>(v));
            UniPoly d = conditional_difference(gr, X);
            auto cert = certify_nonnegative(d);
            if (o->format == "json") {
                out << nlohmann::json{{"graph", gr.label()}, {"X", X}, {"difference", d.to_string()},
                                      {"certificate", cert.to_json()}}
                           .dump(2)
                    << "\n";
            } else {
                out << "D = " << d.to_string() << "\n"
                    << "status = " << (cert.nonnegative ? "certified" : "counterexample") << "\n";
            }
            return 0;
        };
        c.checks = [] {
            SimpleGraph p3(3, {{0, 1}, {1, 2}}, 0, 2);
            return std::vector<Check>{
                {"P3 with the middle rung only gives 0", conditional_difference(p3, {1}).is_zero()},
                {"P3 with no rungs gives p^2", conditional_difference(p3, {}) == p_poly({0, 0, 1})},
            };
        };
    }
    {
        struct Opts {
            int max_vertices = 5, brute_max_edges = 10;
            std::string rungs = "all", format = "csv";
        };
        auto o = std::make_shared<Opts>();
        auto& c = new_command(*bb, reg, "scan", "Every connected graph and {s, f} pair up to a vertex count");
        c.app->add_option("--max-vertices", o->max_vertices)->check(CLI::Range(1, 6));
        c.app->add_option("--brute-max-edges", o->brute_max_edges, "Cross-check by enumeration up to this many edges")
            ->check(CLI::Range(0, 24));
        c.app->add_option("--rungs", o->rungs)->check(CLI::IsMember({"all", "no-terminals"}));
        c.app->add_option("--format", o->format)->check(CLI::IsMember({"csv", "json"}));
        c.run = [o, &g](std::ostream& out) {
            ScanOptions opt;
            opt.max_vertices = o->max_vertices;
            opt.brute_max_edges = o->brute_max_edges;
            opt.rungs = parse_rungs(o->rungs);
            opt.jobs = g.jobs;
            auto rep = scan_graphs(opt);
            if (o->format == "json") {
                nlohmann::json j{{"graph_counts", rep.graph_counts},
                                 {"rungs", to_string(opt.rungs)},
                                 {"all_certified", rep.all_certified()},
                                 {"brute_checked", rep.brute_checked()},
                                 {"brute_all_agree", rep.brute_all_agree()},
                                 {"rows", nlohmann::json::array()}};
                for (auto& r : rep.rows) j["rows"].push_back(row_json(r));
                out << j.dump(2) << "\n";
            } else {
                rep.write_csv(out);
            }
            if (!rep.brute_all_agree()) throw InternalError("profile and enumeration disagree");
            return 0;
        };
        c.checks = bunkbed_checks;
    }
}

}  // namespace cli
