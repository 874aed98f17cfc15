#include "common.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "expmath/exact/unipoly.hpp"

namespace cli {

using namespace expmath;

Command& new_command(CLI::App& parent, Registry& reg, const std::string& name, const std::string& help) {
    Command c;
    c.app = parent.add_subcommand(name, help);
    c.app->add_flag("--selftest", *c.selftest, "Run the built-in examples for this subcommand and exit");
    reg.push_back(std::move(c));
    return reg.back();
}

std::string load_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream all;
        all << std::cin.rdbuf();
        return all.str();
    }
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read '" + path + "'");
    std::ostringstream all;
    all << in.rdbuf();
    return all.str();
}

nlohmann::json load_json(const std::string& arg) {
    auto first = arg.find_first_not_of(" \t\n");
    std::string text = first != std::string::npos && arg[first] == '{' ? arg : load_text(arg);
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

std::vector<std::string> split(const std::string& s, const std::string& seps) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (seps.find(ch) != std::string::npos) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<long> parse_longs(const std::string& s) {
    std::vector<long> out;
    for (auto& t : split(s)) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(t, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != t.size()) throw InvalidInput("not an integer: '" + t + "'");
        out.push_back(v);
    }
    return out;
}

SequenceSample load_sequence(const std::string& file, const std::string& values, long offset) {
    if (file.empty() == values.empty()) throw InvalidInput("give exactly one of --file and --values");
    SequenceSample s;
    if (!file.empty()) {
        std::istringstream in(load_text(file));
        s = read_sequence(in);
        if (offset != 0) s.offset = offset;
    } else {
        s.offset = offset;
        for (auto& t : split(values)) s.values.push_back(parse_rational(t));
    }
    if (s.values.empty()) throw InvalidInput("empty sequence");
    return s;
}

std::string display_operator(const RecurrenceOperator& op) {
    auto n = op.normalized();
    std::vector<Rational> c;
    for (auto& p : n.coeffs()) {
        if (p.degree() > 0) return n.to_string();
        c.push_back(p.eval(0));
    }
    return "0=(" + UniPoly(c, "N").to_string() + ")x_n";
}

long default_precision(long fallback) {
    const char* v = std::getenv("EXPMATH_PRECISION");
    if (!v || !*v) return fallback;
    char* end = nullptr;
    long p = std::strtol(v, &end, 10);
    if (*end || p <= 0) throw InvalidInput("EXPMATH_PRECISION must be a positive integer");
    return p;
}

const std::vector<std::string>& output_formats() {
    static const std::vector<std::string> f{"text", "json", "csv"};
    return f;
}

}  // namespace cli
