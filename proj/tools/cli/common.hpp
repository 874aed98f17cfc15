#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "expmath/recurrence/recurrence.hpp"

namespace cli {

struct Globals {
    bool no_banner = false;
    int jobs = 1;
    std::uint64_t seed = 1;
};

struct Check {
    std::string name;
    bool ok = false;
};

// One subcommand: what it does normally and what --selftest runs.
struct Command {
    CLI::App* app = nullptr;
    std::shared_ptr<bool> selftest = std::make_shared<bool>(false);
    std::function<int(std::ostream&)> run;
    std::function<std::vector<Check>()> checks;
};

using Registry = std::vector<Command>;

void add_sequence_commands(CLI::App& app, Globals& g, Registry& reg);
void add_sum_commands(CLI::App& app, Globals& g, Registry& reg);
void add_path_commands(CLI::App& app, Globals& g, Registry& reg);
void add_gw_commands(CLI::App& app, Globals& g, Registry& reg);
void add_bunkbed_commands(CLI::App& app, Globals& g, Registry& reg);

// Creates the subcommand with its --selftest flag and puts it in the registry.
Command& new_command(CLI::App& parent, Registry& reg, const std::string& name, const std::string& help);

// Either a path, "-" for stdin, or inline JSON starting with '{'.
nlohmann::json load_json(const std::string& arg);
std::string load_text(const std::string& path);

// From --file (path or "-") or --values "1,2,5".
expmath::SequenceSample load_sequence(const std::string& file, const std::string& values, long offset);

std::vector<std::string> split(const std::string& s, const std::string& seps = ", ");
std::vector<long> parse_longs(const std::string& s);

// Constant-coefficient operators as a polynomial in N: "0=(N^2 - 3*N + 1)x_n".
std::string display_operator(const expmath::RecurrenceOperator& op);

// EXPMATH_PRECISION, else the fallback.
long default_precision(long fallback);

const std::vector<std::string>& output_formats();

}  // namespace cli
