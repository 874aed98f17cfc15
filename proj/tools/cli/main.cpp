#include <chrono>
#include <ctime>
#include <iomanip>
#include <iostream>

#include "common.hpp"

#include "expmath/deadline.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

int report_error(const std::string& kind, const std::string& message, int code, const std::string& stage = "") {
    nlohmann::json j{{"error", kind}, {"message", message}, {"exit_code", code}};
    if (!stage.empty()) j["stage"] = stage;
    std::cerr << j.dump() << "\n";
    return code;
}

void banner(const std::string& name) {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::cerr << "# expmath " << kVersion << " " << name << " " << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ") << "\n";
}

std::string full_name(const CLI::App* app) {
    std::string name = app->get_name();
    for (auto* p = app->get_parent(); p && p->get_parent(); p = p->get_parent()) name = p->get_name() + " " + name;
    return name;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Experimental mathematics toolkit: recurrences, sums, lattice paths, trees and bunk beds", "expmath"};
    app.set_version_flag("--version", kVersion);
    app.set_config("--config", "", "Read options from a TOML or INI file; unknown keys are errors");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.require_subcommand(1);

    cli::Globals g;
    app.add_flag("--no-banner", g.no_banner, "Do not print the timestamp line on stderr");
    app.add_option("--jobs", g.jobs, "Worker threads for parallel work")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for randomized self-tests");

    cli::Registry reg;
    reg.reserve(32);
    cli::add_sequence_commands(app, g, reg);
    cli::add_sum_commands(app, g, reg);
    cli::add_path_commands(app, g, reg);
    cli::add_gw_commands(app, g, reg);
    cli::add_bunkbed_commands(app, g, reg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report_error("UsageError", e.what(), 2);
    }

    cli::Command* cmd = nullptr;
    for (auto& c : reg)
        if (c.app->parsed() && c.app->get_subcommands().empty()) cmd = &c;
    if (!cmd) return report_error("UsageError", "no subcommand given", 2);
    if (!g.no_banner) banner(full_name(cmd->app));

    try {
        if (*cmd->selftest) {
            if (!cmd->checks) return report_error("UsageError", "no self-test for this command", 2);
            bool all = true;
            for (auto& c : cmd->checks()) {
                std::cout << (c.ok ? "ok   " : "FAIL ") << c.name << "\n";
                all = all && c.ok;
            }
            std::cout << "selftest " << full_name(cmd->app) << ": " << (all ? "passed" : "FAILED") << "\n";
            return all ? 0 : 4;
        }
        return cmd->run(std::cout);
    } catch (const expmath::NotFound& e) {
        return report_error(e.kind(), e.what(), 3, e.stage());
    } catch (const expmath::InternalError& e) {
        return report_error(e.kind(), e.what(), 4);
    } catch (const expmath::InvalidInput& e) {
        return report_error(e.kind(), e.what(), 2);
    } catch (const expmath::Error& e) {
        return report_error(e.kind(), e.what(), 4);
    } catch (const std::exception& e) {
        return report_error("InternalError", e.what(), 4);
    }
}
