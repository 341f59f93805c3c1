// pseudogas: semi-classical quantum gas tables from the command line.
//
//   pseudogas polymer --eta 0.01 --j 2
//   pseudogas sweep --op pressure --axis eta --log --from 1e-4 --to 1e-2 --points 5 --stats bose
//   pseudogas lattice --spacing 0.2 --mass 6.6465e-27 --temperature 300 --nmax 6 --n 2

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pseudogas/cli/commands.hpp"
#include "pseudogas/cli/run_config.hpp"

namespace cli = pseudogas::cli;

namespace {

struct SubcommandOptions {
    cli::Subcommand id;
    CLI::App* app = nullptr;
    std::map<std::string, std::string> values;
    std::map<std::string, bool> flags;
    std::string config_path;
};

void add_keys(SubcommandOptions& sub, const std::vector<cli::KeySpec>& keys) {
    for (const cli::KeySpec& key : keys) {
        const std::string flag = "--" + key.name;
        if (sub.app->get_option_no_throw(flag) != nullptr) continue;
        if (key.flag) {
            sub.app->add_flag(flag, sub.flags[key.name], key.help);
        } else {
            sub.app->add_option(flag, sub.values[key.name], key.help);
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum corrections and pseudo-molecule equilibria of semi-classical gases"};
    app.require_subcommand(1);

    const std::vector<std::pair<cli::Subcommand, std::string>> commands = {
        {cli::Subcommand::Props, "reduced state (eta, eta_sp, lambda, Z0) of a physical gas"},
        {cli::Subcommand::Fugacity, "solve the number equation for the fugacity"},
        {cli::Subcommand::Pressure, "exact and first-order pressure ratio PV/NkT"},
        {cli::Subcommand::Polymer, "equilibrium pseudo-polymer fraction x_j"},
        {cli::Subcommand::Spinpair, "spin-resolved pair fraction at a momentum gap"},
        {cli::Subcommand::Lattice, "exact or sampled multioccupancy on a momentum lattice"},
        {cli::Subcommand::Sweep, "evaluate an operation over a parameter grid"},
    };

    std::vector<SubcommandOptions> subs;
    subs.reserve(commands.size());
    for (const auto& [id, help] : commands) {
        SubcommandOptions& sub = subs.emplace_back();
        sub.id = id;
        sub.app = app.add_subcommand(std::string(cli::to_string(id)), help);
        add_keys(sub, cli::operation_keys(id));
        if (id == cli::Subcommand::Sweep) {
            for (const auto& [inner, unused] : commands) {
                if (inner != cli::Subcommand::Sweep) add_keys(sub, cli::operation_keys(inner));
            }
        }
        add_keys(sub, cli::common_keys());
        sub.app->add_option("--config", sub.config_path, "flat key = value config file");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kExitInvalidInput;
    }

    for (SubcommandOptions& sub : subs) {
        if (!sub.app->parsed()) continue;
        try {
            cli::ParameterMap given;
            for (const auto& [name, value] : sub.values) {
                if (sub.app->get_option("--" + name)->count() > 0) given[name] = value;
            }
            for (const auto& [name, set] : sub.flags) {
                if (sub.app->get_option("--" + name)->count() > 0) given[name] = set ? "true" : "false";
            }
            const cli::ParameterMap from_file =
                sub.config_path.empty() ? cli::ParameterMap{} : cli::read_config_file(sub.config_path);
            const cli::RunConfig config = cli::make_run_config(sub.id, from_file, given);
            return cli::run(config, std::cout, std::cerr);
        } catch (...) {
            return cli::report_current_exception(std::cerr);
        }
    }
    return cli::kExitInvalidInput;
}
