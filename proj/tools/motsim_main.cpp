#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "motsim/config.hpp"
#include "motsim/errors.hpp"
#include "motsim/runner.hpp"

namespace {

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_issues(const std::vector<motsim::ConfigIssue>& issues) {
    for (const auto& issue : issues) {
        std::cerr << "config";
        if (issue.line > 0) std::cerr << " line " << issue.line;
        if (!issue.field.empty()) std::cerr << " [" << issue.field << "]";
        std::cerr << ": " << issue.message << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"simulator and linear-stability toolkit for a three-field "
                 "reaction-diffusion model with signal-dependent cell motility"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    int workers = 0;
    bool quiet = false;
    std::vector<CLI::Option*> out_opts, seed_opts;

    auto add_common = [&](CLI::App* cmd) {
        out_opts.push_back(cmd->add_option("--out", out_dir, "override the output directory"));
        seed_opts.push_back(
            cmd->add_option("--seed", seed, "override the initial-condition seed"));
        cmd->add_option("--workers", workers, "worker threads for sweeps (default: hardware)");
        cmd->add_flag("--quiet", quiet, "suppress progress lines");
    };

    auto* run_cmd = app.add_subcommand("run", "simulate one config and write artifacts");
    run_cmd->add_option("config", config_path, "config file")->required();
    add_common(run_cmd);

    auto* stab_cmd =
        app.add_subcommand("stability", "linear-stability report for a config, no simulation");
    stab_cmd->add_option("config", config_path, "config file")->required();
    add_common(stab_cmd);

    auto* sweep_cmd =
        app.add_subcommand("sweep", "run a cartesian parameter sweep and summarize it");
    sweep_cmd->add_option("config", config_path, "sweep config file")->required();
    add_common(sweep_cmd);

    auto* preset_cmd = app.add_subcommand("preset", "built-in configurations");
    preset_cmd->require_subcommand(1);
    auto* fig1_cmd = preset_cmd->add_subcommand(
        "fig1", "patterned aggregation demo on (0, 20): run it or emit its config");
    double dcoef = 0.1;
    bool emit = false;
    fig1_cmd->add_option("--d", dcoef, "signal diffusivity")->required();
    fig1_cmd->add_flag("--emit-config", emit, "print the config to stdout instead of running");
    add_common(fig1_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage problems are config errors
    }

    motsim::CommandOptions options;
    for (const auto* o : out_opts) {
        if (o->count() > 0) options.out_dir = out_dir;
    }
    for (const auto* o : seed_opts) {
        if (o->count() > 0) options.seed = seed;
    }
    options.workers = workers;
    options.quiet = quiet;

    try {
        if (fig1_cmd->parsed()) {
            motsim::RunConfig cfg = motsim::preset_fig1(dcoef);
            if (emit) {
                std::cout << motsim::serialize_config(cfg);
                return 0;
            }
            return motsim::cmd_run(cfg, options);
        }

        const auto text = read_file(config_path);
        if (!text) {
            std::cerr << "cannot read config file '" << config_path << "'\n";
            return 2;
        }

        if (run_cmd->parsed() || stab_cmd->parsed()) {
            const motsim::ParseResult parsed = motsim::parse_config(*text);
            if (!parsed.ok()) {
                print_issues(parsed.issues);
                return 2;
            }
            return run_cmd->parsed() ? motsim::cmd_run(*parsed.config, options)
                                     : motsim::cmd_stability(*parsed.config, options);
        }

        if (sweep_cmd->parsed()) {
            const motsim::SweepParseResult parsed = motsim::parse_sweep_config(*text);
            if (!parsed.ok()) {
                print_issues(parsed.issues);
                return 2;
            }
            return motsim::cmd_sweep(*parsed.sweep, options);
        }
    } catch (const motsim::Error& e) {
        std::cerr << e.what() << "\n";
        return 4;
    }
    return 2;
}
