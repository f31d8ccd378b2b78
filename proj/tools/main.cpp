// blochtherm CLI — simulate, sweep, steady, verify for the driven open two-level system

#include "blochtherm/scenario.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_validation = 1;
constexpr int exit_invariant = 2;

blochtherm::Scenario load(const std::string& config_path) {
    if (config_path.empty()) return blochtherm::default_scenario();
    return blochtherm::Scenario::from_json_file(config_path);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::string sibling_path(const std::string& csv_path, const char* extension) {
    const std::size_t dot = csv_path.find_last_of('.');
    const std::size_t slash = csv_path.find_last_of("/\\");
    const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
    return (has_ext ? csv_path.substr(0, dot) : csv_path) + extension;
}

int run_simulate(const std::string& config, const std::string& out, bool plot) {
    const blochtherm::Scenario sc = load(config);
    write_file(out, blochtherm::to_csv(blochtherm::simulate_rows(sc)));
    if (plot) {
        write_file(sibling_path(out, ".gp"), blochtherm::plot_script(out, sibling_path(out, ".png")));
    }
    return exit_ok;
}

int run_sweep_cmd(const std::string& config, const std::string& param, double from, double to, int steps,
                  const std::string& out) {
    const blochtherm::Scenario sc = load(config);
    blochtherm::SweepSpec spec;
    spec.param = param == "gamma_plus" ? blochtherm::SweepParam::gamma_plus
                                       : blochtherm::SweepParam::gamma_zero;
    spec.from = from;
    spec.to = to;
    spec.steps = steps;
    const auto rows = blochtherm::run_sweep(sc, spec);
    write_file(out, blochtherm::sweep_to_csv(rows, spec.param));
    return exit_ok;
}

int run_steady(const std::string& config, const std::string& out) {
    const blochtherm::Scenario sc = load(config);
    const std::string report = blochtherm::steady_report(sc);
    std::cout << report;
    if (!out.empty()) write_file(out, report);
    return exit_ok;
}

int run_verify(const std::string& config) {
    const blochtherm::Scenario sc = load(config);
    const blochtherm::VerifyReport report = blochtherm::run_verification(sc);
    for (const auto& check : report.checks) {
        std::cout << (check.passed ? "[ok]   " : "[FAIL] ") << check.name << ": " << check.detail << "\n";
    }
    return report.all_passed() ? exit_ok : exit_invariant;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"heat, work and entropy accounting for a driven open two-level system"};
    app.require_subcommand(1);

    std::string config;
    std::string out;
    bool plot = false;
    auto* simulate = app.add_subcommand("simulate", "emit the time series of state and rate columns as CSV");
    simulate->add_option("--config", config, "scenario JSON file")->required();
    simulate->add_option("--out", out, "output CSV path")->required();
    simulate->add_flag("--plot", plot, "also write a gnuplot script next to the CSV");

    std::string sweep_config;
    std::string sweep_param;
    std::string sweep_out;
    double sweep_from = 0.0;
    double sweep_to = 0.0;
    int sweep_steps = 0;
    auto* sweep = app.add_subcommand("sweep", "integrate net variations over a range of one decay rate");
    sweep->add_option("--config", sweep_config, "scenario JSON file")->required();
    sweep->add_option("--param", sweep_param, "swept rate")
        ->required()
        ->check(CLI::IsMember({"gamma_plus", "gamma_zero"}));
    sweep->add_option("--from", sweep_from, "first value")->required();
    sweep->add_option("--to", sweep_to, "last value")->required();
    sweep->add_option("--steps", sweep_steps, "number of points")->required();
    sweep->add_option("--out", sweep_out, "output CSV path")->required();

    std::string steady_config;
    std::string steady_out;
    auto* steady = app.add_subcommand("steady", "print the steady-state record");
    steady->add_option("--config", steady_config, "scenario JSON file");
    steady->add_option("--out", steady_out, "also write the record to a file");

    std::string verify_config;
    auto* verify = app.add_subcommand("verify", "run the named-invariant suite and report pass/fail");
    verify->add_option("--config", verify_config, "scenario JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return exit_validation;
    }

    try {
        if (simulate->parsed()) return run_simulate(config, out, plot);
        if (sweep->parsed()) return run_sweep_cmd(sweep_config, sweep_param, sweep_from, sweep_to,
                                                  sweep_steps, sweep_out);
        if (steady->parsed()) return run_steady(steady_config, steady_out);
        if (verify->parsed()) return run_verify(verify_config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_validation;
    }
    return exit_ok;
}
