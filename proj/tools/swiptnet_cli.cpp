// Command-line front end: parameter sweeps to CSV, analytic-vs-MC validation
// reports, preset inspection.  Exit codes: 0 success, 1 validation/numeric
// failure, 2 usage/config/IO error.

#include <iostream>

#include <CLI11.hpp>

#include "swiptnet/sweep.hpp"
#include "swiptnet/version.hpp"

namespace {

void print_scenario(const swipt::Scenario& s) {
    const auto& p = s.params;
    std::cout << s.name << ":\n"
              << "  lambda = " << p.lam << " /m^2, p_L = " << p.p_L << ", alpha = " << p.alpha
              << ", mu = " << p.mu << "\n"
              << "  d0 = " << p.d0 << " m, P_t = " << p.P_t << " W\n"
              << "  antenna: M = " << swipt::linear_to_db(p.antenna.M)
              << " dBi, m = " << swipt::linear_to_db(p.antenna.m) << " dBi, omega = "
              << p.antenna.omega << " rad\n"
              << "  N0 = " << swipt::linear_to_db(p.N0) << " dBW, N_C = "
              << swipt::linear_to_db(p.N_C) << " dBW, rho = " << p.rho << "\n"
              << "  rectenna: a_bar = " << p.rectenna.a_bar << ", b_bar = " << p.rectenna.b_bar
              << ", c_bar = " << p.rectenna.c_bar
              << " (saturation " << p.rectenna.saturation() << " W)\n"
              << "  thresholds: tau = " << s.thresholds.tau << " W/m^2, gamma = "
              << s.thresholds.gamma << ", eps = " << s.thresholds.eps << " W\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"swiptnet: coverage and RF-exposure analysis of a large-scale SWIPT network"};
    app.set_version_flag("--version", std::string("swiptnet ") + swipt::kVersion);
    app.require_subcommand(1);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run a parameter sweep from a config file, emit CSV");
    std::string config_path, out_csv;
    long long cli_trials = -1;
    long long cli_seed = -1;
    sweep->add_option("--config", config_path, "config file")->required();
    sweep->add_option("--out", out_csv, "output CSV path")->required();
    sweep->add_option("--trials", cli_trials, "enable/override MC columns with this trial count");
    sweep->add_option("--seed", cli_seed, "override MC seed");

    // validate
    auto* validate = app.add_subcommand("validate", "analytic-vs-MC agreement report (JSON)");
    std::string scenario_name = "mmwave", out_json;
    swipt::McSettings mc;
    mc.disk_radius = 100.0; // compensated sampling window; doubling-checked in tests
    swipt::ValidateOptions vopt;
    long long val_trials = 100000, val_seed = 1;
    validate->add_option("--scenario", scenario_name, "preset name (mmwave|uhf)");
    validate->add_option("--trials", val_trials, "MC trials per grid point");
    validate->add_option("--seed", val_seed, "MC seed");
    validate->add_option("--out", out_json, "output JSON path")->required();
    validate->add_option("--radius", mc.disk_radius, "MC sampling disk radius, m");
    validate->add_option("--grid-start", vopt.grid_start, "P_t grid start, W");
    validate->add_option("--grid-stop", vopt.grid_stop, "P_t grid stop, W");
    validate->add_option("--grid-steps", vopt.grid_steps, "P_t grid points");
    validate->add_option("--tamper-analytic", vopt.tamper_metric,
                         "test hook: skew one metric's analytic value")
        ->group(""); // hidden
    validate->add_flag("--serial", "disable MC threading")->group("");

    // preset
    auto* preset = app.add_subcommand("preset", "inspect built-in scenarios");
    bool list = false;
    preset->add_flag("--list", list, "list presets and their parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? swipt::kExitOk : swipt::kExitUsage;
    }

    try {
        if (sweep->parsed()) {
            swipt::Config cfg = swipt::load_config(config_path);
            if (cli_trials > 0) {
                swipt::McSettings m = cfg.sweep.mc.value_or(swipt::McSettings{});
                m.trials = cli_trials;
                if (cli_seed >= 0)
                    m.seed = static_cast<std::uint64_t>(cli_seed);
                m.validate(cfg.scenario.params);
                cfg.sweep.mc = m;
            } else if (cli_seed >= 0 && cfg.sweep.mc) {
                cfg.sweep.mc->seed = static_cast<std::uint64_t>(cli_seed);
            }
            return swipt::run_sweep(cfg.scenario, cfg.thresholds, cfg.sweep, out_csv, std::cerr);
        }
        if (validate->parsed()) {
            swipt::Scenario sc = swipt::preset_by_name(scenario_name);
            mc.trials = val_trials;
            mc.seed = static_cast<std::uint64_t>(val_seed);
            mc.parallel = validate->count("--serial") == 0;
            mc.validate(sc.params);
            return swipt::validate_scenario(sc, mc, out_json, std::cerr, vopt);
        }
        if (preset->parsed()) {
            if (list) {
                for (const auto& name : swipt::preset_names())
                    if (name != "custom")
                        print_scenario(swipt::preset_by_name(name));
                std::cout << "custom: any preset plus per-key overrides via [scenario] config\n";
            }
            return swipt::kExitOk;
        }
    } catch (const swipt::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return swipt::kExitValidationFailure;
    } catch (const swipt::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return swipt::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return swipt::kExitUsage;
    }
    return swipt::kExitUsage;
}
