#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "swiptnet/sweep.hpp"

using namespace swipt;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / name;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(SWIPTNET_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

} // namespace

TEST_CASE("parse_config: preset values land in linear units") {
    const Config cfg = parse_config("[scenario]\npreset = mmwave\n");
    const NetworkParams& p = cfg.scenario.params;
    CHECK(p.antenna.M == doctest::Approx(10.0));
    CHECK(p.antenna.m == doctest::Approx(0.1));
    CHECK(p.N0 == doctest::Approx(std::pow(10.0, -11.7)));
    CHECK(p.N_C == doctest::Approx(1.0));
    CHECK(p.p_L == doctest::Approx(0.8));
    CHECK(p.mu == 5);
    CHECK(p.lam == doctest::Approx(0.1));
    CHECK(cfg.thresholds.gamma == doctest::Approx(0.1));
    CHECK(cfg.thresholds.eps == doctest::Approx(std::pow(10.0, -0.5)));
    CHECK(cfg.thresholds.tau == doctest::Approx(0.2));

    const Config uh = parse_config("[scenario]\npreset = uhf\n");
    CHECK(uh.scenario.params.antenna.M == doctest::Approx(1.0));
    CHECK(uh.scenario.params.mu == 1);
    CHECK(uh.scenario.params.p_L == doctest::Approx(1.0));
}

TEST_CASE("parse_config: overrides, dB keys and errors") {
    const Config cfg = parse_config(
        "[scenario]\npreset = custom\nlambda = 0.05\nM_dBi = 3\nN0_dBW = -100\n"
        "[thresholds]\ngamma_dB = -3\n[sweep]\nvariable = tau\nstart = 0.1\nstop = 1\nsteps = 4\n");
    CHECK(cfg.scenario.params.lam == doctest::Approx(0.05));
    CHECK(cfg.scenario.params.antenna.M == doctest::Approx(std::pow(10.0, 0.3)));
    CHECK(cfg.scenario.params.N0 == doctest::Approx(1e-10));
    CHECK(cfg.thresholds.gamma == doctest::Approx(std::pow(10.0, -0.3)));
    CHECK(cfg.sweep.variable == "tau");
    CHECK(cfg.sweep.steps == 4);

    try {
        parse_config("[scenario]\nalpha = 1.9\n");
        FAIL("expected RangeError");
    } catch (const RangeError& e) {
        CHECK(std::string(e.what()).find("alpha must exceed 2") != std::string::npos);
    }
    try {
        parse_config("[thresholds]\neps_W = 0.49\n");
        FAIL("expected RangeError");
    } catch (const RangeError& e) {
        CHECK(std::string(e.what()).find("saturation") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config("[scenario]\nM = 2\nM_dBi = 3\n"), ParseError);
    CHECK_THROWS_AS(parse_config("[scenario]\nbogus_key = 1\n"), ParseError);
    CHECK_THROWS_AS(parse_config("[scenario]\nlambda = abc\n"), ParseError);
    CHECK_THROWS_AS(parse_config("key_without_section = 1\n"), ParseError);
    CHECK_THROWS_AS(parse_config("[sweep]\nsteps = 1\n"), RangeError);
    CHECK_THROWS_AS(parse_config("[sweep]\nmetrics = p_x\n"), RangeError);
    CHECK_THROWS_AS(load_config("/nonexistent/config.ini"), IoError);
}

TEST_CASE("sweep_grid canonicalization") {
    const auto grid = sweep_grid(0.5, 20.0, 10);
    REQUIRE(grid.size() == 10);
    CHECK(grid.front() == 0.5);
    CHECK(grid.back() == 20.0);
    for (double x : grid)
        CHECK(x == std::strtod(format_sig12(x).c_str(), nullptr));
    CHECK(sweep_grid(1.0, 2.0, 2).size() == 2);
}

TEST_CASE("run_sweep emits a reproducible CSV") {
    Config cfg = parse_config(
        "[scenario]\npreset = mmwave\n"
        "[sweep]\nvariable = P_t\nstart = 1\nstop = 16\nsteps = 6\nmetrics = p_s,p_o\n");
    const fs::path out = temp_file("swiptnet_sweep_test.csv");
    const int rc = run_sweep(cfg.scenario, cfg.thresholds, cfg.sweep, out.string(), std::cerr);
    CHECK(rc == kExitOk);

    std::ifstream in(out);
    REQUIRE(in.good());
    std::string line;
    int meta = 0, rows = 0;
    std::string header;
    std::vector<std::pair<double, std::pair<std::string, std::string>>> data;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (line[0] == '#') {
            ++meta;
            continue;
        }
        if (header.empty()) {
            header = line;
            continue;
        }
        ++rows;
        std::istringstream ss(line);
        std::string x, ps, po;
        std::getline(ss, x, ',');
        std::getline(ss, ps, ',');
        std::getline(ss, po, ',');
        data.push_back({std::strtod(x.c_str(), nullptr), {ps, po}});
    }
    CHECK(meta >= 2);
    CHECK(header == "P_t,p_s,p_o");
    REQUIRE(rows == 6);
    // re-running the analytic metrics at the stored grid points reproduces the
    // stored strings bit-exactly
    for (const auto& [x, cells] : data) {
        NetworkParams p = cfg.scenario.params;
        p.P_t = x;
        CHECK(format_sig12(eval_metric("p_s", p, cfg.thresholds)) == cells.first);
        CHECK(format_sig12(eval_metric("p_o", p, cfg.thresholds)) == cells.second);
    }
    fs::remove(out);
}

TEST_CASE("run_sweep records convergence failures as empty cells and exit 1") {
    Config cfg = parse_config(
        "[scenario]\npreset = mmwave\n"
        "[sweep]\nvariable = tau\nstart = 1e8\nstop = 1e9\nsteps = 2\nmetrics = p_s\n");
    const fs::path out = temp_file("swiptnet_sweep_fail.csv");
    std::ostringstream sink;
    const int rc = run_sweep(cfg.scenario, cfg.thresholds, cfg.sweep, out.string(), sink);
    CHECK(rc == kExitValidationFailure);
    std::ifstream in(out);
    std::string line, last;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#')
            last = line;
    CHECK(last.back() == ',');
    fs::remove(out);
}

TEST_CASE("validate_scenario passes with honest analytics and fails when tampered") {
    const Scenario sc = mmwave_preset();
    McSettings mc;
    mc.trials = 2000;
    mc.seed = 7;
    mc.disk_radius = 80.0;
    ValidateOptions vopt;
    vopt.grid_steps = 4;
    const fs::path out = temp_file("swiptnet_validate.json");
    std::ostringstream sink;
    CHECK(validate_scenario(sc, mc, out.string(), sink, vopt) == kExitOk);

    std::ifstream in(out);
    nlohmann::json rep = nlohmann::json::parse(in);
    CHECK(rep["all_pass"] == true);
    CHECK(rep["metrics"]["p_s"].size() == 4);
    for (const auto& pt : rep["metrics"]["p_s"]) {
        CHECK(pt.contains("x"));
        CHECK(pt.contains("analytic"));
        CHECK(pt.contains("mc"));
        CHECK(pt.contains("ci"));
        CHECK(pt["pass"] == true);
    }

    vopt.tamper_metric = "p_o";
    CHECK(validate_scenario(sc, mc, out.string(), sink, vopt) == kExitValidationFailure);
    std::ifstream in2(out);
    rep = nlohmann::json::parse(in2);
    CHECK(rep["all_pass"] == false);
    fs::remove(out);
}

TEST_CASE("cli exit codes") {
    // usage errors
    CHECK(run_cli("definitely-not-a-command") == kExitUsage);
    CHECK(run_cli("sweep --config /nonexistent.ini --out /tmp/x.csv") == kExitUsage);

    // preset listing
    CHECK(run_cli("preset --list") == kExitOk);

    const fs::path cfg = temp_file("swiptnet_cli_cfg.ini");
    write_file(cfg, "[scenario]\npreset = uhf\n"
                    "[sweep]\nvariable = P_t\nstart = 1\nstop = 5\nsteps = 2\nmetrics = p_s\n");
    const fs::path csv = temp_file("swiptnet_cli_out.csv");
    CHECK(run_cli("sweep --config " + cfg.string() + " --out " + csv.string()) == kExitOk);
    CHECK(fs::exists(csv));

    // unwritable output path
    CHECK(run_cli("sweep --config " + cfg.string() + " --out /nonexistent-dir/out.csv") ==
          kExitUsage);

    // validate: tiny run passes, tampering fails
    const fs::path rep = temp_file("swiptnet_cli_rep.json");
    CHECK(run_cli("validate --scenario mmwave --trials 1500 --seed 3 --radius 80 --grid-steps 3 --out " +
                  rep.string()) == kExitOk);
    CHECK(run_cli("validate --scenario mmwave --trials 1500 --seed 3 --radius 80 --grid-steps 3 "
                  "--tamper-analytic p_s --out " + rep.string()) == kExitValidationFailure);
    fs::remove(cfg);
    fs::remove(csv);
    fs::remove(rep);
}

TEST_CASE("cli sweep --trials adds MC columns") {
    const fs::path cfg = temp_file("swiptnet_cli_mc_cfg.ini");
    write_file(cfg, "[scenario]\npreset = mmwave\n"
                    "[sweep]\nvariable = P_t\nstart = 5\nstop = 15\nsteps = 2\nmetrics = p_s\n"
                    "[mc]\ntrials = 500\ndisk_radius = 80\n");
    const fs::path csv = temp_file("swiptnet_cli_mc.csv");
    CHECK(run_cli("sweep --config " + cfg.string() + " --out " + csv.string() +
                  " --trials 1000 --seed 5") == kExitOk);
    std::ifstream in(csv);
    std::string line, header;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') {
            header = line;
            break;
        }
    CHECK(header == "P_t,p_s,mc_p_s,mc_p_s_ci");
    fs::remove(cfg);
    fs::remove(csv);
}
