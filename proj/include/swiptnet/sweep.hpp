#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "swiptnet/config.hpp"

namespace swipt {

// Process exit codes, stable contract.
enum ExitCode : int {
    kExitOk = 0,
    kExitValidationFailure = 1,
    kExitUsage = 2,
};

// Canonical grid: every point is normalized to its 12-significant-digit
// printed form, so values read back from a CSV regenerate bit-identical rows.
std::vector<double> sweep_grid(double start, double stop, int steps);

// Format a double exactly as the CSV emits it.
std::string format_sig12(double v);

// Evaluate one analytic metric ("p_s", "p_o", "p_e", "p_J", "joint_mpe") at
// the given scenario and thresholds.
double eval_metric(const std::string& metric, const NetworkParams& params,
                   const CoverageThresholds& th, const QuadratureOptions& opt = {});

// Runs the sweep and writes the CSV.  Per-cell ConvergenceError leaves the
// cell empty and turns the exit code nonzero; IO problems throw IoError.
int run_sweep(const Scenario& scenario, const CoverageThresholds& th, const SweepSpec& spec,
              const std::string& out_path, std::ostream& log);

struct ValidateOptions {
    double grid_start = 0.5; // W
    double grid_stop = 20.0;
    int grid_steps = 10;
    std::string tamper_metric; // test hook: skew this metric's analytic value
};

// Analytic-vs-MC agreement report over a P_t grid; every metric must match
// within 3 Wilson half-widths.  Writes a JSON report; returns kExitOk iff all
// points pass.
int validate_scenario(const Scenario& scenario, const McSettings& mc, const std::string& out_path,
                      std::ostream& log, const ValidateOptions& vopt = {});

} // namespace swipt
