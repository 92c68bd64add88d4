#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swiptnet/montecarlo.hpp"
#include "swiptnet/presets.hpp"

namespace swipt {

// One swept variable with the metrics to evaluate along it.
struct SweepSpec {
    std::string variable;              // P_t | tau | p_L | lambda
    double start = 0.0;
    double stop = 0.0;
    int steps = 0;                     // >= 2
    std::vector<std::string> metrics;  // subset of {p_s,p_o,p_e,p_J,joint_mpe}
    std::optional<McSettings> mc;      // add MC columns when present
};

struct Config {
    Scenario scenario;
    CoverageThresholds thresholds{};
    SweepSpec sweep;
};

// Flat key-value config with [scenario], [thresholds], [sweep], [mc] sections.
// Power-like fields accept either a linear key (suffix _W, or bare) or a dB
// key (_dBW / _dB / _dBi); giving both is an error.  See README for the key
// table.  Throws ParseError with line diagnostics and RangeError on invariant
// violations (the offending key is named).
Config load_config(const std::string& path);

// Parse from an already-read string; source_name only labels diagnostics.
Config parse_config(const std::string& text, const std::string& source_name = "<config>");

} // namespace swipt
