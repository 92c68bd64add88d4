#pragma once

#include <string>
#include <vector>

#include "swiptnet/analytic.hpp"
#include "swiptnet/model.hpp"

namespace swipt {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double v) { return 10.0 * std::log10(v); }

struct Scenario {
    std::string name; // "mmwave", "uhf" or "custom"
    NetworkParams params;
    CoverageThresholds thresholds;
};

// 30 GHz band: 10 dBi main lobe, pi/6 beamwidth, Nakagami mu=5, 80% LOS.
Scenario mmwave_preset();

// Sub-3 GHz band: 0 dBi unsectorized antenna (omega = pi, every link at the
// main-lobe product), Rayleigh fading (mu=1), always LOS.
Scenario uhf_preset();

Scenario preset_by_name(const std::string& name);
std::vector<std::string> preset_names();

} // namespace swipt
