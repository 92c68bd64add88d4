#include "swiptnet/presets.hpp"

#include <cmath>

namespace swipt {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

NetworkParams shared_base() {
    NetworkParams p{};
    p.lam = 0.1;
    p.alpha = 3.0;
    p.d0 = 5.0;
    p.P_t = 10.0;
    p.antenna.m = db_to_linear(-10.0);
    p.N_C = db_to_linear(0.0); // dBW
    p.rho = 0.5;
    p.rectenna = RectennaModel{};
    return p;
}

CoverageThresholds shared_thresholds() {
    return {0.2, db_to_linear(-10.0), db_to_linear(-5.0)};
}

} // namespace

Scenario mmwave_preset() {
    NetworkParams p = shared_base();
    p.p_L = 0.8;
    p.mu = 5;
    p.N0 = db_to_linear(-117.0);
    p.antenna.M = db_to_linear(10.0);
    p.antenna.omega = kPi / 6.0;
    return {"mmwave", p, shared_thresholds()};
}

Scenario uhf_preset() {
    NetworkParams p = shared_base();
    p.p_L = 1.0;
    p.mu = 1;
    p.N0 = db_to_linear(-127.0);
    p.antenna.M = db_to_linear(0.0);
    // An 0 dBi antenna does not beamform: full-width main lobe, so every link
    // sees the M^2 product.  This is the configuration that reproduces the
    // reference exposure curves; narrow-lobe variants are available through
    // the omega key in custom scenarios.
    p.antenna.omega = kPi;
    return {"uhf", p, shared_thresholds()};
}

Scenario preset_by_name(const std::string& name) {
    if (name == "mmwave")
        return mmwave_preset();
    if (name == "uhf")
        return uhf_preset();
    if (name == "custom") {
        Scenario s = mmwave_preset(); // starting point for overrides
        s.name = "custom";
        return s;
    }
    throw RangeError("unknown preset: " + name);
}

std::vector<std::string> preset_names() {
    return {"mmwave", "uhf", "custom"};
}

} // namespace swipt
