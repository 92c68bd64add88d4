#include "swiptnet/model.hpp"

#include <cmath>
#include <string>

namespace swipt {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

void require(bool ok, const char* msg) {
    if (!ok)
        throw RangeError(msg);
}
} // namespace

void RectennaModel::validate() const {
    require(c_bar > 0.0, "rectenna c_bar must be positive");
    require(b_bar > 0.0, "rectenna b_bar must be positive");
    require(a_bar > b_bar / c_bar, "rectenna requires a_bar > b_bar/c_bar (positive saturation)");
}

void AntennaPattern::validate() const {
    require(omega >= 0.0 && omega <= kPi, "omega must lie in [0, pi]");
    require(m > 0.0, "side-lobe gain m must be positive");
    require(M >= m, "main-lobe gain M must be >= side-lobe gain m");
}

void NetworkParams::validate() const {
    require(lam >= 0.0, "lambda must be non-negative");
    require(p_L >= 0.0 && p_L <= 1.0, "p_L must lie in [0,1]");
    require(alpha > 2.0, "alpha must exceed 2");
    require(mu >= 1, "mu must be a positive integer");
    require(d0 > 0.0, "d0 must be positive");
    require(P_t > 0.0, "P_t must be positive");
    require(N0 >= 0.0, "N0 must be non-negative");
    require(N_C >= 0.0, "N_C must be non-negative");
    require(rho > 0.0 && rho < 1.0, "rho must lie in (0,1)");
    antenna.validate();
    rectenna.validate();
}

std::array<GainClass, 3> gain_pmf(const AntennaPattern& antenna) {
    antenna.validate();
    const double w = antenna.omega / kPi;
    return {GainClass{antenna.M * antenna.M, w * w},
            GainClass{antenna.M * antenna.m, 2.0 * w * (1.0 - w)},
            GainClass{antenna.m * antenna.m, (1.0 - w) * (1.0 - w)}};
}

double received_power(const Realization& r, const NetworkParams& p) {
    double sum = p.P0() * r.h0 * std::pow(p.d0, -p.alpha);
    for (const auto& it : r.interferers)
        sum += it.gain * p.P_t * it.fade * std::pow(it.distance, -p.alpha);
    return sum;
}

double sinr_of(const Realization& r, const NetworkParams& p) {
    double interference = 0.0;
    for (const auto& it : r.interferers)
        interference += it.gain * p.P_t * it.fade * std::pow(it.distance, -p.alpha);
    const double signal = p.P0() * r.h0 * std::pow(p.d0, -p.alpha);
    return p.rho * signal / (p.rho * (p.N0 + interference) + p.N_C);
}

double harvested_energy(double P_r, double rho, const RectennaModel& rect) {
    if (P_r < 0.0)
        throw DomainError("harvested_energy: received power must be non-negative");
    const double w = (1.0 - rho) * P_r;
    return (rect.a_bar * w + rect.b_bar) / (w + rect.c_bar) - rect.b_bar / rect.c_bar;
}

double harvest_threshold(double eps, double rho, const RectennaModel& rect) {
    if (eps < 0.0)
        throw DomainError("harvest_threshold: eps must be non-negative");
    const double sat = rect.saturation();
    if (eps >= sat)
        throw SaturationError("harvest_threshold: eps >= saturation level " + std::to_string(sat));
    return rect.c_bar * eps / ((1.0 - rho) * (rect.a_bar - eps - rect.b_bar / rect.c_bar));
}

double mpe_of(const Realization& r, const NetworkParams& p) {
    const double ae = p.alpha + 2.0;
    double sum = p.P0() * r.h0 * std::pow(p.d0, -ae);
    for (const auto& it : r.interferers)
        sum += it.gain * p.P_t * it.fade * std::pow(it.distance, -ae);
    return sum / (4.0 * kPi);
}

} // namespace swipt
