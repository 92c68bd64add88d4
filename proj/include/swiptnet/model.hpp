#pragma once

#include <array>
#include <vector>

#include "swiptnet/errors.hpp"

namespace swipt {

// Non-linear rectifier curve fit.  Harvested power saturates at a_bar - b_bar/c_bar.
struct RectennaModel {
    double a_bar = 2.463;
    double b_bar = 1.635;
    double c_bar = 0.826;

    double saturation() const { return a_bar - b_bar / c_bar; }
    void validate() const;
};

// Sectorized beam pattern: main lobe of width omega and gain M, side lobe gain m.
struct AntennaPattern {
    double omega; // radians, [0, pi]
    double M;     // linear main-lobe gain
    double m;     // linear side-lobe gain

    void validate() const;
};

struct GainClass {
    double gain; // M^2, M*m or m^2
    double prob;
};

// Full scenario description.  All powers in linear Watts, gains linear.
struct NetworkParams {
    double lam;    // transmitter density, nodes/m^2
    double p_L;    // LOS probability for interferer links
    double alpha;  // path-loss exponent, > 2
    int mu;        // Nakagami shape, positive integer
    double d0;     // serving-link distance, m
    double P_t;    // transmit power, W
    AntennaPattern antenna;
    double N0;     // receiver AWGN variance, W
    double N_C;    // baseband conversion noise variance, W
    double rho;    // power-splitting ratio in (0,1), decoder share
    RectennaModel rectenna;

    double serving_gain() const { return antenna.M * antenna.M; } // aligned pair
    double P0() const { return serving_gain() * P_t; }
    void validate() const;
};

struct Interferer {
    double distance; // m
    double gain;     // linear two-sided gain (M^2, Mm or m^2)
    double fade;     // channel power, unit-mean gamma
};

// One sampled network snapshot around the probe receiver.
struct Realization {
    double h0 = 1.0; // serving-link fade
    std::vector<Interferer> interferers;
};

// Two-sided gain pmf of a random transmitter-receiver pair:
// (M^2, Mm, m^2) with probabilities ((w)^2, 2w(1-w), (1-w)^2), w = omega/pi.
std::array<GainClass, 3> gain_pmf(const AntennaPattern& antenna);

// Aggregate received signal power P_r = P0 h0 d0^-a + sum_i P_i h_i d_i^-a.
double received_power(const Realization& r, const NetworkParams& p);

// Power-splitting SINR: rho P0 h0 d0^-a / (rho(N0 + I) + N_C).
double sinr_of(const Realization& r, const NetworkParams& p);

// Harvested power for aggregate received power P_r under splitting ratio rho.
double harvested_energy(double P_r, double rho, const RectennaModel& rect);

// Inverse of harvested_energy in P_r: the received-power level delta with
// harvested_energy(delta) == eps.  Throws SaturationError at/beyond saturation.
double harvest_threshold(double eps, double rho, const RectennaModel& rect);

// Point-source incident power density at the receiver, W/m^2.
double mpe_of(const Realization& r, const NetworkParams& p);

} // namespace swipt
