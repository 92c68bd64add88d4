#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "swiptnet/analytic.hpp"
#include "swiptnet/model.hpp"

namespace swipt {

struct McSettings {
    std::int64_t trials = 100000;
    std::uint64_t seed = 1;
    double disk_radius = 1000.0; // m, sampling window around the receiver
    bool parallel = true;
    // Add the analytic mean of the out-of-disk interference to every sample.
    // Removes the O(1/R) truncation bias; the neglected tail fluctuation is
    // O(R^{1-alpha}).  Turn off for a pure in-disk simulation.
    bool tail_compensation = true;

    void validate(const NetworkParams& p) const;
};

struct ProbabilityEstimate {
    double value = 0.0;         // indicator mean
    double ci_half_width = 0.0; // 95% Wilson half-width
    std::int64_t trials = 0;
};

// Indicator averages for one threshold triple.
struct EstimateSet {
    ProbabilityEstimate p_s;       // {MPE < tau}
    ProbabilityEstimate p_o;       // {SINR > gamma}
    ProbabilityEstimate p_e;       // {E > eps}
    ProbabilityEstimate p_J;       // {SINR > gamma and E > eps}
    ProbabilityEstimate joint_all; // all three
};

double wilson_half_width(double p_hat, std::int64_t n);

// Mean interference truncated away by the finite disk, for exponent a_exp:
// sum_i 2 pi lam_i P_i R^{2-a}/(a-2) with unit-mean fading.
double truncated_tail_mean(const NetworkParams& p, double a_exp, double radius);

// One network snapshot: Poisson count on the disk, uniform positions, LOS
// thinning, gain class by the antenna pmf, unit-mean gamma fades.
// Deterministic in (settings.seed, trial).
Realization sample_realization(const NetworkParams& p, const McSettings& s, std::uint64_t trial);

// Indicator estimates at the given thresholds.
EstimateSet estimate(const NetworkParams& p, const CoverageThresholds& th, const McSettings& s);

// Estimates across a transmit-power grid from one set of sampled snapshots.
// The snapshot law does not involve P_t, so every grid point sees exactly the
// realizations estimate() would draw; results are bit-identical to pointwise
// calls at a fraction of the sampling cost.
std::vector<EstimateSet> estimate_power_grid(const NetworkParams& p, const CoverageThresholds& th,
                                             const McSettings& s, std::span<const double> P_t_grid);

// Empirical characteristic function (1/n) sum_k e^{j t I_k} of the aggregate
// interference with path-loss exponent a_exp.
Complex empirical_cf(double t, const NetworkParams& p, double a_exp, const McSettings& s);
std::vector<Complex> empirical_cf(std::span<const double> ts, const NetworkParams& p, double a_exp,
                                  const McSettings& s);

// Estimate of the exact joint P{MPE<tau, SINR>gamma, E>eps} (no independence
// approximation).
ProbabilityEstimate exact_joint_with_mpe(const NetworkParams& p, const CoverageThresholds& th,
                                         const McSettings& s);

} // namespace swipt
