#pragma once

#include "swiptnet/model.hpp"
#include "swiptnet/quadrature.hpp"
#include "swiptnet/special.hpp"

namespace swipt {

struct CoverageThresholds {
    double tau;   // exposure limit, W/m^2
    double gamma; // SINR threshold, linear
    double eps;   // harvested-power threshold, W
};

// Characteristic function of the shot-noise interference P sum_x h_x d_x^-a
// over a plane PPP of density lam with unit-mean Nakagami-mu fading:
//   phi(t) = exp( (2 pi lam / a) (-j t P / mu)^{2/a} B(-2/a, mu + 2/a) ).
// Returns 1 for t == 0 or lam == 0; throws DomainError for a_exp <= 2.
Complex interference_cf(double t, double lam, double P, double a_exp, int mu);

// Product of the three thinned-process CFs with lam_i = p_L q_i lam and
// P_i = g_i P_t under path-loss exponent a_exp.
Complex psi(double t, const NetworkParams& p, double a_exp);

// P{MPE < tau} via Gil-Pelaez inversion of the exposure CF (exponent alpha+2).
double mpe_prob(double tau, const NetworkParams& p, const QuadratureOptions& opt = {});

// Large-mu limit of mpe_prob: stable-law interference CF and first-order
// serving term (1 - j t P0 d0^{-alpha-2})^{-1}.
double mpe_prob_asymptotic(double tau, const NetworkParams& p, const QuadratureOptions& opt = {});

// Information coverage probability P{SINR > gamma}.
double info_coverage(double gamma, const NetworkParams& p, const QuadratureOptions& opt = {});

// Energy coverage probability P{E > eps} = P{P_r > harvest_threshold(eps)}.
double energy_coverage(double eps, const NetworkParams& p, const QuadratureOptions& opt = {});

// Joint P{SINR > gamma, E > eps}: single inversion integral with complex
// upper-incomplete-gamma factors over the conditioning fade range.
double joint_coverage(const CoverageThresholds& th, const NetworkParams& p,
                      const QuadratureOptions& opt = {});

// Independence approximation P{MPE<tau} * P{SINR>gamma, E>eps}.
double joint_with_mpe(const CoverageThresholds& th, const NetworkParams& p,
                      const QuadratureOptions& opt = {});

// Closed form for the interference-free network:
//   ( Gamma(mu, mu d0^a Xi / P0) - Gamma(mu, 4 pi tau mu d0^{a+2} / P0) ) / Gamma(mu),
// Xi = max(gamma (N0 + N_C/rho), harvest_threshold(eps)); clamped at 0.
double no_interference_joint(const CoverageThresholds& th, const NetworkParams& p);

// Transmit power maximizing no_interference_joint; independent of mu.
// At the degenerate point 4 pi tau d0^2 == Xi returns the continuous limit.
double optimal_power(const CoverageThresholds& th, const NetworkParams& p);

} // namespace swipt
