#include <doctest.h>

#include <cmath>

#include "swiptnet/analytic.hpp"
#include "swiptnet/montecarlo.hpp"
#include "swiptnet/presets.hpp"

using namespace swipt;

namespace {

// analytic reference values computed with a high-accuracy independent
// implementation of the same integrals (64-point panels, t_min 1e-12,
// abs_tol 1e-9)
constexpr double kMmPs = 0.76310658;
constexpr double kMmPo = 0.93118702;
constexpr double kMmPe = 0.99914355;
constexpr double kMmPj = 0.93033261;
constexpr double kMmPsAsym = 0.75594952;
constexpr double kUhfPs = 0.57994417;
constexpr double kUhfPo = 0.00137111;
constexpr double kUhfPe = 0.79214977;
constexpr double kUhfPj = 0.00033012;

NetworkParams single_class(double lam, double P, int mu) {
    NetworkParams p = mmwave_preset().params;
    p.lam = lam;
    p.p_L = 1.0;
    p.P_t = P;
    p.mu = mu;
    p.antenna = {M_PI / 2.0, 1.0, 1.0}; // every gain class collapses to 1
    return p;
}

} // namespace

TEST_CASE("interference_cf basics") {
    CHECK(interference_cf(0.0, 0.1, 10.0, 3.0, 5) == Complex(1.0, 0.0));
    CHECK(interference_cf(0.7, 0.0, 10.0, 3.0, 5) == Complex(1.0, 0.0));
    CHECK_THROWS_AS(interference_cf(0.7, 0.1, 10.0, 2.0, 5), DomainError);

    for (double t : {0.01, 0.3, 2.0, 40.0}) {
        const Complex a = interference_cf(-t, 0.1, 10.0, 3.0, 5);
        const Complex b = std::conj(interference_cf(t, 0.1, 10.0, 3.0, 5));
        CHECK(std::abs(a - b) < 1e-14);
    }
    // |phi| <= 1 on a log-spaced grid, both exponents
    for (double a_exp : {3.0, 5.0})
        for (double t = 1e-6; t < 1e6; t *= 4.0)
            CHECK(std::abs(interference_cf(t, 0.1, 10.0, a_exp, 5)) <= 1.0 + 1e-12);
}

TEST_CASE("interference_cf matches the empirical CF of sampled interference") {
    const NetworkParams p = single_class(0.1, 10.0, 5);
    McSettings s;
    s.trials = 100000;
    s.seed = 2024;
    s.disk_radius = 60.0;
    const double t = 0.7;
    const Complex emp = empirical_cf(t, p, p.alpha, s);
    const Complex ana = interference_cf(t, p.lam, p.P_t, p.alpha, p.mu);
    const double se = std::sqrt((1.0 - std::norm(ana)) / s.trials);
    CHECK(std::abs(emp - ana) < 3.0 * se);
}

TEST_CASE("psi is the three-class product of thinned CFs") {
    const Scenario mm = mmwave_preset();
    for (double a_exp : {3.0, 5.0}) {
        for (double t : {0.1, 1.0, 7.0}) {
            Complex prod(1.0, 0.0);
            for (const auto& cls : gain_pmf(mm.params.antenna))
                prod *= interference_cf(t, mm.params.p_L * cls.prob * mm.params.lam,
                                        cls.gain * mm.params.P_t, a_exp, mm.params.mu);
            CHECK(std::abs(psi(t, mm.params, a_exp) - prod) < 1e-14);
        }
    }
    NetworkParams blocked = mm.params;
    blocked.p_L = 0.0;
    CHECK(psi(3.0, blocked, 5.0) == Complex(1.0, 0.0));

    // omega = pi: single-class product
    NetworkParams wide = mm.params;
    wide.antenna.omega = M_PI;
    const Complex lhs = psi(1.3, wide, 5.0);
    const Complex rhs = interference_cf(1.3, wide.p_L * wide.lam,
                                        wide.antenna.M * wide.antenna.M * wide.P_t, 5.0, wide.mu);
    CHECK(std::abs(lhs - rhs) < 1e-14);
}

TEST_CASE("mpe_prob at the reference operating point") {
    const Scenario mm = mmwave_preset(), uh = uhf_preset();
    CHECK(std::fabs(mpe_prob(0.2, mm.params) - kMmPs) < 5e-4);
    CHECK(std::fabs(mpe_prob(0.2, uh.params) - kUhfPs) < 5e-4);
}

TEST_CASE("mpe_prob limits and monotonicity") {
    const NetworkParams p = mmwave_preset().params;
    CHECK(mpe_prob(0.0, p) == 0.0);
    // very large caps oscillate at 4*pi*tau and need the panel budget raised
    QuadratureOptions wide;
    wide.max_panels = 120000;
    CHECK(mpe_prob(1e4, p, wide) > 0.99);
    double prev = -1.0;
    for (double tau : {0.02, 0.05, 0.1, 0.2, 0.5, 1.0, 3.0}) {
        const double v = mpe_prob(tau, p);
        CHECK(v >= prev - 1e-6);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
        prev = v;
    }
}

TEST_CASE("mpe_prob_asymptotic") {
    const Scenario mm = mmwave_preset(), uh = uhf_preset();
    CHECK(mpe_prob_asymptotic(0.0, mm.params) == 0.0);
    CHECK(std::fabs(mpe_prob_asymptotic(0.2, mm.params) - kMmPsAsym) < 5e-4);

    // converges to the exact probability as the fading hardens
    for (const auto* sc : {&mm, &uh}) {
        NetworkParams hard = sc->params;
        hard.mu = 200;
        CHECK(std::fabs(mpe_prob_asymptotic(0.2, sc->params) - mpe_prob(0.2, hard)) < 5e-3);
    }
    // lower bound at reference parameters across the tau range
    for (double tau : {0.05, 0.1, 0.2, 0.5, 1.0, 2.0})
        CHECK(mpe_prob_asymptotic(tau, mm.params) <= mpe_prob(tau, mm.params) + 1e-6);
}

TEST_CASE("info_coverage") {
    const Scenario mm = mmwave_preset(), uh = uhf_preset();
    CHECK(std::fabs(info_coverage(mm.thresholds.gamma, mm.params) - kMmPo) < 2e-4);
    CHECK(std::fabs(info_coverage(uh.thresholds.gamma, uh.params) - kUhfPo) < 1e-4);
    CHECK(info_coverage(1e-4, mm.params) > 0.999);
    CHECK(info_coverage(1e6, mm.params) < 1e-3);
    CHECK_THROWS_AS(info_coverage(0.0, mm.params), DomainError);
    double prev = 2.0;
    for (double g : {0.01, 0.03, 0.1, 0.3, 1.0, 3.0}) {
        const double v = info_coverage(g, mm.params);
        CHECK(v <= prev + 1e-6);
        prev = v;
    }
}

TEST_CASE("energy_coverage") {
    const Scenario mm = mmwave_preset(), uh = uhf_preset();
    CHECK(std::fabs(energy_coverage(mm.thresholds.eps, mm.params) - kMmPe) < 2e-4);
    CHECK(std::fabs(energy_coverage(uh.thresholds.eps, uh.params) - kUhfPe) < 2e-4);
    CHECK(energy_coverage(0.0, mm.params) == doctest::Approx(1.0).epsilon(1e-5));
    const double sat = mm.params.rectenna.saturation();
    CHECK_THROWS_AS(energy_coverage(sat, mm.params), SaturationError);
    double prev = 2.0;
    for (double frac : {0.05, 0.2, 0.4, 0.65, 0.9}) {
        const double v = energy_coverage(frac * sat, mm.params);
        CHECK(v <= prev + 1e-6);
        prev = v;
    }
}

TEST_CASE("energy_coverage near saturation at low power agrees with MC") {
    NetworkParams p = mmwave_preset().params;
    p.P_t = 0.5;
    const double eps = 0.99 * p.rectenna.saturation();
    const double ana = energy_coverage(eps, p);
    CHECK(ana < 0.01);
    McSettings s;
    s.trials = 20000;
    s.seed = 77;
    s.disk_radius = 80.0;
    const auto est = estimate(p, {0.2, 0.1, eps}, s);
    CHECK(std::fabs(ana - est.p_e.value) <= 3.0 * est.p_e.ci_half_width);
}

TEST_CASE("joint_coverage limits") {
    const Scenario mm = mmwave_preset();
    const CoverageThresholds th = mm.thresholds;
    CHECK(std::fabs(joint_coverage(th, mm.params) - kMmPj) < 2e-4);
    CHECK(std::fabs(joint_coverage(uhf_preset().thresholds, uhf_preset().params) - kUhfPj) < 1e-4);

    // eps -> 0: the harvesting constraint vanishes
    CoverageThresholds th_e0 = th;
    th_e0.eps = 1e-9;
    CHECK(std::fabs(joint_coverage(th_e0, mm.params) - info_coverage(th.gamma, mm.params)) < 1e-4);
    // gamma -> 0: the SINR constraint vanishes.  The vanishing-constraint mass
    // sits at t ~ mu*gamma/P0d0^-a, so the head of the integration range must
    // start below it.
    CoverageThresholds th_g0 = th;
    th_g0.gamma = 1e-5;
    QuadratureOptions fine;
    fine.t_min = 1e-10;
    fine.max_panels = 20000;
    CHECK(std::fabs(joint_coverage(th_g0, mm.params, fine) -
                    energy_coverage(th.eps, mm.params, fine)) < 5e-4);
}

TEST_CASE("joint_coverage never exceeds its marginals") {
    for (const auto& sc : {mmwave_preset(), uhf_preset()}) {
        for (double g : {0.03, 0.1, 0.5}) {
            for (double e : {0.1, 0.31622776601683794, 0.45}) {
                const CoverageThresholds th{0.2, g, e};
                const double pj = joint_coverage(th, sc.params);
                const double po = info_coverage(g, sc.params);
                const double pe = energy_coverage(e, sc.params);
                CHECK(pj <= std::min(po, pe) + 1e-6);
            }
        }
    }
}

TEST_CASE("joint_with_mpe") {
    const Scenario mm = mmwave_preset();
    CoverageThresholds th = mm.thresholds;
    th.tau = 0.0;
    CHECK(joint_with_mpe(th, mm.params) == 0.0);
    th.tau = 1e4; // exposure constraint inactive
    QuadratureOptions wide;
    wide.max_panels = 120000;
    CHECK(std::fabs(joint_with_mpe(th, mm.params, wide) - joint_coverage(th, mm.params, wide)) <
          5e-3);
}

TEST_CASE("joint_with_mpe tracks the exact joint within the documented gap") {
    // the product approximation is measured against the exact MC joint at the
    // reference parameters; the gap stays within +-0.05 (plus MC noise)
    const Scenario mm = mmwave_preset();
    McSettings s;
    s.trials = 40000;
    s.seed = 99;
    s.disk_radius = 80.0;
    for (double Pt : {2.0, 5.0, 10.0}) {
        NetworkParams p = mm.params;
        p.P_t = Pt;
        const double prod = joint_with_mpe(mm.thresholds, p);
        const auto exact = exact_joint_with_mpe(p, mm.thresholds, s);
        CHECK(std::fabs(prod - exact.value) <= 0.05 + 3.0 * exact.ci_half_width);
    }
}

TEST_CASE("no_interference_joint") {
    const Scenario mm = mmwave_preset();
    NetworkParams p0 = mm.params;
    p0.p_L = 0.0;

    CHECK(no_interference_joint({1e9, 0.0, 0.0}, p0) == doctest::Approx(1.0).epsilon(1e-12));

    // empty event: exposure cap below the noise/harvest requirement
    CoverageThresholds tight{1e-9, 10.0, 0.4};
    CHECK(no_interference_joint(tight, p0) == 0.0);

    // equals the full integral route when the interference is off
    for (double g : {0.02, 0.1, 0.5, 2.0}) {
        for (double e : {0.05, 0.2, 0.45}) {
            const CoverageThresholds th{0.2, g, e};
            CHECK(std::fabs(joint_with_mpe(th, p0) - no_interference_joint(th, p0)) < 1e-4);
        }
    }
}

TEST_CASE("optimal_power") {
    const Scenario mm = mmwave_preset(), uh = uhf_preset();
    for (const auto* sc : {&mm, &uh}) {
        const double pstar = optimal_power(sc->thresholds, sc->params);
        CHECK(pstar > 0.0);
        // independent of the fading parameter
        NetworkParams p1 = sc->params;
        p1.mu = 1;
        NetworkParams p5 = sc->params;
        p5.mu = 5;
        CHECK(optimal_power(sc->thresholds, p1) == optimal_power(sc->thresholds, p5));
        // grid-search oracle on no_interference_joint
        const double lo = pstar / 5.0, hi = pstar * 5.0;
        const int n = 10000;
        double best_x = lo, best_v = -1.0;
        for (int i = 0; i < n; ++i) {
            const double x = lo + (hi - lo) * i / (n - 1.0);
            NetworkParams px = sc->params;
            px.P_t = x;
            const double v = no_interference_joint(sc->thresholds, px);
            if (v > best_v) {
                best_v = v;
                best_x = x;
            }
        }
        CHECK(std::fabs(best_x - pstar) <= (hi - lo) / (n - 1.0) + 1e-12);
    }
    // increases with the exposure cap
    double prev = 0.0;
    for (double tau : {0.1, 0.2, 0.4, 0.8, 1.6}) {
        CoverageThresholds th = mm.thresholds;
        th.tau = tau;
        const double v = optimal_power(th, mm.params);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("optimal_power degenerate point returns the continuous limit") {
    const Scenario mm = mmwave_preset();
    const double delta = harvest_threshold(mm.thresholds.eps, mm.params.rho, mm.params.rectenna);
    const double Xi = std::max(mm.thresholds.gamma * (mm.params.N0 + mm.params.N_C / mm.params.rho),
                               delta);
    const double tau_star = Xi / (4.0 * M_PI * mm.params.d0 * mm.params.d0);
    CoverageThresholds th = mm.thresholds;
    th.tau = tau_star;
    const double at = optimal_power(th, mm.params);
    th.tau = tau_star * (1.0 + 1e-7);
    const double near = optimal_power(th, mm.params);
    CHECK(std::fabs(at - near) < 1e-4 * at);
    const double limit = std::pow(mm.params.d0, mm.params.alpha) * Xi / mm.params.serving_gain();
    CHECK(at == doctest::Approx(limit).epsilon(1e-6));
}
