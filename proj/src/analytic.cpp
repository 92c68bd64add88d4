#include "swiptnet/analytic.hpp"

#include <cmath>

namespace swipt {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

Complex cis(double theta) {
    return {std::cos(theta), std::sin(theta)};
}

// psi(t) for t > 0 collapses to exp(A cis(-pi/a) t^{2/a}) with a real, negative
// amplitude A; one pow and one exp per evaluation inside the integrands.
struct PsiFactor {
    double A = 0.0;
    double two_over_a = 1.0;
    Complex phase{1.0, 0.0};

    Complex eval(double t) const {
        if (t == 0.0 || A == 0.0)
            return {1.0, 0.0};
        return std::exp(A * std::pow(t, two_over_a) * phase);
    }
    double mod(double t) const {
        if (t == 0.0 || A == 0.0)
            return 1.0;
        return std::exp(A * std::pow(t, two_over_a) * phase.real());
    }
};

PsiFactor make_psi(const NetworkParams& p, double a_exp) {
    if (a_exp <= 2.0)
        throw DomainError("interference CF requires path-loss exponent > 2");
    PsiFactor f;
    f.two_over_a = 2.0 / a_exp;
    f.phase = cis(-kPi / a_exp);
    if (p.lam == 0.0 || p.p_L == 0.0)
        return f;
    const double B = beta_ext(-2.0 / a_exp, p.mu + 2.0 / a_exp);
    double amp = 0.0;
    for (const auto& cls : gain_pmf(p.antenna)) {
        const double lam_i = p.p_L * cls.prob * p.lam;
        const double P_i = cls.gain * p.P_t;
        if (lam_i > 0.0)
            amp += (2.0 * kPi * lam_i / a_exp) * std::pow(P_i / p.mu, f.two_over_a);
    }
    f.A = amp * B;
    return f;
}

// |(1 - j t c / mu)^{-mu}|
double serving_mod(double t, double c, int mu) {
    return std::pow(1.0 + (t * c / mu) * (t * c / mu), -0.5 * mu);
}

Complex serving_cf(double t, double c, int mu) {
    return std::pow(Complex(1.0, -t * c / mu), -static_cast<double>(mu));
}

double probability(double raw, const QuadratureOptions& opt) {
    return quad::clamp_probability(raw, opt.abs_tol);
}

} // namespace

Complex interference_cf(double t, double lam, double P, double a_exp, int mu) {
    if (a_exp <= 2.0)
        throw DomainError("interference_cf: path-loss exponent must exceed 2 (integral diverges)");
    if (lam < 0.0 || P <= 0.0 || mu < 1)
        throw DomainError("interference_cf: invalid density/power/shape");
    if (t == 0.0 || lam == 0.0)
        return {1.0, 0.0};
    const Complex base(0.0, -t * P / mu);
    const Complex arg = cpow_principal(base, 2.0 / a_exp);
    const double B = beta_ext(-2.0 / a_exp, mu + 2.0 / a_exp);
    return std::exp(2.0 * kPi * lam / a_exp * arg * B);
}

Complex psi(double t, const NetworkParams& p, double a_exp) {
    if (a_exp <= 2.0)
        throw DomainError("psi: path-loss exponent must exceed 2");
    Complex out{1.0, 0.0};
    for (const auto& cls : gain_pmf(p.antenna)) {
        const double lam_i = p.p_L * cls.prob * p.lam;
        if (lam_i > 0.0)
            out *= interference_cf(t, lam_i, cls.gain * p.P_t, a_exp, p.mu);
    }
    return out;
}

double mpe_prob(double tau, const NetworkParams& p, const QuadratureOptions& opt) {
    if (tau < 0.0)
        throw DomainError("mpe_prob: tau must be non-negative");
    p.validate();
    if (tau == 0.0)
        return 0.0; // the exposure is positive almost surely
    const double ae = p.alpha + 2.0;
    const double c = p.P0() * std::pow(p.d0, -ae);
    const double x = 4.0 * kPi * tau;
    const PsiFactor ps = make_psi(p, ae);
    auto integrand = [&](double t) {
        return std::imag(cis(-t * x) * ps.eval(t) * serving_cf(t, c, p.mu)) / t;
    };
    const double t_stop = quad::stop_time(
        [&](double T) { return serving_mod(T, c, p.mu) * ps.mod(T) / T; }, x, opt.abs_tol);
    const double integral = quad::integrate_oscillatory(integrand, x, t_stop, opt);
    return probability(0.5 - integral / kPi, opt);
}

double mpe_prob_asymptotic(double tau, const NetworkParams& p, const QuadratureOptions& opt) {
    if (tau < 0.0)
        throw DomainError("mpe_prob_asymptotic: tau must be non-negative");
    p.validate();
    if (tau == 0.0)
        return 0.0;
    const double ae = p.alpha + 2.0;
    const double c = p.P0() * std::pow(p.d0, -ae);
    const double x = 4.0 * kPi * tau;
    // stable-law CF amplitude: (2 pi Gamma(-2/ae)/ae) sum_i lam_i P_i^{2/ae}
    double amp = 0.0;
    for (const auto& cls : gain_pmf(p.antenna)) {
        const double lam_i = p.p_L * cls.prob * p.lam;
        if (lam_i > 0.0)
            amp += lam_i * std::pow(cls.gain * p.P_t, 2.0 / ae);
    }
    PsiFactor ps;
    ps.two_over_a = 2.0 / ae;
    ps.phase = cis(-kPi / ae);
    ps.A = 2.0 * kPi * std::tgamma(-2.0 / ae) / ae * amp;
    auto integrand = [&](double t) {
        const Complex serving = 1.0 / Complex(1.0, -t * c);
        return std::imag(cis(-t * x) * ps.eval(t) * serving) / t;
    };
    const double t_stop = quad::stop_time(
        [&](double T) { return ps.mod(T) / (std::hypot(1.0, T * c) * T); }, x, opt.abs_tol);
    const double integral = quad::integrate_oscillatory(integrand, x, t_stop, opt);
    return probability(0.5 - integral / kPi, opt);
}

double info_coverage(double gamma, const NetworkParams& p, const QuadratureOptions& opt) {
    if (gamma <= 0.0)
        throw DomainError("info_coverage: gamma must be positive");
    p.validate();
    const double c = p.P0() * std::pow(p.d0, -p.alpha);
    const double B = p.N0 + p.N_C / p.rho;
    const PsiFactor ps = make_psi(p, p.alpha);
    auto integrand = [&](double t) {
        const Complex serving = std::pow(Complex(1.0, t * c / (gamma * p.mu)),
                                         -static_cast<double>(p.mu));
        return std::imag(cis(t * B) * ps.eval(t) * serving) / t;
    };
    const double t_stop = quad::stop_time(
        [&](double T) { return serving_mod(T, c / gamma, p.mu) * ps.mod(T) / T; }, B, opt.abs_tol);
    const double integral = quad::integrate_oscillatory(integrand, B, t_stop, opt);
    return probability(0.5 - integral / kPi, opt);
}

double energy_coverage(double eps, const NetworkParams& p, const QuadratureOptions& opt) {
    p.validate();
    const double delta = harvest_threshold(eps, p.rho, p.rectenna);
    const double c = p.P0() * std::pow(p.d0, -p.alpha);
    const PsiFactor ps = make_psi(p, p.alpha);
    auto integrand = [&](double t) {
        return std::imag(cis(-t * delta) * ps.eval(t) * serving_cf(t, c, p.mu)) / t;
    };
    const double t_stop = quad::stop_time(
        [&](double T) { return serving_mod(T, c, p.mu) * ps.mod(T) / T; }, delta, opt.abs_tol);
    const double integral = quad::integrate_oscillatory(integrand, delta, t_stop, opt);
    return probability(0.5 + integral / kPi, opt);
}

double joint_coverage(const CoverageThresholds& th, const NetworkParams& p,
                      const QuadratureOptions& opt) {
    if (th.gamma <= 0.0)
        throw DomainError("joint_coverage: gamma must be positive");
    p.validate();
    const double gamma = th.gamma;
    const double delta = harvest_threshold(th.eps, p.rho, p.rectenna);
    const double c = p.P0() * std::pow(p.d0, -p.alpha);
    const double B = p.N0 + p.N_C / p.rho;
    // conditioning fade bound: both events are simultaneously satisfiable for h0 > xi
    const double xi = gamma * std::pow(p.d0, p.alpha) / (p.P0() * (1.0 + gamma)) * (delta + B);
    const PsiFactor ps = make_psi(p, p.alpha);
    auto integrand = [&](double t) {
        const Complex t1 = upper_gamma_ratio(p.mu, xi * Complex(p.mu, -t * c)) *
                           cis(-t * delta) * serving_cf(t, c, p.mu);
        const Complex t2 = cis(t * B) *
                           upper_gamma_ratio(p.mu, xi * Complex(p.mu, t * c / gamma)) *
                           std::pow(Complex(1.0, t * c / (p.mu * gamma)),
                                    -static_cast<double>(p.mu));
        return std::imag((t1 - t2) * ps.eval(t)) / t;
    };
    const double gm = std::tgamma(static_cast<double>(p.mu));
    const double exi = std::exp(-xi * p.mu);
    auto envelope = [&](double T) {
        const double g1 = exi * std::pow(xi * std::hypot(p.mu, T * c), p.mu - 1.0) / gm *
                          serving_mod(T, c, p.mu);
        const double g2 = exi * std::pow(xi * std::hypot(p.mu, T * c / gamma), p.mu - 1.0) / gm *
                          serving_mod(T, c / gamma, p.mu);
        return (g1 + g2) * ps.mod(T) / T;
    };
    const double osc = std::max(delta + xi * c, B + xi * c / gamma);
    const double t_stop = quad::stop_time(envelope, osc, opt.abs_tol);
    const double integral = quad::integrate_oscillatory(integrand, osc, t_stop, opt);
    return probability(integral / kPi, opt);
}

double joint_with_mpe(const CoverageThresholds& th, const NetworkParams& p,
                      const QuadratureOptions& opt) {
    return mpe_prob(th.tau, p, opt) * joint_coverage(th, p, opt);
}

namespace {
double noise_floor_threshold(const CoverageThresholds& th, const NetworkParams& p) {
    // Xi: the binding received-power requirement among SINR and harvesting
    const double delta = harvest_threshold(th.eps, p.rho, p.rectenna);
    return std::max(th.gamma * (p.N0 + p.N_C / p.rho), delta);
}
} // namespace

double no_interference_joint(const CoverageThresholds& th, const NetworkParams& p) {
    p.validate();
    if (th.tau < 0.0 || th.gamma < 0.0)
        throw DomainError("no_interference_joint: thresholds must be non-negative");
    const double Xi = noise_floor_threshold(th, p);
    const double lo = p.mu * std::pow(p.d0, p.alpha) * Xi / p.P0();
    const double hi = 4.0 * kPi * th.tau * p.mu * std::pow(p.d0, p.alpha + 2.0) / p.P0();
    const double v = upper_gamma_ratio(p.mu, lo) - upper_gamma_ratio(p.mu, hi);
    return std::max(0.0, v);
}

double optimal_power(const CoverageThresholds& th, const NetworkParams& p) {
    p.validate();
    if (th.tau <= 0.0)
        throw DomainError("optimal_power: tau must be positive");
    const double Xi = noise_floor_threshold(th, p);
    if (Xi <= 0.0)
        throw DomainError("optimal_power: gamma and eps cannot both be zero");
    const double M2 = p.serving_gain();
    const double A = 4.0 * kPi * th.tau * std::pow(p.d0, p.alpha + 2.0);
    const double Bv = std::pow(p.d0, p.alpha) * Xi;
    const double r = 4.0 * kPi * th.tau * p.d0 * p.d0 / Xi;
    if (std::fabs(r - 1.0) < 1e-9)
        return Bv / M2 * (1.0 + 0.5 * (r - 1.0)); // limit of (A-B)/ln(A/B) at A -> B
    return (A - Bv) / (M2 * std::log(r));
}

} // namespace swipt
