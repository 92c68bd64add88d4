#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "swiptnet/errors.hpp"
#include "swiptnet/special.hpp"

namespace swipt {

struct QuadratureOptions {
    double t_min = 1e-8;   // lower edge of the first panel
    double abs_tol = 1e-6; // absolute tolerance on the integral
    int max_panels = 2000;
    int panel_order = 32;  // Gauss-Legendre points per panel
};

// Gauss-Legendre nodes/weights on [-1, 1], Newton iteration on P_n.
struct GaussLegendre {
    explicit GaussLegendre(int order);
    std::vector<double> x;
    std::vector<double> w;
};

namespace quad {

// Integrates f over (t_min, inf) with geometrically growing panels whose width
// is capped at six periods of the dominant oscillation.  Stops once three
// consecutive panels contribute less than abs_tol/10 each and the abscissa has
// passed t_stop (the caller's envelope-derived bound on where the tail becomes
// negligible).  Throws ConvergenceError when max_panels is exhausted.
template <class F>
double integrate_oscillatory(F&& f, double osc_freq, double t_stop, const QuadratureOptions& opt) {
    const GaussLegendre gl(opt.panel_order);
    const double cap = osc_freq > 0.0 ? 6.0 * 2.0 * 3.141592653589793 / osc_freq
                                      : std::numeric_limits<double>::infinity();
    double total = 0.0;
    double a = opt.t_min;
    int small_run = 0;
    for (int k = 0; k < opt.max_panels; ++k) {
        const double width = std::min(a, cap);
        const double b = a + width;
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        double val = 0.0;
        for (int i = 0; i < opt.panel_order; ++i)
            val += gl.w[i] * f(mid + half * gl.x[i]);
        val *= half;
        total += val;
        small_run = std::fabs(val) < opt.abs_tol / 10.0 ? small_run + 1 : 0;
        if (small_run >= 3 && b >= t_stop)
            return total;
        a = b;
    }
    throw ConvergenceError("quadrature: max_panels exhausted before tail criterion");
}

// Smallest T such that envelope(T) * min(T, 2/osc_freq) <= abs_tol/10, i.e. the
// integration-by-parts bound on the omitted tail drops below tolerance.
// envelope must be non-increasing.
double stop_time(const std::function<double(double)>& envelope, double osc_freq, double abs_tol);

// Clamp a raw quadrature probability into [0,1]; excursions beyond 10*abs_tol
// indicate a broken integrand and raise DiagnosticError.
double clamp_probability(double raw, double abs_tol);

} // namespace quad

// CDF recovery from a characteristic function:
//   F(x) = 1/2 - (1/pi) int_0^inf Im{ e^{-jtx} cf(t) } / t dt.
// t_stop_hint bounds where the integrand tail becomes negligible when the
// caller knows the CF's decay scale; 0 leaves termination to the panel rule.
double gil_pelaez_cdf(const std::function<Complex(double)>& cf, double x,
                      const QuadratureOptions& opt = {}, double t_stop_hint = 0.0);

} // namespace swipt
