#include "swiptnet/quadrature.hpp"

#include <cmath>
#include <limits>

namespace swipt {

GaussLegendre::GaussLegendre(int order) : x(order), w(order) {
    if (order < 2)
        throw RangeError("panel_order must be at least 2");
    const int n = order;
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(3.141592653589793 * (i + 0.75) / (n + 0.5));
        double z1, pp;
        do {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            z1 = z;
            z = z1 - p1 / pp;
        } while (std::fabs(z - z1) > 1e-15);
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

namespace quad {

double stop_time(const std::function<double(double)>& envelope, double osc_freq, double abs_tol) {
    const double target = abs_tol / 10.0;
    auto bound = [&](double T) {
        double span = osc_freq > 0.0 ? std::min(T, 2.0 / osc_freq) : T;
        return envelope(T) * span;
    };
    double lo = 1e-6, hi = 1e12;
    if (bound(lo) <= target)
        return lo;
    if (bound(hi) > target)
        return hi;
    for (int i = 0; i < 100; ++i) {
        double mid = std::sqrt(lo * hi);
        if (bound(mid) <= target)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

double clamp_probability(double raw, double abs_tol) {
    if (!std::isfinite(raw) || raw < -10.0 * abs_tol || raw > 1.0 + 10.0 * abs_tol)
        throw DiagnosticError("probability integral out of bounds: " + std::to_string(raw));
    return std::min(1.0, std::max(0.0, raw));
}

} // namespace quad

double gil_pelaez_cdf(const std::function<Complex(double)>& cf, double x,
                      const QuadratureOptions& opt, double t_stop_hint) {
    auto integrand = [&](double t) {
        Complex rot(std::cos(t * x), -std::sin(t * x));
        return std::imag(rot * cf(t)) / t;
    };
    double integral = quad::integrate_oscillatory(integrand, std::fabs(x), t_stop_hint, opt);
    return quad::clamp_probability(0.5 - integral / 3.141592653589793, opt.abs_tol);
}

} // namespace swipt
