#include "swiptnet/rng.hpp"

namespace swipt {

// Poisson sampling: inversion by uniform products for small means, Hoermann's
// PTRS transformed rejection otherwise.
std::int64_t TrialRng::poisson(double mean) {
    if (mean <= 0.0)
        return 0;
    if (mean < 10.0) {
        const double limit = std::exp(-mean);
        std::int64_t k = 0;
        double prod = uniform01();
        while (prod > limit) {
            prod *= uniform01();
            ++k;
        }
        return k;
    }
    const double b = 0.931 + 2.53 * std::sqrt(mean);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    const double log_mean = std::log(mean);
    for (;;) {
        double u = uniform01() - 0.5;
        double v = uniform01();
        double us = 0.5 - std::fabs(u);
        double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= v_r)
            return static_cast<std::int64_t>(kf);
        if (kf < 0.0 || (us < 0.013 && v > us))
            continue;
        if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
            kf * log_mean - mean - std::lgamma(kf + 1.0))
            return static_cast<std::int64_t>(kf);
    }
}

} // namespace swipt
