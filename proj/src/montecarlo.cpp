#include "swiptnet/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <thread>

#include "swiptnet/rng.hpp"

namespace swipt {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr std::int64_t kChunk = 4096; // trials per reduction block

int hardware_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

// Runs fn(chunk_index) over all chunks on the requested number of threads.
// Chunk results must be written into per-chunk slots so the later in-order
// reduction is independent of scheduling.
template <class Fn>
void run_chunks(std::int64_t n_chunks, bool parallel, Fn&& fn) {
    int n_threads = parallel ? std::min<std::int64_t>(hardware_threads(), n_chunks) : 1;
    if (n_threads <= 1) {
        for (std::int64_t c = 0; c < n_chunks; ++c)
            fn(c);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int i = 0; i < n_threads; ++i)
        pool.emplace_back([&] {
            for (;;) {
                std::int64_t c = next.fetch_add(1);
                if (c >= n_chunks)
                    return;
                fn(c);
            }
        });
    for (auto& th : pool)
        th.join();
}

// Common sampling walk.  Draw order is fixed: serving fade, Poisson count,
// then per point (distance, LOS, class, fade).  Every consumer of a trial
// sees the identical realization.
template <class Visit>
double walk_disk(const NetworkParams& p, const McSettings& s, std::uint64_t trial, Visit&& visit) {
    TrialRng rng(s.seed, trial);
    const double h0 = rng.gamma_int_mean1(p.mu);
    const auto classes = gain_pmf(p.antenna);
    const double q01 = classes[0].prob;
    const double q02 = classes[0].prob + classes[1].prob;
    const double R = s.disk_radius;
    const std::int64_t n = rng.poisson(p.lam * kPi * R * R);
    for (std::int64_t i = 0; i < n; ++i) {
        const double d = R * std::sqrt(rng.uniform01());
        if (rng.uniform01() >= p.p_L)
            continue; // blocked link
        const double u = rng.uniform01();
        const double gain = u < q01 ? classes[0].gain : (u < q02 ? classes[1].gain : classes[2].gain);
        visit(d, gain, rng.gamma_int_mean1(p.mu));
    }
    return h0;
}

struct TrialStats {
    double h0;
    double J_a;  // sum gain*fade*d^-alpha      (P_t factored out)
    double J_ae; // sum gain*fade*d^-(alpha+2)
};

TrialStats trial_stats(const NetworkParams& p, const McSettings& s, std::uint64_t trial) {
    TrialStats st{0.0, 0.0, 0.0};
    st.h0 = walk_disk(p, s, trial, [&](double d, double gain, double fade) {
        const double w = gain * fade * std::pow(d, -p.alpha);
        st.J_a += w;
        st.J_ae += w / (d * d);
    });
    return st;
}

} // namespace

void McSettings::validate(const NetworkParams& p) const {
    if (trials < 1)
        throw RangeError("mc trials must be at least 1");
    if (disk_radius < std::max(1.0, 2.0 * p.d0))
        throw RangeError("mc disk_radius must cover the serving link (>= 2*d0 and >= 1 m)");
}

double wilson_half_width(double p_hat, std::int64_t n) {
    const double z = 1.959963984540054; // 95%
    const double z2 = z * z;
    return z * std::sqrt(p_hat * (1.0 - p_hat) / n + z2 / (4.0 * n * n)) / (1.0 + z2 / n);
}

double truncated_tail_mean(const NetworkParams& p, double a_exp, double radius) {
    if (a_exp <= 2.0)
        throw DomainError("truncated_tail_mean: exponent must exceed 2");
    double sum = 0.0;
    for (const auto& cls : gain_pmf(p.antenna))
        sum += 2.0 * kPi * (p.p_L * cls.prob * p.lam) * (cls.gain * p.P_t) *
               std::pow(radius, 2.0 - a_exp) / (a_exp - 2.0);
    return sum;
}

Realization sample_realization(const NetworkParams& p, const McSettings& s, std::uint64_t trial) {
    p.validate();
    s.validate(p);
    Realization r;
    r.interferers.reserve(static_cast<std::size_t>(
        p.lam * p.p_L * kPi * s.disk_radius * s.disk_radius * 1.1) + 8);
    r.h0 = walk_disk(p, s, trial, [&](double d, double gain, double fade) {
        r.interferers.push_back({d, gain, fade});
    });
    return r;
}

std::vector<EstimateSet> estimate_power_grid(const NetworkParams& p, const CoverageThresholds& th,
                                             const McSettings& s, std::span<const double> P_t_grid) {
    p.validate();
    s.validate(p);
    const double delta = harvest_threshold(th.eps, p.rho, p.rectenna);
    const double M2 = p.serving_gain();
    const double d0a = std::pow(p.d0, -p.alpha);
    const double d0ae = std::pow(p.d0, -p.alpha - 2.0);
    // per-unit-P_t far-field means
    const double C_a = s.tail_compensation ? truncated_tail_mean(p, p.alpha, s.disk_radius) / p.P_t : 0.0;
    const double C_ae = s.tail_compensation ? truncated_tail_mean(p, p.alpha + 2.0, s.disk_radius) / p.P_t : 0.0;

    const std::size_t npt = P_t_grid.size();
    const std::int64_t n_chunks = (s.trials + kChunk - 1) / kChunk;
    std::vector<std::array<std::int64_t, 5>> counts(n_chunks * npt, {0, 0, 0, 0, 0});

    run_chunks(n_chunks, s.parallel, [&](std::int64_t c) {
        const std::int64_t lo = c * kChunk;
        const std::int64_t hi = std::min<std::int64_t>(lo + kChunk, s.trials);
        for (std::int64_t trial = lo; trial < hi; ++trial) {
            const TrialStats st = trial_stats(p, s, static_cast<std::uint64_t>(trial));
            const double Ja = st.J_a + C_a;
            const double Jae = st.J_ae + C_ae;
            for (std::size_t g = 0; g < npt; ++g) {
                const double Pt = P_t_grid[g];
                const double P0 = M2 * Pt;
                const double signal = P0 * st.h0 * d0a;
                const double I = Pt * Ja;
                const double mpe = (P0 * st.h0 * d0ae + Pt * Jae) / (4.0 * kPi);
                const double sinr = p.rho * signal / (p.rho * (p.N0 + I) + p.N_C);
                const bool ok_s = mpe < th.tau;
                const bool ok_o = sinr > th.gamma;
                const bool ok_e = signal + I > delta;
                auto& k = counts[c * npt + g];
                k[0] += ok_s;
                k[1] += ok_o;
                k[2] += ok_e;
                k[3] += ok_o && ok_e;
                k[4] += ok_s && ok_o && ok_e;
            }
        }
    });

    std::vector<EstimateSet> out(npt);
    for (std::size_t g = 0; g < npt; ++g) {
        std::array<std::int64_t, 5> total{0, 0, 0, 0, 0};
        for (std::int64_t c = 0; c < n_chunks; ++c)
            for (int j = 0; j < 5; ++j)
                total[j] += counts[c * npt + g][j];
        auto mk = [&](std::int64_t hits) {
            const double v = static_cast<double>(hits) / s.trials;
            return ProbabilityEstimate{v, wilson_half_width(v, s.trials), s.trials};
        };
        out[g] = {mk(total[0]), mk(total[1]), mk(total[2]), mk(total[3]), mk(total[4])};
    }
    return out;
}

EstimateSet estimate(const NetworkParams& p, const CoverageThresholds& th, const McSettings& s) {
    const double grid[1] = {p.P_t};
    return estimate_power_grid(p, th, s, grid)[0];
}

std::vector<Complex> empirical_cf(std::span<const double> ts, const NetworkParams& p, double a_exp,
                                  const McSettings& s) {
    p.validate();
    s.validate(p);
    if (a_exp <= 2.0)
        throw DomainError("empirical_cf: exponent must exceed 2");
    const double comp = s.tail_compensation ? truncated_tail_mean(p, a_exp, s.disk_radius) : 0.0;
    const std::size_t nt = ts.size();
    const std::int64_t n_chunks = (s.trials + kChunk - 1) / kChunk;
    std::vector<double> re(n_chunks * nt, 0.0), im(n_chunks * nt, 0.0);

    run_chunks(n_chunks, s.parallel, [&](std::int64_t c) {
        const std::int64_t lo = c * kChunk;
        const std::int64_t hi = std::min<std::int64_t>(lo + kChunk, s.trials);
        for (std::int64_t trial = lo; trial < hi; ++trial) {
            double J = 0.0;
            walk_disk(p, s, static_cast<std::uint64_t>(trial),
                      [&](double d, double gain, double fade) {
                          J += gain * fade * std::pow(d, -a_exp);
                      });
            const double I = p.P_t * J + comp;
            for (std::size_t i = 0; i < nt; ++i) {
                re[c * nt + i] += std::cos(ts[i] * I);
                im[c * nt + i] += std::sin(ts[i] * I);
            }
        }
    });

    std::vector<Complex> out(nt);
    for (std::size_t i = 0; i < nt; ++i) {
        double sr = 0.0, si = 0.0;
        for (std::int64_t c = 0; c < n_chunks; ++c) {
            sr += re[c * nt + i];
            si += im[c * nt + i];
        }
        out[i] = Complex(sr / s.trials, si / s.trials);
    }
    return out;
}

Complex empirical_cf(double t, const NetworkParams& p, double a_exp, const McSettings& s) {
    const double ts[1] = {t};
    return empirical_cf(std::span<const double>(ts, 1), p, a_exp, s)[0];
}

ProbabilityEstimate exact_joint_with_mpe(const NetworkParams& p, const CoverageThresholds& th,
                                         const McSettings& s) {
    return estimate(p, th, s).joint_all;
}

} // namespace swipt
