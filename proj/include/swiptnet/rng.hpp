#pragma once

#include <cstdint>
#include <cmath>

namespace swipt {

// xoshiro256++ with a per-trial state derived from (seed, trial index) through
// splitmix64, so trial substreams are independent and reproducible no matter
// how trials are scheduled across threads.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial) {
        std::uint64_t x = seed ^ (0x9E3779B97F4A7C15ULL * (trial + 1));
        for (auto& word : s_)
            word = splitmix64(x);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform in the open interval (0, 1)
    double uniform01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double exponential() { return -std::log(uniform01()); }

    // unit-mean gamma with integer shape: mean of mu unit exponentials,
    // taken as one log of a product of uniforms (chunked against underflow)
    double gamma_int_mean1(int mu) {
        double log_sum = 0.0;
        double prod = 1.0;
        for (int k = 0; k < mu; ++k) {
            prod *= uniform01();
            if (prod < 1e-280) {
                log_sum += std::log(prod);
                prod = 1.0;
            }
        }
        return -(log_sum + std::log(prod)) / mu;
    }

    std::int64_t poisson(double mean);

private:
    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }
    static std::uint64_t splitmix64(std::uint64_t& state) {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t s_[4];
};

} // namespace swipt
