// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

#include "fsosec/errors.hpp"

namespace fsosec::detail {

// splitmix64 step (Vigna).  Used both as a mixer and as the per-sample generator.
inline std::uint64_t splitmix64_next(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Counter-based stream: each (seed, index) pair yields an independent generator,
// so sample i is reproducible regardless of evaluation order or thread count.
class counter_rng {
public:
    counter_rng(std::uint64_t seed, std::uint64_t index) noexcept {
        std::uint64_t s = seed;
        std::uint64_t a = splitmix64_next(s);
        s = index ^ 0xD1B54A32D192ED03ULL;
        std::uint64_t b = splitmix64_next(s);
        state_ = a ^ (b + 0x9E3779B97F4A7C15ULL);
        (void)splitmix64_next(state_); // decouple from the raw mix
    }

    std::uint64_t next_u64() noexcept { return splitmix64_next(state_); }

    // uniform on (0,1), both endpoints excluded
    double uniform() noexcept {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double normal() noexcept {
        // Box-Muller; one value per call keeps the stream layout simple
        double u1 = uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Gamma(shape, 1) by Marsaglia-Tsang squeeze; shape > 0
    double gamma(double shape) {
        if (shape < 1.0) {
            const double u = uniform();
            return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    // Poisson(lambda) via exponential interarrival times (stable for large lambda)
    long poisson(double lambda) {
        if (lambda <= 0.0) return 0;
        if (lambda > 50000.0)
            throw numerical_error("poisson: lambda too large for interarrival sampling");
        double acc = 0.0;
        long n = -1;
        while (acc <= lambda) {
            acc += -std::log(uniform());
            ++n;
        }
        return n;
    }

private:
    std::uint64_t state_;
};

} // namespace fsosec::detail
