// SPDX-License-Identifier: Apache-2.0
// Test-only oracle: Spouge's approximation to ln Gamma, independent of the
// Lanczos implementation in the library.
#pragma once

#include <cmath>
#include <vector>

namespace fsosec::testing {

inline double spouge_ln_gamma(double x) {
    constexpr int a = 13;
    static const std::vector<double> c = [] {
        std::vector<double> v(a);
        v[0] = std::sqrt(2.0 * 3.14159265358979323846264338327950288);
        double fact = 1.0;
        for (int k = 1; k < a; ++k) {
            v[k] = std::exp(static_cast<double>(a - k)) *
                   std::pow(static_cast<double>(a - k), k - 0.5) / fact;
            fact *= -k;
        }
        return v;
    }();
    if (x < 0.5) {
        // reflection to keep the series in its accurate range
        const double pi = 3.14159265358979323846264338327950288;
        return std::log(pi / std::abs(std::sin(pi * x))) - spouge_ln_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    double s = c[0];
    for (int k = 1; k < a; ++k) s += c[k] / (z + k);
    return (z + 0.5) * std::log(z + a) - (z + a) + std::log(s);
}

} // namespace fsosec::testing
