// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <string>

#include "fsosec/detail/quad1d.hpp"
#include "fsosec/errors.hpp"
#include "fsosec/specfun/bessel_k.hpp"
#include "fsosec/specfun/gamma.hpp"

namespace fsosec::specfun {

// Tricomi U(a, b, z) for z > 0 by the Laplace integral
//   U(a,b,z) = 1/Gamma(a) * int_0^inf e^{-z t} t^{a-1} (1+t)^{b-a-1} dt   (a > 0),
// with the t^{a-1} endpoint handled by the substitution t = u^{1/a} on [0,1].
// This path is deliberately independent of the Bessel-K reduction so the two
// can cross-check each other.
inline double kummer_u_direct(double a, double b, double z, double rel_tol = 1e-12) {
    if (!(z > 0.0)) throw std::domain_error("kummer_u: requires z > 0");
    if (a == 0.0) return 1.0;
    if (a < 0.0) {
        if (std::abs(a - std::round(a)) < 1e-12) {
            // polynomial case: U(-n, b, z) = (-1)^n n! L_n^{(b-1)}(z)
            const int n = static_cast<int>(std::round(-a));
            double l0 = 1.0, l1 = b - z; // L_0, L_1^{(b-1)}
            if (n == 0) return 1.0;
            for (int k = 1; k < n; ++k) {
                const double l2 = ((2.0 * k + b - z) * l1 - (k + b - 1.0) * l0) / (k + 1.0);
                l0 = l1;
                l1 = l2;
            }
            double nf = 1.0;
            for (int k = 2; k <= n; ++k) nf *= k;
            return (n % 2 == 0 ? 1.0 : -1.0) * nf * l1;
        }
        throw numerical_error("kummer_u: a < 0 non-integer not supported");
    }
    const double lga = ln_gamma(a);
    // head: t in [0,1] via t = u^{1/a}
    auto head = [&](double u) {
        const double t = std::pow(u, 1.0 / a);
        return std::exp(-z * t - lga) * std::pow(1.0 + t, b - a - 1.0) / a;
    };
    // tail: t in [1, inf)
    auto tail = [&](double t) {
        const double lg = -z * t + (a - 1.0) * std::log(t) + (b - a - 1.0) * std::log1p(t) - lga;
        return std::exp(lg);
    };
    auto r1 = detail::integrate(head, 0.0, 1.0, 0.0, 0.25 * rel_tol, 6000);
    auto r2 = detail::integrate_to_inf(tail, 1.0, 0.0, 0.25 * rel_tol, 6000);
    const double v = r1.value + r2.value;
    if (!r1.converged || !r2.converged) {
        const double ach = (r1.error + r2.error) / std::max(1e-300, std::abs(v));
        throw convergence_error("kummer_u: Laplace integral did not reach tolerance (a=" +
                                    std::to_string(a) + ", b=" + std::to_string(b) +
                                    ", z=" + std::to_string(z) + ")",
                                v, ach);
    }
    return v;
}

// ln U(v + 1/2, 2v + 1, 2x) through the identity
//   K_v(x) = sqrt(pi) (2x)^v e^{-x} U(v + 1/2, 2v + 1, 2x),
// the exact reduction for the parameter family that appears in the outage
// quadrature.  Stable for large v where the direct value overflows.
inline double kummer_u_log_bessel_family(double v, double x) {
    if (!(x > 0.0)) throw std::domain_error("kummer_u_log_bessel_family: requires x > 0");
    return bessel_k_log(v, x) + x - 0.5 * std::log(3.14159265358979323846264338327950288) -
           v * std::log(2.0 * x);
}

// U(a, b, z): Bessel-K route when (a,b) lie on the b = 2a family, generic
// Laplace integral otherwise.
inline double kummer_u(double a, double b, double z) {
    if (a > 0.0 && std::abs(b - 2.0 * a) < 1e-13 * std::max(1.0, std::abs(b))) {
        const double v = a - 0.5;
        return std::exp(kummer_u_log_bessel_family(v, 0.5 * z));
    }
    return kummer_u_direct(a, b, z);
}

} // namespace fsosec::specfun
