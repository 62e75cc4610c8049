// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "fsosec/errors.hpp"
#include "fsosec/specfun/gamma.hpp"

namespace fsosec::specfun {

namespace detail_bessel {

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr int max_iter = 20000;
inline constexpr double eps = 1.0e-16;

// K_mu(x) and K_{mu+1}(x) for |mu| <= 1/2, x <= 2 (Temme 1975 series).
inline void temme_k(double mu, double x, double& kmu, double& kmu1) {
    const double x2 = 0.5 * x;
    const double pimu = pi * mu;
    const double fact = (std::abs(pimu) < 1e-30) ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    const double fact2 = (std::abs(e) < 1e-30) ? 1.0 : std::sinh(e) / e;
    // gam1 = [1/Gamma(1-mu) - 1/Gamma(1+mu)]/(2 mu), gam2 = [1/Gamma(1-mu) + 1/Gamma(1+mu)]/2
    const double gp = inv_gamma1p(mu);   // 1/Gamma(1+mu)
    const double gm = inv_gamma1p(-mu);  // 1/Gamma(1-mu)
    double gam1;
    if (std::abs(mu) > 1e-5) {
        gam1 = (gm - gp) / (2.0 * mu);
    } else {
        // odd-order Taylor of -(d/du)[1/Gamma(1+u)] around 0
        constexpr double c1 = 0.5772156649015328606065121;
        constexpr double c3 = -0.0420026350340952355290039;
        constexpr double c5 = -0.0096219715278769735621149;
        gam1 = -(c1 + mu * mu * (c3 + mu * mu * c5));
    }
    const double gam2 = 0.5 * (gm + gp);
    double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / gp; // Gamma(1+mu) e^{mu d} / 2
    double q = 0.5 / (e * gm); // Gamma(1-mu) e^{-mu d} / 2
    double c = 1.0;
    d = x2 * x2;
    double sum1 = p;
    int i = 1;
    for (; i <= max_iter; ++i) {
        ff = (i * ff + p + q) / (i * i - mu * mu);
        c *= d / i;
        p /= (i - mu);
        q /= (i + mu);
        const double del = c * ff;
        sum += del;
        const double del1 = c * (p - i * ff);
        sum1 += del1;
        if (std::abs(del) < std::abs(sum) * eps) break;
    }
    if (i > max_iter) throw convergence_error("bessel_k: Temme series did not converge");
    kmu = sum;
    kmu1 = sum1 * (2.0 / x);
}

// Steed/Thompson-Barnett CF2 for x > 2: returns scaled khat_mu = K_mu(x) e^x and the
// combination h needed for K_{mu+1}.
inline void cf2_k(double mu, double x, double& khat_mu, double& khat_mu1) {
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25 - mu * mu;
    double q = a1, c = a1, a = -a1;
    double s = 1.0 + q * delh;
    int i = 2;
    for (; i <= max_iter; ++i) {
        a -= 2 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < eps) break;
    }
    if (i > max_iter) throw convergence_error("bessel_k: CF2 did not converge");
    h = a1 * h;
    khat_mu = std::sqrt(pi / (2.0 * x)) / s; // = K_mu(x) e^x
    khat_mu1 = khat_mu * (mu + x + 0.5 - h) / x;
}

} // namespace detail_bessel

// ln K_nu(x), valid for nu >= 0, x > 0; stable for large nu where K overflows.
inline double bessel_k_log(double nu, double x) {
    using namespace detail_bessel;
    if (!(x > 0.0)) throw std::domain_error("bessel_k: requires x > 0");
    if (nu < 0.0) nu = -nu; // K_{-nu} = K_nu
    const int n = static_cast<int>(nu + 0.5);
    const double mu = nu - n; // |mu| <= 1/2

    double kmu, kmu1, log_scale;
    if (x <= 2.0) {
        temme_k(mu, x, kmu, kmu1);
        log_scale = 0.0;
    } else {
        cf2_k(mu, x, kmu, kmu1); // e^x-scaled
        log_scale = -x;
    }
    // upward recurrence K_{v+1} = K_{v-1} + (2v/x) K_v, rescaling to avoid overflow
    constexpr double big = 1e280;
    const double log_big = std::log(big);
    for (int k = 1; k <= n; ++k) {
        const double knext = kmu + (2.0 * (mu + k) / x) * kmu1;
        kmu = kmu1;
        kmu1 = knext;
        if (kmu1 > big) {
            kmu /= big;
            kmu1 /= big;
            log_scale += log_big;
        }
    }
    return std::log(kmu) + log_scale;
}

// K_nu(x); throws numerical_error if the value overflows double range.
inline double bessel_k(double nu, double x) {
    const double lk = bessel_k_log(nu, x);
    if (lk > 709.0)
        throw numerical_error("bessel_k: overflow (ln K = " + std::to_string(lk) +
                              "); use bessel_k_log");
    return std::exp(lk);
}

} // namespace fsosec::specfun
