// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "fsosec/detail/quad1d.hpp"
#include "fsosec/detail/scaled.hpp"
#include "fsosec/errors.hpp"
#include "fsosec/specfun/bessel_k.hpp"
#include "fsosec/specfun/gamma.hpp"
#include "fsosec/specfun/hyp_pfq.hpp"

namespace fsosec::specfun {

// Parameter block for the three Meijer-G shapes the secrecy expressions need:
//   (2,0,0,2)  joint-density kernel (reduces to Bessel K),
//   (4,1,1,5)  inner outage integral,
//   (4,5,5,5)  PNZSC reduction.
// epsilon_shift splits confluent poles when lower-parameter differences are
// integers; the induced error after Richardson extrapolation is O(eps^2), and
// halving epsilon_shift moves values by less than ~100*eps*|G| (enforced by the
// test grid).
struct MeijerParams {
    int m = 0, n = 0, p = 0, q = 0;
    std::vector<double> a;
    std::vector<double> b;
    double epsilon_shift = 1e-6;

    void validate() const {
        const bool shape_ok = (m == 2 && n == 0 && p == 0 && q == 2) ||
                              (m == 4 && n == 1 && p == 1 && q == 5) ||
                              (m == 4 && n == 5 && p == 5 && q == 5);
        if (!shape_ok)
            throw std::domain_error("meijer_g: unsupported shape (m,n,p,q)=(" +
                                    std::to_string(m) + "," + std::to_string(n) + "," +
                                    std::to_string(p) + "," + std::to_string(q) + ")");
        if (a.size() != static_cast<std::size_t>(p) || b.size() != static_cast<std::size_t>(q))
            throw std::domain_error("meijer_g: parameter list sizes disagree with (p,q)");
        if (!(epsilon_shift > 0.0) || epsilon_shift > 1e-5)
            throw std::domain_error("meijer_g: epsilon_shift must lie in (0, 1e-5]");
    }
};

namespace detail_meijer {

struct lgamma_term {
    double log = 0.0;
    int sign = 1;
    bool pole = false;
};

inline lgamma_term lgamma_checked(double x) {
    lgamma_term r;
    if (x <= 0.0 && std::abs(x - std::round(x)) < 1e-13) {
        r.pole = true;
        return r;
    }
    r.log = ln_gamma(x, r.sign);
    return r;
}

inline bool near_integer(double x, double tol = 1e-9) {
    return std::abs(x - std::round(x)) < tol;
}

// One Slater evaluation: sum over the first m lower parameters of
// Gamma-prefactored pFq terms (DLMF 16.17.2).  All four shapes used here have
// (-1)^{p-m-n} = +1.  Returns the signed log value plus a cancellation gauge.
struct slater_result {
    detail::log_value value;
    double digits_cancelled = 0.0;
};

inline slater_result slater_once(int m, int n, std::span<const double> a,
                                 std::span<const double> b, double z) {
    const int p = static_cast<int>(a.size());
    const int q = static_cast<int>(b.size());
    const double lnz = std::log(z);
    detail::scaled_accumulator acc;
    std::vector<double> up, low;
    for (int h = 0; h < m; ++h) {
        double lg = 0.0;
        int sign = 1;
        bool zero_term = false;
        for (int g = 0; g < m; ++g) {
            if (g == h) continue;
            const auto t = lgamma_checked(b[g] - b[h]);
            if (t.pole)
                throw numerical_error(
                    "meijer_g: confluent lower parameters; epsilon shift required");
            lg += t.log;
            sign *= t.sign;
        }
        for (int g = 0; g < n; ++g) {
            const auto t = lgamma_checked(1.0 + b[h] - a[g]);
            if (t.pole)
                throw numerical_error("meijer_g: numerator pole at 1+b_h-a_g; shift required");
            lg += t.log;
            sign *= t.sign;
        }
        for (int g = m; g < q && !zero_term; ++g) {
            const auto t = lgamma_checked(1.0 + b[h] - b[g]);
            if (t.pole) zero_term = true; // 1/Gamma(nonpositive integer) = 0
            else {
                lg -= t.log;
                sign *= t.sign;
            }
        }
        for (int g = n; g < p && !zero_term; ++g) {
            const auto t = lgamma_checked(a[g] - b[h]);
            if (t.pole) zero_term = true;
            else {
                lg -= t.log;
                sign *= t.sign;
            }
        }
        if (zero_term) continue;
        up.clear();
        low.clear();
        for (int g = 0; g < p; ++g) up.push_back(1.0 + b[h] - a[g]);
        for (int g = 0; g < q; ++g)
            if (g != h) low.push_back(1.0 + b[h] - b[g]);
        const auto F = hyp_pfq_scaled(up, low, z);
        if (F.sign == 0) continue;
        acc.add(lg + b[h] * lnz + F.log, sign * F.sign);
    }
    return {acc.result(), acc.digits_cancelled()};
}

// Slater with automatic epsilon pole-splitting and Richardson extrapolation.
inline detail::log_value slater_regularized(int m, int n, std::span<const double> a,
                                            std::span<const double> b, double z, double eps,
                                            double* richardson_delta = nullptr) {
    bool confluent = false;
    for (int i = 0; i < m && !confluent; ++i)
        for (int j = i + 1; j < m && !confluent; ++j)
            if (near_integer(b[i] - b[j])) confluent = true;
    for (int h = 0; h < m && !confluent; ++h)
        for (int g = 0; g < n && !confluent; ++g) {
            const double d = 1.0 + b[h] - a[g];
            if (d < 0.5 && near_integer(d)) confluent = true;
        }

    if (!confluent) {
        const auto r = slater_once(m, n, a, b, z);
        if (r.digits_cancelled > 10.5)
            throw numerical_error("meijer_g: Slater cancellation beyond tolerance (" +
                                  std::to_string(r.digits_cancelled) + " digits at z = " +
                                  std::to_string(z) + ")");
        if (richardson_delta) *richardson_delta = 0.0;
        return r.value;
    }

    auto shifted_eval = [&](double e) {
        std::vector<double> bs(b.begin(), b.end());
        for (std::size_t j = 0; j < bs.size(); ++j) bs[j] += e * static_cast<double>(j + 1);
        return slater_once(m, n, a, bs, z);
    };
    const auto g1 = shifted_eval(eps);
    const auto g2 = shifted_eval(0.5 * eps);
    if (g1.digits_cancelled > 10.5 || g2.digits_cancelled > 10.5)
        throw numerical_error("meijer_g: Slater cancellation beyond tolerance near confluence");
    // linear Richardson: G ~ 2 G(eps/2) - G(eps)
    detail::scaled_accumulator acc;
    acc.add(std::log(2.0) + g2.value.log, g2.value.sign);
    acc.add(g1.value.log, -g1.value.sign);
    const auto extrap = acc.result();
    if (richardson_delta) {
        detail::scaled_accumulator diff;
        diff.add(g2.value.log, g2.value.sign);
        diff.add(g1.value.log, -g1.value.sign);
        const auto d = diff.result();
        *richardson_delta = d.sign == 0 ? 0.0 : std::exp(d.log - std::max(extrap.log, g2.value.log));
    }
    return extrap;
}

// Detects the G^{4,1}_{1,5} parameter family coming from the outage reduction:
//   a1 = 1 - s1,  b = ( v/4, (v+2)/4, -v/4, (2-v)/4, -s1 ).
inline bool outage_family(std::span<const double> a, std::span<const double> b, double& v,
                          double& s1) {
    v = 4.0 * b[0];
    s1 = -b[4];
    const double tol = 1e-9;
    return std::abs(a[0] - (1.0 - s1)) < tol && std::abs(b[1] - (b[0] + 0.5)) < tol &&
           std::abs(b[2] + b[0]) < tol && std::abs(b[3] - (0.5 - b[0])) < tol &&
           2.0 * s1 - 0.5 * v > 0.0 && 2.0 * s1 + 0.5 * v > 0.0;
}

// Exact large-argument representation for the outage family:
//   G(z) = 2 pi z^{-s1} [ M - T(z) ],
//   M    = 2^{1-4 s1} Gamma(2 s1 - v/2) Gamma(2 s1 + v/2),
//   T(z) = 2 * 4^{1-4 s1} int_{4 z^{1/4}}^inf x^{4 s1 - 1} K_v(x) dx,
// which follows from G being the partial Mellin transform of the Bessel kernel.
// Free of the cancellation that kills the Slater form at large z.
inline detail::log_value g41_bessel_tail(double v, double s1, double z) {
    const double ln_m = (1.0 - 4.0 * s1) * std::log(2.0) + ln_gamma(2.0 * s1 - 0.5 * v) +
                        ln_gamma(2.0 * s1 + 0.5 * v);
    const double x0 = 4.0 * std::pow(z, 0.25);
    const double scale = (4.0 * s1 - 1.0) * std::log(x0) + bessel_k_log(v, x0);
    auto tail = [&](double x) {
        return std::exp((4.0 * s1 - 1.0) * std::log(x) + bessel_k_log(v, x) - scale);
    };
    const auto r = detail::integrate_to_inf(tail, x0, 0.0, 1e-12, 4000);
    const double ln_t =
        std::log(2.0) + (1.0 - 4.0 * s1) * std::log(4.0) + scale + std::log(r.value);
    const double ratio = std::exp(ln_t - ln_m);
    if (ratio >= 1.0)
        throw numerical_error("meijer_g: Bessel-tail continuation outside its validity range");
    const double lg = std::log(2.0 * 3.14159265358979323846264338327950288) -
                      s1 * std::log(z) + ln_m + std::log1p(-ratio);
    return detail::log_value{lg, 1};
}

} // namespace detail_meijer

// Signed log-magnitude Meijer-G evaluation (primary engine).
inline detail::log_value meijer_g_log(const MeijerParams& params, double x) {
    using namespace detail_meijer;
    params.validate();
    if (!(x > 0.0)) throw std::domain_error("meijer_g: requires x > 0");

    if (params.m == 2 && params.q == 2) {
        // G^{2,0}_{0,2}(x | -; b1, b2) = 2 x^{(b1+b2)/2} K_{b1-b2}(2 sqrt(x))
        const double b1 = params.b[0], b2 = params.b[1];
        const double lg = std::log(2.0) + 0.5 * (b1 + b2) * std::log(x) +
                          bessel_k_log(std::abs(b1 - b2), 2.0 * std::sqrt(x));
        return detail::log_value{lg, 1};
    }

    if (params.m == 4 && params.n == 1) {
        double v, s1;
        const bool family = outage_family(params.a, params.b, v, s1);
        if (family && x > 30.0) return g41_bessel_tail(v, s1, x);
        return slater_regularized(4, 1, params.a, params.b, x, params.epsilon_shift);
    }

    // (4,5,5,5)
    if (std::abs(x - 1.0) < 1e-12)
        throw numerical_error("meijer_g: G^{4,5}_{5,5} is singular to evaluate at argument 1");
    if (x < 1.0) return slater_regularized(4, 5, params.a, params.b, x, params.epsilon_shift);
    // argument inversion: G^{m,n}_{p,q}(x | a; b) = G^{n,m}_{q,p}(1/x | 1-b; 1-a)
    std::vector<double> ai(5), bi(5);
    for (int i = 0; i < 5; ++i) {
        ai[i] = 1.0 - params.b[i];
        bi[i] = 1.0 - params.a[i];
    }
    return slater_regularized(5, 4, ai, bi, 1.0 / x, params.epsilon_shift);
}

inline double meijer_g(const MeijerParams& params, double x) {
    const auto v = meijer_g_log(params, x);
    if (v.sign == 0) return 0.0;
    if (v.log > 709.0) throw numerical_error("meijer_g: value overflows double; use meijer_g_log");
    return v.to_double();
}

} // namespace fsosec::specfun
