// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <string>

#include "fsosec/errors.hpp"

namespace fsosec::specfun {

namespace detail_gamma {

// Lanczos approximation, g = 607/128 with Godfrey's 15 coefficients
// (relative error < 1e-15 on the right half plane).
inline constexpr double lanczos_g = 607.0 / 128.0;
inline constexpr std::array<double, 15> lanczos_c = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   3.3994649984811888699e-5,
    4.6523628927048575665e-5,   -9.8374475304879564677e-5, 1.5808870322491248884e-4,
    -2.1026444172410488319e-4,  2.1743961811521264320e-4,  -1.6431810653676389022e-4,
    8.4418223983852743293e-5,   -2.6190838401581408670e-5, 3.6899182659531622704e-6};

inline constexpr double half_log_two_pi = 0.91893853320467274178032973640562;

inline double lanczos_sum(double x) {
    double s = lanczos_c[0];
    for (std::size_t k = 1; k < lanczos_c.size(); ++k) s += lanczos_c[k] / (x + static_cast<double>(k) - 1.0);
    return s;
}

inline bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

} // namespace detail_gamma

// log |Gamma(x)| with the sign of Gamma(x) in `sign`.
// Throws pole_error at non-positive integers.
inline double ln_gamma(double x, int& sign) {
    using namespace detail_gamma;
    if (std::isnan(x)) throw std::domain_error("ln_gamma: NaN argument");
    if (is_nonpositive_integer(x))
        throw pole_error("ln_gamma: pole at x = " + std::to_string(x));
    if (x >= 0.5) {
        sign = 1;
        const double t = x + lanczos_g - 0.5;
        return half_log_two_pi + (x - 0.5) * std::log(t) - t + std::log(lanczos_sum(x));
    }
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    int s1;
    const double lg1mx = ln_gamma(1.0 - x, s1);
    const double sinpix = std::sin(3.14159265358979323846264338327950288 * x);
    sign = sinpix > 0.0 ? 1 : -1;
    return std::log(3.14159265358979323846264338327950288) - std::log(std::abs(sinpix)) - lg1mx;
}

inline double ln_gamma(double x) {
    int sign;
    return ln_gamma(x, sign);
}

inline double gamma_fn(double x) {
    int sign;
    const double lg = ln_gamma(x, sign);
    return sign * std::exp(lg);
}

// ln Gamma(n) for integer n >= 1 (convenience over the double overload)
inline double ln_factorial(int n) {
    if (n < 0) throw std::domain_error("ln_factorial: negative argument");
    return ln_gamma(static_cast<double>(n) + 1.0);
}

// 1/Gamma(1+u) for |u| <= 0.5 by Taylor series (A&S 6.1.34); used by the
// Temme branch of the Bessel-K evaluation where difference quotients of
// reciprocal gammas are needed without cancellation.
inline double inv_gamma1p(double u) {
    static constexpr std::array<double, 26> c = {
        1.0,
        0.5772156649015328606065121,   -0.6558780715202538810770195,
        -0.0420026350340952355290039,  0.1665386113822914895017007,
        -0.0421977345555443367482083,  -0.0096219715278769735621149,
        0.0072189432466630995423950,   -0.0011651675918590651121139,
        -0.0002152416741149509728157,  0.0001280502823881161861531,
        -0.0000201348547807882386556,  -0.0000012504934821426706573,
        0.0000011330272319816958823,   -0.0000002056338416977607103,
        0.0000000061160951044814158,   0.0000000050020076444692229,
        -0.0000000011812745704870201,  0.0000000001043426711691100,
        0.0000000000077822634399050,   -0.0000000000036968056186422,
        0.0000000000005100370287454,   -0.0000000000000205832605356,
        -0.0000000000000053481225394,  0.0000000000000012267786282,
        -0.0000000000000001181259301};
    double s = 0.0;
    for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k) s = (s + c[k]) * u;
    return 1.0 + s;
}

} // namespace fsosec::specfun
