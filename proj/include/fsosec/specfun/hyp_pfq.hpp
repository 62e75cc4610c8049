// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "fsosec/detail/scaled.hpp"
#include "fsosec/errors.hpp"

namespace fsosec::specfun {

namespace detail_pfq {

inline bool is_nonpositive_int(double x) {
    return x <= 0.0 && std::abs(x - std::round(x)) < 1e-12;
}

} // namespace detail_pfq

// pFq(a; b; z) by the power series with a relative-term stopping rule.
// Result returned in signed log-magnitude form so large values do not overflow;
// terminates when three consecutive terms each fall below rel_tol of the
// running sum (single-term tests can be fooled by accidental zeros).
inline detail::log_value hyp_pfq_scaled(std::span<const double> a, std::span<const double> b,
                                        double z, double rel_tol = 1e-15,
                                        long max_terms = 2000000) {
    using namespace detail_pfq;
    for (double bj : b)
        if (is_nonpositive_int(bj))
            throw pole_error("hyp_pfq: lower parameter at non-positive integer " +
                             std::to_string(bj));
    if (a.size() == b.size() + 1 && std::abs(z) >= 1.0)
        throw convergence_error("hyp_pfq: series diverges for p = q+1 and |z| >= 1");
    if (a.size() > b.size() + 1 && z != 0.0)
        throw convergence_error("hyp_pfq: divergent shape p > q+1");

    double term = 1.0;       // mantissa of current term
    double scale = 0.0;      // ln of the scale carried out of term and sum
    double sum = 1.0, comp = 0.0;
    int small_streak = 0;
    for (long n = 0; n < max_terms; ++n) {
        double factor = z / (n + 1.0);
        for (double aj : a) factor *= (aj + n);
        for (double bj : b) factor /= (bj + n);
        term *= factor;
        // Neumaier addition of term into (sum, comp)
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
        if (std::abs(term) <= rel_tol * std::abs(sum)) {
            if (++small_streak >= 3) {
                const double total = sum + comp;
                if (total == 0.0) return {};
                return detail::log_value{std::log(std::abs(total)) + scale,
                                         total > 0.0 ? 1 : -1};
            }
        } else {
            small_streak = 0;
        }
        if (std::abs(sum) > 1e250 || std::abs(term) > 1e250) {
            constexpr double down = 1e-200;
            sum *= down;
            comp *= down;
            term *= down;
            scale += 460.51701859880913680359829093687; // -ln(1e-200)
        }
    }
    throw convergence_error("hyp_pfq: series did not converge within term budget",
                            (sum + comp) * std::exp(scale));
}

inline double hyp_pfq(std::span<const double> a, std::span<const double> b, double z,
                      double rel_tol = 1e-15) {
    return hyp_pfq_scaled(a, b, z, rel_tol).to_double();
}

inline double hyp_pfq(std::initializer_list<double> a, std::initializer_list<double> b,
                      double z, double rel_tol = 1e-15) {
    return hyp_pfq(std::span<const double>(a.begin(), a.size()),
                   std::span<const double>(b.begin(), b.size()), z, rel_tol);
}

} // namespace fsosec::specfun
