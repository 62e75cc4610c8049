// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <vector>

#include "fsosec/errors.hpp"

namespace fsosec::detail {

// 15-point Kronrod / 7-point Gauss pair (QUADPACK dqk15 constants).
struct gk15 {
    static constexpr double xgk[8] = {
        0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
        0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
        0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
    static constexpr double wgk[8] = {
        0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
    static constexpr double wg[4] = {
        0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
        0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

    template <class F>
    static void apply(const F& f, double a, double b, double& value, double& err) {
        const double c = 0.5 * (a + b);
        const double h = 0.5 * (b - a);
        const double fc = f(c);
        double resg = fc * wg[3];
        double resk = fc * wgk[7];
        for (int j = 0; j < 7; ++j) {
            const double x = h * xgk[j];
            const double f1 = f(c - x);
            const double f2 = f(c + x);
            resk += wgk[j] * (f1 + f2);
            if (j % 2 == 1) resg += wg[j / 2] * (f1 + f2);
        }
        value = resk * h;
        err = std::abs((resk - resg) * h);
    }
};

struct quad_result {
    double value = 0.0;
    double error = 0.0;
    long evaluations = 0;
    bool converged = false;
};

// Adaptive Gauss-Kronrod on a finite interval.
template <class F>
quad_result integrate(const F& f, double a, double b, double abs_tol, double rel_tol,
                      int max_intervals = 4000) {
    struct seg {
        double a, b, value, err;
        bool operator<(const seg& o) const { return err < o.err; }
    };
    std::priority_queue<seg> heap;
    double v, e;
    gk15::apply(f, a, b, v, e);
    heap.push({a, b, v, e});
    double total = v, total_err = e;
    long evals = 15;
    int n = 1;
    while (total_err > std::max(abs_tol, rel_tol * std::abs(total)) && n < max_intervals) {
        seg s = heap.top();
        heap.pop();
        const double mid = 0.5 * (s.a + s.b);
        double v1, e1, v2, e2;
        gk15::apply(f, s.a, mid, v1, e1);
        gk15::apply(f, mid, s.b, v2, e2);
        evals += 30;
        total += v1 + v2 - s.value;
        total_err += e1 + e2 - s.err;
        heap.push({s.a, mid, v1, e1});
        heap.push({mid, s.b, v2, e2});
        ++n;
    }
    return {total, total_err, evals, total_err <= std::max(abs_tol, rel_tol * std::abs(total))};
}

// Integral over [a, inf) via the rational map x = a + t/(1-t), t in [0,1).
template <class F>
quad_result integrate_to_inf(const F& f, double a, double abs_tol, double rel_tol,
                             int max_intervals = 4000) {
    auto g = [&](double t) {
        const double om = 1.0 - t;
        const double x = a + t / om;
        const double jac = 1.0 / (om * om);
        const double fx = f(x);
        return fx * jac;
    };
    return integrate(g, 0.0, 1.0 - 1e-14, abs_tol, rel_tol, max_intervals);
}

} // namespace fsosec::detail
