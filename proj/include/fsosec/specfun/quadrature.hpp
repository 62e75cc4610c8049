// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "fsosec/errors.hpp"

namespace fsosec::specfun {

// Gaussian rule for integrals of the form  int_0^inf e^{-x^2} f(x) dx
// (the weight behind the modified Gauss-Chebyshev evaluation of the outage
// integral).  Nodes are strictly increasing and positive.
struct QuadratureRule {
    int order = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

namespace detail_quad {

// 60-point Gauss-Legendre on [-1,1], computed by Newton iteration on the
// Legendre recurrence; used only to discretize the half-range weight.
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

// Discretization of e^{-x^2} on [0, 14.5] by composite Gauss-Legendre panels,
// accurate to machine precision for polynomials up to degree ~130.
inline void discretized_measure(std::vector<double>& X, std::vector<double>& W) {
    std::vector<double> gx, gw;
    gauss_legendre(60, gx, gw);
    X.clear();
    W.clear();
    double lo = 0.0, width = 0.02;
    const double xmax = 14.5;
    while (lo < xmax) {
        const double hi = std::min(lo + width, xmax);
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        for (std::size_t i = 0; i < gx.size(); ++i) {
            const double xx = mid + half * gx[i];
            X.push_back(xx);
            W.push_back(half * gw[i] * std::exp(-xx * xx));
        }
        lo = hi;
        width *= 1.3;
    }
}

// Lanczos with plane rotations (Gragg-Harrod RKPW): recurrence coefficients
// alpha_k, beta_k of the monic orthogonal polynomials of the discrete measure.
inline void rkpw(const std::vector<double>& X, const std::vector<double>& W, int L,
                 std::vector<double>& alpha, std::vector<double>& beta) {
    const std::size_t N = X.size();
    std::vector<double> p0(X), p1(N, 0.0);
    p1[0] = W[0];
    for (std::size_t i = 0; i + 1 < N; ++i) {
        double pi = W[i + 1];
        double gam = 1.0, sig = 0.0, t = 0.0;
        const double xlam = X[i + 1];
        for (std::size_t k = 0; k <= i + 1; ++k) {
            const double rho = p1[k] + pi;
            const double tmp = gam * rho;
            const double tsig = sig;
            if (rho <= 0.0) {
                gam = 1.0;
                sig = 0.0;
            } else {
                gam = p1[k] / rho;
                sig = pi / rho;
            }
            const double tk = sig * (p0[k] - xlam) - gam * t;
            p0[k] -= (tk - t);
            t = tk;
            pi = (sig <= 0.0) ? tsig * p1[k] : t * t / sig;
            p1[k] = tmp;
        }
    }
    alpha.assign(p0.begin(), p0.begin() + L);
    beta.assign(p1.begin(), p1.begin() + L);
}

// Eigenvalues of the symmetric tridiagonal Jacobi matrix (implicit-shift QL,
// eigenvectors not accumulated; NR tqli structure).
inline std::vector<double> tridiag_eigenvalues(std::vector<double> d, std::vector<double> e) {
    const int n = static_cast<int>(d.size());
    e.push_back(0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 2.3e-16 * dd + 1e-300) break;
            }
            if (m != l) {
                if (iter++ == 80)
                    throw numerical_error("quadrature: tridiagonal QL failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                int i = m - 1;
                for (; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (underflow && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace detail_quad

// Builds the L-point rule.  The recurrence coefficients come from a Lanczos
// orthogonalization against a machine-precision discretization of the weight
// (the raw moment-based Chebyshev map is hopelessly ill-conditioned past
// L ~ 15); nodes are then polished by Newton on the orthonormal recurrence and
// weights recovered through the Christoffel function, which keeps even the
// ~1e-46 edge weights relatively accurate.
inline QuadratureRule build_halfrange_gauss_rule(int L) {
    using namespace detail_quad;
    if (L < 1 || L > 64)
        throw std::domain_error("halfrange_gauss_rule: order must be in [1, 64]");

    std::vector<double> X, W;
    discretized_measure(X, W);
    std::vector<double> alpha, beta;
    rkpw(X, W, L, alpha, beta);
    for (int k = 1; k < L; ++k)
        if (!(beta[k] > 0.0) || !std::isfinite(beta[k]))
            throw numerical_error(
                "halfrange_gauss_rule: recurrence breakdown at order " + std::to_string(L) +
                "; use a lower order");

    std::vector<double> off(L > 1 ? L - 1 : 0);
    for (int k = 0; k + 1 < L; ++k) off[k] = std::sqrt(beta[k + 1]);
    std::vector<double> nodes = tridiag_eigenvalues(alpha, off);

    // orthonormal recurrence: sqrt(b_{k+1}) p_{k+1} = (x - a_k) p_k - sqrt(b_k) p_{k-1}
    auto recurrence = [&](double x, double& pL, double& dpL, double& christoffel) {
        double pp = 0.0, pc = 1.0 / std::sqrt(beta[0]);
        double dp = 0.0, dc = 0.0;
        christoffel = pc * pc;
        for (int k = 0; k < L; ++k) {
            const double bk = (k > 0) ? std::sqrt(beta[k]) : 0.0;
            const double bk1 = (k + 1 < L) ? std::sqrt(beta[k + 1]) : 1.0;
            const double pn = ((x - alpha[k]) * pc - bk * pp) / bk1;
            const double dn = (pc + (x - alpha[k]) * dc - bk * dp) / bk1;
            pp = pc;
            pc = pn;
            dp = dc;
            dc = dn;
            if (k + 1 < L) christoffel += pc * pc;
        }
        pL = pc;
        dpL = dc;
    };

    QuadratureRule rule;
    rule.order = L;
    rule.nodes.reserve(L);
    rule.weights.reserve(L);
    for (double x : nodes) {
        double pL, dpL, chr;
        for (int it = 0; it < 4; ++it) {
            recurrence(x, pL, dpL, chr);
            const double dx = pL / dpL;
            x -= dx;
            if (std::abs(dx) <= 1e-17 * std::max(1.0, std::abs(x))) break;
        }
        recurrence(x, pL, dpL, chr);
        rule.nodes.push_back(x);
        rule.weights.push_back(1.0 / chr);
    }
    for (int i = 0; i + 1 < L; ++i)
        if (!(rule.nodes[i] > 0.0) || !(rule.nodes[i] < rule.nodes[i + 1]))
            throw numerical_error("halfrange_gauss_rule: node ordering breakdown; use a lower order");
    if (!(rule.nodes.back() > 0.0))
        throw numerical_error("halfrange_gauss_rule: non-positive node; use a lower order");
    return rule;
}

// Cached access; cached and uncached construction give identical rules.
inline const QuadratureRule& halfrange_gauss_rule(int L) {
    static std::map<int, QuadratureRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(L);
    if (it == cache.end()) it = cache.emplace(L, build_halfrange_gauss_rule(L)).first;
    return it->second;
}

} // namespace fsosec::specfun
