// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "fsosec/specfun/bessel_k.hpp"
#include "fsosec/specfun/kummer_u.hpp"
#include "fsosec/specfun/meijer_g.hpp"
#include "oracles/mellin_barnes.hpp"

using fsosec::specfun::bessel_k;
using fsosec::specfun::MeijerParams;
using fsosec::specfun::meijer_g;
using Catch::Matchers::WithinRel;

namespace {

// parameter vectors of the outage inner integral: a1 = 1-s1,
// K2 = (v/4, (v+2)/4, -v/4, -(v-2)/4, -s1) with v = alpha+t-k, s1 = (alpha+t+k)/4
MeijerParams g41_params(double alpha, int t, int k, double eps = 1e-6) {
    MeijerParams p;
    p.m = 4;
    p.n = 1;
    p.p = 1;
    p.q = 5;
    const double v = alpha + t - k;
    const double s1 = (alpha + t + k) / 4.0;
    p.a = {1.0 - s1};
    p.b = {v / 4.0, (v + 2.0) / 4.0, -v / 4.0, -(v - 2.0) / 4.0, -s1};
    p.epsilon_shift = eps;
    return p;
}

MeijerParams g202_params(double b1, double b2) {
    MeijerParams p;
    p.m = 2;
    p.n = 0;
    p.p = 0;
    p.q = 2;
    p.a = {};
    p.b = {b1, b2};
    return p;
}

// PNZSC reduction parameters (general k1 != k2 form)
MeijerParams g455_params(double alpha, int t, int k1, int k2, double eps = 1e-6) {
    MeijerParams p;
    p.m = 4;
    p.n = 5;
    p.p = 5;
    p.q = 5;
    const double v1 = alpha + t - k1;
    const double v2 = alpha + t - k2;
    const double s1 = (alpha + t + k1) / 4.0;
    const double st = (2.0 * (alpha + t) + k1 + k2) / 4.0;
    p.a = {1.0 - s1, 1.0 - st - v2 / 4.0, 1.0 - st - (v2 + 2.0) / 4.0, 1.0 - st + v2 / 4.0,
           1.0 - st - (2.0 - v2) / 4.0};
    p.b = {v1 / 4.0, (v1 + 2.0) / 4.0, -v1 / 4.0, -(v1 - 2.0) / 4.0, -s1};
    p.epsilon_shift = eps;
    return p;
}

} // namespace

TEST_CASE("G202 equal-parameter reduction", "[specfun][meijer]") {
    for (double b : {0.0, 0.7, 2.1}) {
        for (double x : {0.2, 1.0, 6.0}) {
            const double g = meijer_g(g202_params(b, b), x);
            CHECK_THAT(g, WithinRel(2.0 * std::pow(x, b) * bessel_k(0.0, 2.0 * std::sqrt(x)), 1e-12));
        }
    }
}

TEST_CASE("G202 against the contour oracle for random parameters", "[specfun][meijer]") {
    std::mt19937 rng(314);
    std::uniform_real_distribution<double> bd(-1.5, 2.5), xd(0.1, 8.0);
    for (int i = 0; i < 40; ++i) {
        const double b1 = bd(rng), b2 = bd(rng), x = xd(rng);
        const auto p = g202_params(b1, b2);
        const double c = std::max(-b1, -b2) + 0.75;
        const double oracle = fsosec::testing::meijer_g_contour(2, 0, p.a, p.b, x, c);
        CHECK_THAT(meijer_g(p, x), WithinRel(oracle, 1e-10));
    }
}

TEST_CASE("Kummer-U equality for the joint-density kernel", "[specfun][meijer]") {
    // G^{2,0}_{0,2}(x | -; v/2, -v/2) = 2^{2v+1} sqrt(pi) x^{v/2} e^{-2 sqrt(x)}
    //                                   * U(1/2 + v, 1 + 2v; 4 sqrt(x))
    const double pi = 3.14159265358979323846;
    auto rhs = [&](double v, double x) {
        const double a1 = std::pow(2.0, 2.0 * v + 1.0) * std::sqrt(pi) * std::pow(x, v / 2.0);
        const double a2 = std::exp(2.0 * std::sqrt(x));
        return a1 / a2 *
               fsosec::specfun::kummer_u_direct(0.5 + v, 1.0 + 2.0 * v, 4.0 * std::sqrt(x));
    };
    CHECK_THAT(meijer_g(g202_params(1.3 / 2.0, -1.3 / 2.0), 0.7), WithinRel(rhs(1.3, 0.7), 1e-8));
    for (double v : {0.5, 1.0, 2.7, 5.0}) {
        for (double x : {0.1, 1.0, 10.0}) {
            INFO("v=" << v << " x=" << x);
            CHECK_THAT(meijer_g(g202_params(v / 2.0, -v / 2.0), x), WithinRel(rhs(v, x), 1e-8));
        }
    }
}

TEST_CASE("G415 against the contour oracle on (0,5)", "[specfun][meijer]") {
    // non-confluent parameters (alpha = 2.296) and confluent ones (alpha = 8)
    for (double alpha : {2.296, 8.0}) {
        for (int t : {0, 1, 3}) {
            for (int k : {1, 2}) {
                const auto p = g41_params(alpha, t, k);
                const double c = fsosec::testing::mb_default_contour(4, 1, p.a, p.b);
                for (double z : {0.05, 0.7, 2.4, 4.9}) {
                    const double oracle = fsosec::testing::meijer_g_contour(4, 1, p.a, p.b, z, c);
                    INFO("alpha=" << alpha << " t=" << t << " k=" << k << " z=" << z);
                    CHECK_THAT(meijer_g(p, z), WithinRel(oracle, 1e-6));
                }
            }
        }
    }
}

TEST_CASE("G415 large-argument continuation", "[specfun][meijer]") {
    // seam: Slater below 30, Bessel-tail above; both exact in the overlap
    for (double alpha : {2.296, 4.2}) {
        const auto p = g41_params(alpha, 1, 1);
        const double c = fsosec::testing::mb_default_contour(4, 1, p.a, p.b);
        for (double z : {25.0, 29.9}) {
            const double slater = meijer_g(p, z);
            const double oracle = fsosec::testing::meijer_g_contour(4, 1, p.a, p.b, z, c);
            CHECK_THAT(slater, WithinRel(oracle, 1e-7));
        }
        for (double z : {30.5, 100.0, 1e4, 1e7}) {
            const double cont = meijer_g(p, z);
            const double oracle = fsosec::testing::meijer_g_contour(4, 1, p.a, p.b, z, c);
            INFO("alpha=" << alpha << " z=" << z);
            CHECK_THAT(cont, WithinRel(oracle, 1e-7));
        }
    }
}

TEST_CASE("G455 against the contour oracle on both sides of 1", "[specfun][meijer]") {
    for (double alpha : {2.296, 8.0}) {
        for (auto [k1, k2] : {std::pair{1, 1}, std::pair{2, 1}}) {
            const auto p = g455_params(alpha, 1, k1, k2);
            const double c = fsosec::testing::mb_default_contour(4, 5, p.a, p.b);
            for (double z : {0.05, 0.45, 0.9, 1.8, 12.0}) {
                const double oracle = fsosec::testing::meijer_g_contour(4, 5, p.a, p.b, z, c);
                INFO("alpha=" << alpha << " k1=" << k1 << " k2=" << k2 << " z=" << z);
                CHECK_THAT(meijer_g(p, z), WithinRel(oracle, 1e-6));
            }
        }
    }
}

TEST_CASE("epsilon shift convergence bound", "[specfun][meijer]") {
    // confluent family (integer alpha): halving epsilon_shift moves the value
    // by less than the documented linear bound 100*eps*|G|
    for (int t : {0, 2}) {
        for (double z : {0.1, 1.3, 4.0}) {
            auto p1 = g41_params(8.0, t, 1, 1e-6);
            auto p2 = g41_params(8.0, t, 1, 5e-7);
            const double g1 = meijer_g(p1, z);
            const double g2 = meijer_g(p2, z);
            CHECK(std::abs(g1 - g2) <= 100.0 * 1e-6 * std::abs(g1));
        }
    }
}

TEST_CASE("meijer_g contract errors", "[specfun][meijer]") {
    MeijerParams bad;
    bad.m = 1;
    bad.n = 1;
    bad.p = 1;
    bad.q = 1;
    bad.a = {0.5};
    bad.b = {0.5};
    CHECK_THROWS_AS(meijer_g(bad, 1.0), std::domain_error);

    auto p = g41_params(2.296, 0, 1);
    CHECK_THROWS_AS(meijer_g(p, 0.0), std::domain_error);
    p.epsilon_shift = 1.0; // out of (0, 1e-5]
    CHECK_THROWS_AS(meijer_g(p, 1.0), std::domain_error);

    const auto p455 = g455_params(2.296, 0, 1, 1);
    CHECK_THROWS_AS(meijer_g(p455, 1.0), fsosec::numerical_error);
}

TEST_CASE("meijer_g purity", "[specfun][meijer]") {
    const auto p = g41_params(8.0, 1, 2);
    const double a = meijer_g(p, 2.5);
    const double b = meijer_g(p, 2.5);
    CHECK(std::memcmp(&a, &b, sizeof a) == 0);
}
