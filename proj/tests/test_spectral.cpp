#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gsieve/spectral.hpp"

using namespace gsieve;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

// Brute-force evaluation of the diagonal weight: p-sum of kappa-quadratures,
// independent of the closed-form moment route.
double plancherel_brute(const TestFunction& tf) {
    double total = 0.0;
    int pmax = static_cast<int>(12 * tf.P) + 4;
    for (int p = -pmax; p <= pmax; ++p) {
        auto f = [&](double kappa) {
            return h_eval(tf, kappa, p) * (kappa * kappa + static_cast<double>(p) * p);
        };
        double kmax = 12.0 * tf.K;
        std::vector<double> bounds;
        for (int i = 0; i <= 96; ++i) bounds.push_back(-kmax + 2 * kmax * i / 96.0);
        total += gl_composite(f, bounds, 16);
    }
    return total;
}

}  // namespace

TEST_CASE("test function h") {
    TestFunction tf{3.0, 1.5};
    CHECK(h_eval(tf, 0, 0) == doctest::Approx(1.0));
    CHECK(h_eval(tf, 3.0, 0) * h_eval(tf, 0, 2) ==
          doctest::Approx(std::exp(-1.0 - 16.0 / 9.0)));
    CHECK(h_eval(tf, tf.K, 0) == doctest::Approx(std::exp(-1.0)));
    CHECK(h_eval(tf, -2.2, -1) == h_eval(tf, 2.2, 1));
}

TEST_CASE("Plancherel weight") {
    SUBCASE("K = P = 2 equals 16 pi up to Poisson terms") {
        TestFunction tf{2.0, 2.0};
        CHECK(std::abs(plancherel_H(tf) - 16.0 * kPi) < 1e-11);
    }
    SUBCASE("matches brute force to 1e-8 relative for K,P in {2,4,8}") {
        for (double K : {2.0, 4.0, 8.0}) {
            for (double P : {2.0, 4.0, 8.0}) {
                TestFunction tf{K, P};
                double a = plancherel_H(tf);
                double b = plancherel_brute(tf);
                CHECK(std::abs(a - b) <= 1e-8 * std::abs(a));
            }
        }
    }
    SUBCASE("monotone in K and P") {
        CHECK(plancherel_H({3.0, 2.0}) > plancherel_H({2.0, 2.0}));
        CHECK(plancherel_H({2.0, 3.0}) > plancherel_H({2.0, 2.0}));
    }
    SUBCASE("doubling ratio approaches the Gaussian-moment value") {
        double K = 2.0, P = 2.0;
        double ratio = plancherel_H({2 * K, P}) / plancherel_H({K, P});
        CHECK(ratio == doctest::Approx(2.0 * (4 * K * K + P * P) / (K * K + P * P))
                           .epsilon(1e-10));
    }
}

TEST_CASE("trh") {
    CHECK(trh(0, 0) == cd(1, 0));
    CHECK(std::abs(trh(1.3, kPi / 2) - cd(0, std::sinh(1.3))) < 1e-15);
    CHECK(trh_phase(0.7, 0.4, 0.0) ==
          doctest::Approx(std::cosh(0.7) * std::cos(0.4)));
    // trh_phase(r,w,phi) = Re(e^{i phi} trh(r,w)); |trh|^2 = sinh^2 r + cos^2 w
    std::mt19937_64 rng(11);
    for (int i = 0; i < 25; ++i) {
        double r = (rng() % 1000) / 250.0 - 2.0;
        double w = (rng() % 1000) / 160.0;
        double phi = (rng() % 1000) / 160.0;
        cd t = trh(r, w);
        CHECK(trh_phase(r, w, phi) ==
              doctest::Approx((std::polar(1.0, phi) * t).real()).epsilon(1e-12));
        double m2 = std::sinh(r) * std::sinh(r) + std::cos(w) * std::cos(w);
        CHECK(std::norm(t) == doctest::Approx(m2).epsilon(1e-12));
    }
}

TEST_CASE("k and theta") {
    TestFunction tf{2.0, 3.0};
    KTheta kt0 = k_theta(tf, 0, 0.3);
    CHECK(kt0.k == doctest::Approx(std::sqrt(kPi) * tf.K));

    SUBCASE("theta is pi-periodic") {
        for (double w : {0.0, 0.4, 1.1, 2.9}) {
            CHECK(k_theta(tf, 0.1, w).theta ==
                  doctest::Approx(k_theta(tf, 0.1, w + kPi).theta).epsilon(1e-14));
        }
    }
    SUBCASE("integral of theta over one period is pi") {
        auto f = [&](double w) { return k_theta(tf, 0, w).theta; };
        double integral = trapezoid_periodic(f, kPi, 257);
        CHECK(integral == doctest::Approx(kPi).epsilon(1e-12));
    }
    SUBCASE("second derivatives match finite differences") {
        double hstep = 1e-4;
        for (double r : {0.0, 0.35, -1.2}) {
            for (double w : {0.05, 0.8, 2.2}) {
                KTheta c = k_theta(tf, r, w);
                KTheta rp = k_theta(tf, r + hstep, w), rm = k_theta(tf, r - hstep, w);
                KTheta wp = k_theta(tf, r, w + hstep), wm = k_theta(tf, r, w - hstep);
                double k_dd_fd = (rp.k - 2 * c.k + rm.k) / (hstep * hstep);
                double t_dd_fd = (wp.theta - 2 * c.theta + wm.theta) / (hstep * hstep);
                CHECK(c.k_dd == doctest::Approx(k_dd_fd).epsilon(1e-5));
                CHECK(c.theta_dd == doctest::Approx(t_dd_fd).epsilon(1e-5));
            }
        }
    }
}

TEST_CASE("partial-integration identity, pointwise by finite differences") {
    // (d_r^2 + d_w^2) cos(2 Re(z trh)) = -4 (sinh^2 r + sin^2 w) |z|^2 cos(...)
    std::mt19937_64 rng(23);
    auto uniform = [&](double lo, double hi) {
        return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
    };
    double hstep = 1e-4;
    for (int i = 0; i < 20; ++i) {
        double r = uniform(-1.5, 1.5), w = uniform(0.0, kPi);
        cd z = std::polar(uniform(0.2, 3.0), uniform(0.0, 2 * kPi));
        auto f = [&](double rr, double ww) {
            return std::cos(2.0 * (z * trh(rr, ww)).real());
        };
        double lap = (f(r + hstep, w) + f(r - hstep, w) + f(r, w + hstep) +
                      f(r, w - hstep) - 4.0 * f(r, w)) /
                     (hstep * hstep);
        double rhs = -4.0 *
                     (std::sinh(r) * std::sinh(r) + std::sin(w) * std::sin(w)) *
                     std::norm(z) * f(r, w);
        CHECK(std::abs(lap - rhs) <= 1e-5 * (1.0 + std::abs(rhs)) + 1e-4);
    }
}

TEST_CASE("H routes") {
    QuadratureSpec spec;
    SUBCASE("three-route agreement at (K,P,z) = (2,2,1+i)") {
        TestFunction tf{2.0, 2.0};
        cd z(1, 1);
        cd a = H_direct(tf, z, spec).value;
        cd b = H_lemma41(tf, z, spec).value;
        cd c = H_lemma42(tf, z, spec).value;
        double scale = std::abs(a);
        CHECK(std::abs(a - b) <= 1e-4 * scale);
        CHECK(std::abs(b - c) <= 1e-4 * scale);
    }
    SUBCASE("agreement at (K,P,z) = (2,3,3 e^{i pi/5})") {
        TestFunction tf{2.0, 3.0};
        cd z = std::polar(3.0, kPi / 5);
        cd b = H_lemma41(tf, z, spec).value;
        cd c = H_lemma42(tf, z, spec).value;
        CHECK(std::abs(b - c) <= 1e-4 * std::abs(b));
    }
    SUBCASE("H real for real z, even in z") {
        TestFunction tf{2.0, 2.0};
        cd a = H_direct(tf, cd(1.5, 0), spec).value;
        CHECK(std::abs(a.imag()) <= 1e-9 * (1.0 + std::abs(a)));
        cd b = H_lemma41(tf, cd(0.8, 0.3), spec).value;
        cd bneg = H_lemma41(tf, cd(-0.8, -0.3), spec).value;
        CHECK(std::abs(b - bneg) <= 1e-10 * (1.0 + std::abs(b)));
    }
    SUBCASE("z -> 0 limit of the Lemma-4.1 form vanishes") {
        TestFunction tf{2.0, 2.0};
        cd v = H_lemma41(tf, cd(1e-3, 0), spec).value;
        CHECK(std::abs(v) < 1e-4);  // integrals of exact derivatives
    }
    SUBCASE("|H(z)| bounded by |2z|^2 times the z-free envelope") {
        TestFunction tf{2.0, 2.0};
        // envelope = int (sinh^2 r + sin^2 w) k theta over Rhat
        auto row = [&](double r) {
            auto f = [&](double w) {
                KTheta kt = k_theta(tf, r, w);
                return (std::sinh(r) * std::sinh(r) + std::sin(w) * std::sin(w)) *
                       kt.k * kt.theta;
            };
            return trapezoid_periodic(f, kPi, 64);
        };
        std::vector<double> bounds;
        for (int i = 0; i <= 64; ++i) bounds.push_back(-4.0 + 8.0 * i / 64.0);
        double envelope = gl_composite(row, bounds, 16);
        for (cd z : {cd(0.5, 0.2), cd(2, 1), cd(0, 4)}) {
            cd v = H_lemma42(tf, z, spec).value;
            CHECK(std::abs(v) <= std::norm(2.0 * z) * envelope * (1 + 1e-9));
        }
    }
}
