#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "gsieve/bessel.hpp"

using namespace gsieve;
using cd = std::complex<double>;

namespace {

// Independent oracle for J_0(1): alternating series with remainder bounded
// by the first omitted term.
double j0_of_1_oracle(double* remainder) {
    double term = 1.0, sum = 1.0;
    int n = 0;
    while (std::abs(term) > 1e-18) {
        ++n;
        term *= -0.25 / (static_cast<double>(n) * n);
        sum += term;
    }
    *remainder = std::abs(term);
    return sum;
}

}  // namespace

TEST_CASE("series matches the J_0(1) oracle") {
    double rem = 0;
    double oracle = j0_of_1_oracle(&rem);
    cd v = bessel_j_series(cd(0, 0), cd(1, 0));
    CHECK(std::abs(v.real() - oracle) <= rem + 1e-14);
    CHECK(std::abs(v.real() - 0.7651976865579666) < 1e-12);
    CHECK(v.imag() == 0.0);
}

TEST_CASE("series domain guards") {
    CHECK_THROWS_AS(bessel_j_series(cd(0, 0), cd(0, 0)), DomainError);
    CHECK_THROWS_AS(bessel_j_series(cd(0, 0), cd(40, 0)), RegimeError);
}

TEST_CASE("continuity in the order") {
    cd nu(0.3, 0.2), z(2, 1);
    cd a = bessel_j_series(nu, z);
    cd b = bessel_j_series(nu + 1e-6, z);
    CHECK(std::abs(b - a) < 1e-4);
}

TEST_CASE("negative integer order reflection") {
    // J_{-m}(x) = (-1)^m J_m(x)
    for (int m : {1, 2, 5}) {
        cd a = bessel_j_series(cd(-m, 0), cd(2.5, 0));
        cd b = bessel_j_series(cd(m, 0), cd(2.5, 0));
        double sign = (m % 2 == 1) ? -1.0 : 1.0;
        CHECK(std::abs(a - sign * b) < 1e-14);
    }
}

TEST_CASE("kernel_J evenness and real-axis square") {
    BesselOrder ord{cd(0, 1.0), 1};
    cd z(2, 1);
    CHECK(std::abs(kernel_J(ord, -z) - kernel_J(ord, z)) < 1e-10);
    // p = 0, real nu, real z: J_{nu,0}(x) = J_nu(x)^2
    BesselOrder real_ord{cd(0.7, 0), 0};
    cd x(1.7, 0);
    cd prod = kernel_J(real_ord, x);
    cd j = bessel_j_series(cd(0.7, 0), x);
    CHECK(std::abs(prod - j * j) < 1e-14);
    CHECK(std::abs(prod.imag()) < 1e-14);
}

TEST_CASE("kernel_boldJ symmetry, realness, evenness") {
    cd z(1, 1);
    cd a = kernel_boldJ(1.0, 2, z);
    cd b = kernel_boldJ(-1.0, -2, z);
    CHECK(std::abs(a - b) < 1e-9);
    CHECK(std::abs(a - kernel_boldJ(1.0, 2, -z)) < 1e-9);
    CHECK(std::abs(a.imag()) < 1e-9 * (1.0 + std::abs(a)));  // real-valued kernel

    // Evenness through the negative real axis (branch edge of the second
    // factor) for both kernels.
    BesselOrder ord{cd(0.4, 0.8), 1};
    CHECK(std::abs(kernel_J(ord, cd(-1.5, 0)) - kernel_J(ord, cd(1.5, 0))) < 1e-12);
    CHECK(std::abs(kernel_boldJ(0.7, 2, cd(-2.0, 0)) -
                   kernel_boldJ(0.7, 2, cd(2.0, 0))) < 1e-12);
}

TEST_CASE("kappa = 0 offset is Richardson-consistent") {
    for (int p : {0, 1, 3}) {
        cd z(1.3, 0.4);
        // The symmetric averages at eps and eps/2 agree to O(eps^2) ...
        auto avg = [&](double e) {
            return 0.5 * (kernel_boldJ(e, p, z) + kernel_boldJ(-e, p, z));
        };
        double e = 1e-2;
        cd a1 = avg(e), a2 = avg(e / 2);
        CHECK(std::abs(a1 - a2) < 50 * e * e * (1.0 + std::abs(a1)));
        // ... and the extrapolated values are far tighter, O(eps^4).
        cd v1 = kernel_boldJ(0.0, p, z, 1e-2);
        cd v2 = kernel_boldJ(0.0, p, z, 5e-3);
        CHECK(std::abs(v1 - v2) < 1e-6 * (1.0 + std::abs(v1)));
    }
}

TEST_CASE("J_{2p} trapezoid path") {
    CHECK(bessel_2p_real(0, 0.0) == doctest::Approx(1.0));
    CHECK(std::abs(bessel_2p_real(1, 0.0)) < 1e-12);
    CHECK(std::abs(bessel_2p_real(5, 0.0)) < 1e-12);

    SUBCASE("agrees with the series to 1e-10") {
        for (int p : {0, 1, 2, 5, 10}) {
            for (double x : {0.5, 1.0, 4.0, 11.0, 20.0}) {
                double quad = bessel_2p_real(p, x);
                double ser = bessel_j_series(cd(2 * p, 0), cd(x, 0)).real();
                CHECK(std::abs(quad - ser) < 1e-10);
            }
        }
    }
    SUBCASE("|J_{2p}| <= 1 spot checks") {
        for (int p : {0, 3, 10, 20}) {
            for (double x : {0.3, 7.0, 55.0, 200.0, 500.0}) {
                CHECK(std::abs(bessel_2p_real(p, x)) <= 1.0 + 1e-12);
            }
        }
    }
    SUBCASE("decay constant of |J_{2p}(x)| sqrt(x)/sqrt(1+p^2)") {
        double c = std::abs(bessel_2p_real(5, 200.0)) * std::sqrt(200.0) /
                   std::sqrt(101.0);
        CHECK(c < 1.0);  // value recorded via the CLI bessel report
    }
}

TEST_CASE("fast J_{2p} agrees with the trapezoid path") {
    for (int p : {0, 1, 5, 10}) {
        for (double x : {0.7, 12.0, 25.0, 50.0, 120.0, 400.0}) {
            CHECK(std::abs(bessel_j2p_fast(p, x) - bessel_2p_real(p, x)) < 1e-10);
        }
        CHECK(bessel_j2p_fast(-p, 3.0) == bessel_j2p_fast(p, 3.0));
    }
}

TEST_CASE("rotated Bessel: two paths") {
    SUBCASE("real positive a reduces to J_{2p}") {
        cd v = rotated_bessel(cd(3.0, 0), 2);
        CHECK(v.real() == doctest::Approx(bessel_j2p_fast(2, 3.0)).epsilon(1e-13));
        CHECK(std::abs(v.imag()) < 1e-13);
    }
    SUBCASE("p = 0, imaginary a gives J_0(|t|)") {
        cd v = rotated_bessel(cd(0, 1.7), 0);
        CHECK(v.real() == doctest::Approx(bessel_j2p_fast(0, 1.7)).epsilon(1e-13));
        CHECK(std::abs(v.imag()) < 1e-13);
    }
    SUBCASE("direct vs quadrature at a = 2 e^{i pi/3}, p = 1") {
        cd a = std::polar(2.0, std::numbers::pi / 3.0);
        CHECK(std::abs(rotated_bessel(a, 1) - rotated_bessel_quadrature(a, 1)) < 1e-9);
    }
    SUBCASE("random-ish grid") {
        for (int p : {-2, 0, 1, 3}) {
            for (double r : {0.5, 2.0, 9.0}) {
                for (double ph : {0.3, 2.0, 4.4}) {
                    cd a = std::polar(r, ph);
                    CHECK(std::abs(rotated_bessel(a, p) -
                                   rotated_bessel_quadrature(a, p)) < 1e-9);
                }
            }
        }
    }
}

TEST_CASE("Y and E") {
    CHECK(kernel_Y(cd(1, 0)) == doctest::Approx(2.0));
    CHECK(kernel_E(cd(1, 0)).real() == doctest::Approx(1.0));
    CHECK(kernel_Y(std::polar(1.0, std::numbers::pi / 2)) < 1e-12);
}

TEST_CASE("series path vs integral path") {
    QuadratureSpec spec;
    SUBCASE("(kappa, p, x, phi) = (1, 1, 2, pi/4)") {
        PolarPoint pt{2.0, std::numbers::pi / 4};
        KernelIntegral ki = kernel_boldJ_integral(1.0, 1, pt);
        cd ser = kernel_boldJ(1.0, 1, std::polar(pt.x, pt.phi));
        CHECK(std::abs(ki.value - ser) < 1e-6 * (1.0 + std::abs(ser)));
    }
    SUBCASE("(1.5, 1, 2 e^{i pi/3})") {
        PolarPoint pt{2.0, std::numbers::pi / 3};
        KernelIntegral ki = kernel_boldJ_integral(1.5, 1, pt);
        cd ser = kernel_boldJ(1.5, 1, std::polar(pt.x, pt.phi));
        CHECK(std::abs(ki.value - ser) < 1e-6 * (1.0 + std::abs(ser)));
    }
    SUBCASE("boundary phi = pi/2 (cosh zero crossing)") {
        PolarPoint pt{1.0, std::numbers::pi / 2};
        KernelIntegral ki = kernel_boldJ_integral(0.5, 0, pt);
        cd ser = kernel_boldJ(0.5, 0, std::polar(pt.x, pt.phi));
        CHECK(std::abs(ki.value - ser) < 1e-6 * (1.0 + std::abs(ser)));
    }
}
