#pragma once

#include <complex>

#include "gsieve/errors.hpp"
#include "gsieve/quadrature.hpp"

namespace gsieve {

/// Order data for the product kernel J_{nu,p}(z) = J_{nu+p}(z) J_{nu-p}(zbar);
/// spectral use has nu = i*kappa with kappa real, but any complex nu is
/// accepted for continuation tests.
struct BesselOrder {
    std::complex<double> nu;
    int p = 0;
};

/// Point x e^{i phi} in polar coordinates, x > 0.
struct PolarPoint {
    double x;
    double phi;
};

/// J_nu(z) by the power series sum (-)^n (z/2)^{nu+2n} / (n! Gamma(nu+n+1)),
/// principal branch of (z/2)^nu.  Valid for 0 < |z| <= 30; long-double
/// accumulation keeps the alternating-series cancellation below 1e-12.
/// `terms` records the truncation index.
struct BesselSeries {
    std::complex<double> value;
    int terms;
};
BesselSeries bessel_j_series_info(std::complex<double> nu, std::complex<double> z);
std::complex<double> bessel_j_series(std::complex<double> nu, std::complex<double> z);

/// J_{nu,p}(z) = J_{nu+p}(z) J_{nu-p}(zbar); even and real analytic in z.
std::complex<double> kernel_J(BesselOrder ord, std::complex<double> z);

/// Normalized kernel at nu = i*kappa:
///   bold J_{nu,p}(z) = (2 pi^2 / sin(pi nu)) (J_{-nu,-p}(z) - J_{nu,p}(z)).
/// Real-valued for real kappa and integral p.  Near the removable
/// singularity at kappa = 0 (|kappa| < 1e-3) the value is obtained from
/// symmetric offsets kappa +- eps with Richardson extrapolation in eps.
std::complex<double> kernel_boldJ(double kappa, int p, std::complex<double> z,
                                  double eps = 1e-2);

/// J_{2p}(x) for real x >= 0 through the periodic integral
///   (1 / 2 pi i^{2p}) int_0^{2pi} exp(2ip w + i x cos w) dw,
/// trapezoid rule with 64*(1 + ceil((x + 2|p|)/8)) nodes.
double bessel_2p_real(int p, double x);

/// Fast J_{2p}(x) for the inner kernel integrand: series for small x, libm
/// for large; cross-checked against bessel_2p_real in the tests.
double bessel_j2p_fast(int p, double x);

/// J_m(x) for any integer order, same series/libm split.
double bessel_jn_fast(int m, double x);

/// Fills out[m] = J_m(x) for m = 0..m_max (upward recurrence when x is deep
/// in the oscillatory regime, individual evaluations otherwise).
void bessel_jn_table(double x, int m_max, std::vector<double>& out);

/// chi_bar_{2p}(a) J_{2p}(|a|), the rotated form: direct product evaluation.
std::complex<double> rotated_bessel(std::complex<double> a, int p);

/// Same quantity through the rotated integral
///   (1 / 2 pi i^{2p}) int_0^{2pi} exp(2ip w + i Re(a e^{iw})) dw;
/// the independent second path for rotated_bessel.
std::complex<double> rotated_bessel_quadrature(std::complex<double> a, int p);

/// Y(z) = |z + 1/z| and E(z) = (z + 1/z)/|z + 1/z|.
double kernel_Y(std::complex<double> z);
std::complex<double> kernel_E(std::complex<double> z);

/// bold J_{i kappa, p}(x e^{i phi}) by the real-line integral
///   4 pi i^{2p} int_R chibar_{2p}(cosh(r+i phi))
///                     J_{2p}(2x |cosh(r+i phi)|) e^{2i kappa r} dr,
/// truncated at |r| <= R with R = max(spec.kernel_r_min, asinh(40/x)) and
/// enlarged until the reported integration-by-parts tail estimate meets
/// spec.tol; throws AccuracyError if that would take R past
/// spec.kernel_r_max.
struct KernelIntegral {
    std::complex<double> value;
    double tail_bound;
    double radius;
};
KernelIntegral kernel_boldJ_integral(double kappa, int p, PolarPoint pt,
                                     const QuadratureSpec& spec = {});

}  // namespace gsieve
