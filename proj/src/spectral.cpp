#include "gsieve/spectral.hpp"

#include <cmath>
#include <numbers>

#include "gsieve/bessel.hpp"

namespace gsieve {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);

}  // namespace

double h_eval(const TestFunction& tf, double kappa, int p) {
    double a = kappa / tf.K, b = p / tf.P;
    return std::exp(-a * a - b * b);
}

double plancherel_H(const TestFunction& tf) {
    // Integral over kappa in closed form:
    //   int exp(-(kappa/K)^2) (kappa^2 + p^2) dkappa = sqrt(pi) K (K^2/2 + p^2).
    const double K = tf.K, P = tf.P;
    KahanReal acc;
    acc.add(K * K / 2.0);
    for (int p = 1; p < 100000; ++p) {
        double w = std::exp(-(p / P) * (p / P));
        double term = 2.0 * w * (K * K / 2.0 + static_cast<double>(p) * p);
        acc.add(term);
        if (w < 1e-20 && p > 3 * P) break;
    }
    return kSqrtPi * K * acc.value();
}

std::complex<double> trh(double r, double omega) {
    return {std::cosh(r) * std::cos(omega), std::sinh(r) * std::sin(omega)};
}

double trh_phase(double r, double omega, double phi) {
    return std::cosh(r) * std::cos(omega) * std::cos(phi) -
           std::sinh(r) * std::sin(omega) * std::sin(phi);
}

KTheta k_theta(const TestFunction& tf, double r, double omega) {
    const double K = tf.K, P = tf.P;
    KTheta out{};
    double kr = K * r;
    double g = kSqrtPi * K * std::exp(-kr * kr);
    out.k = g;
    out.k_dd = (4.0 * kr * kr - 2.0) * K * K * g;
    // Periodization: only q with (P(omega + pi q))^2 < ~41 contribute above
    // 1e-18.
    double win = 6.5 / P;
    int q_lo = static_cast<int>(std::floor((-omega - win) / kPi));
    int q_hi = static_cast<int>(std::ceil((-omega + win) / kPi));
    KahanReal th, thdd;
    for (int q = q_lo; q <= q_hi; ++q) {
        double u = P * (omega + kPi * q);
        double e = kSqrtPi * P * std::exp(-u * u);
        th.add(e);
        thdd.add((4.0 * u * u - 2.0) * P * P * e);
    }
    out.theta = th.value();
    out.theta_dd = thdd.value();
    return out;
}

namespace {

// Shared 2-D quadrature for the two (r, omega) routes.  The integrand is
// pi-periodic in omega (trh(r, omega+pi) = -trh(r, omega) under the cosine)
// so the omega direction uses the spectrally accurate trapezoid rule with a
// node count tracking the local bandwidth |z| cosh r; the r direction uses
// oscillation-adapted Gauss-Legendre panels under the Gaussian envelope of
// k(r).
template <typename Weight>
double h_rw_integral(const TestFunction& tf, std::complex<double> z,
                     const QuadratureSpec& spec, Weight&& weight) {
    const double K = tf.K, P = tf.P;
    const double az = std::abs(z);
    // k and k'' are below ~1e-22 * peak past trunc_sigmas/sqrt(2) sigmas.
    const double r_max = spec.trunc_sigmas / (std::numbers::sqrt2 * K) + 0.1;

    auto omega_nodes = [&](double r) {
        // Bandwidth of cos(2 Re(z trh)): modes to |z| cosh r plus the Airy
        // edge; theta contributes ~6.5 P.
        double x = az * std::cosh(r);
        double band = x + 5.0 * std::cbrt(2.0 * x + 1.0) + 6.5 * P + 24.0;
        return 2 * static_cast<int>(std::ceil(band / 2.0)) + 16;
    };
    auto row = [&](double r) {
        double A = std::cosh(r), B = std::sinh(r);
        double zr = z.real(), zi = z.imag();
        int n = omega_nodes(r);
        auto f = [&](double w) {
            double phase = 2.0 * (zr * A * std::cos(w) - zi * B * std::sin(w));
            return std::cos(phase) * weight(tf, r, w);
        };
        return trapezoid_periodic(f, kPi, n);
    };
    auto freq = [&](double t) { return 2.0 * az * std::cosh(t); };
    std::vector<double> bounds = oscillation_panels(0.0, r_max, 0.35 / K, freq);

    KahanReal acc;
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i)
        acc.add(gl_panel(row, bounds[i], bounds[i + 1], spec.panel_nodes));
    auto row_neg = [&](double r) { return row(-r); };
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i)
        acc.add(gl_panel(row_neg, bounds[i], bounds[i + 1], spec.panel_nodes));
    return acc.value();
}

}  // namespace

HValue H_direct(const TestFunction& tf, std::complex<double> z,
                const QuadratureSpec& spec) {
    const double K = tf.K, P = tf.P;
    const double kappa_max = spec.spectral_kappa_mult * K;
    const int p_max = static_cast<int>(std::ceil(8.0 * P + spec.spectral_p_pad));
    const double az = std::abs(z);

    // In kappa the kernel oscillates like |z/2|^{2 i kappa}; panels resolve
    // that and the Gaussian h.
    double freq = 2.0 * std::abs(std::log(az / 2.0)) + 2.0;
    double width = std::min({0.4, K / 2.0, 3.0 * kPi / (1.0 + freq)});
    std::vector<double> bounds{0.0};
    while (bounds.back() < kappa_max)
        bounds.push_back(std::min(kappa_max, bounds.back() + width));

    KahanComplex acc;
    for (int p = -p_max; p <= p_max; ++p) {
        auto f = [&](double kappa) -> std::complex<double> {
            double h = h_eval(tf, kappa, p);
            if (h < 1e-300) return 0.0;
            return h * kernel_boldJ(kappa, p, z) *
                   (kappa * kappa + static_cast<double>(p) * p);
        };
        for (std::size_t i = 0; i + 1 < bounds.size(); ++i)
            acc.add(gl_panel(f, bounds[i], bounds[i + 1], spec.panel_nodes));
        auto f_neg = [&](double kappa) { return f(-kappa); };
        for (std::size_t i = 0; i + 1 < bounds.size(); ++i)
            acc.add(gl_panel(f_neg, bounds[i], bounds[i + 1], spec.panel_nodes));
    }
    // Dropped Gaussian tails at 8 sigma in each variable.
    double trunc = std::exp(-60.0) * (1.0 + kappa_max * kappa_max + p_max * p_max);
    return {acc.value(), trunc};
}

HValue H_lemma41(const TestFunction& tf, std::complex<double> z,
                 const QuadratureSpec& spec) {
    double v = -h_rw_integral(tf, z, spec, [](const TestFunction& t, double r, double w) {
        KTheta kt = k_theta(t, r, w);
        return kt.k_dd * kt.theta + kt.k * kt.theta_dd;
    });
    return {std::complex<double>(v, 0.0), 0.0};
}

HValue H_lemma42(const TestFunction& tf, std::complex<double> z,
                 const QuadratureSpec& spec) {
    double z2 = std::norm(2.0 * z);
    double v = z2 * h_rw_integral(tf, z, spec,
                                  [](const TestFunction& t, double r, double w) {
                                      KTheta kt = k_theta(t, r, w);
                                      double sh = std::sinh(r), sw = std::sin(w);
                                      return (sh * sh + sw * sw) * kt.k * kt.theta;
                                  });
    return {std::complex<double>(v, 0.0), 0.0};
}

}  // namespace gsieve
