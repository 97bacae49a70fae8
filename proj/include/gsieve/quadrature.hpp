#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace gsieve {

/// Kahan-compensated accumulation; summation order is the caller's contract.
struct KahanReal {
    double s = 0, c = 0;
    void add(double v) {
        double y = v - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    double value() const { return s; }
};

struct KahanComplex {
    KahanReal re, im;
    void add(std::complex<double> v) {
        re.add(v.real());
        im.add(v.imag());
    }
    std::complex<double> value() const { return {re.value(), im.value()}; }
};

/// Gauss-Legendre nodes and weights on [-1, 1]; tables are computed once per
/// order and then read-only.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussLegendre& gauss_legendre(int n);

/// Controls every numerical integral in the toolkit: truncation radii, node
/// counts, and tolerances are explicit, never hidden globals.
struct QuadratureSpec {
    double tol = 1e-6;          // accuracy target for tail/error checks
    int panel_nodes = 16;       // Gauss-Legendre nodes per panel
    double trunc_sigmas = 10.0; // Gaussian truncation, in standard deviations
    double kernel_r_min = 12.0; // minimum half-width of the kernel r-integral
    double kernel_r_max = 25.0; // refuse radii past this (cost guard)
    double spectral_kappa_mult = 8.0;  // kappa cutoff = mult * K
    double spectral_p_pad = 40.0;      // p cutoff = 8P + pad
};

/// Integrates f over [a, b] with one n-node Gauss-Legendre rule.
template <typename F>
auto gl_panel(F&& f, double a, double b, int n) {
    const GaussLegendre& gl = gauss_legendre(n);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    using R = decltype(f(mid));
    if constexpr (std::is_same_v<R, double>) {
        KahanReal acc;
        for (std::size_t i = 0; i < gl.nodes.size(); ++i)
            acc.add(gl.weights[i] * f(mid + half * gl.nodes[i]));
        return half * acc.value();
    } else {
        KahanComplex acc;
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
            R v = f(mid + half * gl.nodes[i]);
            acc.add(std::complex<double>(v) * gl.weights[i]);
        }
        return half * acc.value();
    }
}

/// Composite rule over explicit panel boundaries (ascending).
template <typename F>
auto gl_composite(F&& f, const std::vector<double>& bounds, int n) {
    using R = decltype(gl_panel(f, 0.0, 1.0, n));
    if constexpr (std::is_same_v<R, double>) {
        KahanReal acc;
        for (std::size_t i = 0; i + 1 < bounds.size(); ++i)
            acc.add(gl_panel(f, bounds[i], bounds[i + 1], n));
        return acc.value();
    } else {
        KahanComplex acc;
        for (std::size_t i = 0; i + 1 < bounds.size(); ++i)
            acc.add(gl_panel(f, bounds[i], bounds[i + 1], n));
        return acc.value();
    }
}

/// Panel boundaries for [a, b] where the local oscillation frequency is
/// freq(t) (radians per unit t): widths keep at most ~1.5 cycles per panel
/// and never exceed max_width.  Built left to right; deterministic.
std::vector<double> oscillation_panels(double a, double b, double max_width,
                                       const std::function<double(double)>& freq);

/// Trapezoid rule for a function with period `period`, N equally spaced
/// nodes starting at 0: spectrally accurate for smooth periodic integrands.
template <typename F>
auto trapezoid_periodic(F&& f, double period, int n) {
    using R = decltype(f(0.0));
    double h = period / n;
    if constexpr (std::is_same_v<R, double>) {
        KahanReal acc;
        for (int j = 0; j < n; ++j) acc.add(f(h * j));
        return h * acc.value();
    } else {
        KahanComplex acc;
        for (int j = 0; j < n; ++j) acc.add(std::complex<double>(f(h * j)));
        return h * acc.value();
    }
}

}  // namespace gsieve
