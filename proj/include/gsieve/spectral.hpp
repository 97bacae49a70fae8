#pragma once

#include <complex>

#include "gsieve/quadrature.hpp"

namespace gsieve {

/// Gaussian test function h(kappa, p) = exp(-(kappa/K)^2 - (p/P)^2):
/// even, entire in kappa, rapidly decaying in both variables.
struct TestFunction {
    double K = 2.0;
    double P = 2.0;
};

/// Point (r, omega) of the Fourier dual R x R/(pi Z), omega reduced mod pi.
struct DualPoint {
    double r;
    double omega;
};

double h_eval(const TestFunction& tf, double kappa, int p);

/// The diagonal weight: integral over R x Z of h(kappa,p) (kappa^2 + p^2).
/// Closed-form Gaussian kappa-moments times exact p-sums; equals
/// (pi/2) K P (K^2 + P^2) up to Poisson-exponentially-small terms.
double plancherel_H(const TestFunction& tf);

/// trh(r, omega) = cosh r cos omega + i sinh r sin omega,
/// trh(r, omega; phi) = Re(e^{i phi} trh(r, omega)).
std::complex<double> trh(double r, double omega);
double trh_phase(double r, double omega, double phi);

/// k(r) = sqrt(pi) K exp(-(Kr)^2) and the pi-periodized
/// theta(omega) = sqrt(pi) P sum_q exp(-(P(omega + pi q))^2), with their
/// analytic second derivatives; the q-sum is truncated below 1e-18.
struct KTheta {
    double k, k_dd, theta, theta_dd;
};
KTheta k_theta(const TestFunction& tf, double r, double omega);

/// The Bessel-weighted spectral integral
///   H(z) = int over R x Z of h(kappa,p) boldJ_{i kappa, p}(z)
///          (kappa^2 + p^2) d mu,
/// computed three independent ways.  All three agree to ~1e-4 relative on
/// desk-scale z and return a real value up to roundoff.
struct HValue {
    std::complex<double> value;
    double trunc_estimate;
};

/// Route 1: direct truncated spectral sum/integral, kernels by the series
/// path; requires |z| within the series regime.
HValue H_direct(const TestFunction& tf, std::complex<double> z,
                const QuadratureSpec& spec = {});

/// Route 2: -int over Rhat of cos(2 Re(z trh(r,w))) (k'' theta + k theta'')
HValue H_lemma41(const TestFunction& tf, std::complex<double> z,
                 const QuadratureSpec& spec = {});

/// Route 3: |2z|^2 int cos(2 Re(z trh(r,w))) (sinh^2 r + sin^2 w) k theta
HValue H_lemma42(const TestFunction& tf, std::complex<double> z,
                 const QuadratureSpec& spec = {});

}  // namespace gsieve
