#pragma once

#include <cmath>
#include <complex>

#include "gsieve/quadrature.hpp"

namespace gsieve {

/// Contour configuration for the approximate-functional-equation weights:
/// the vertical segment [eps - iU, eps + iU], with kp_sq = K^2 + P^2 feeding
/// the error envelope.  The default height is U = log(K^2 + P^2).
struct AfeConfig {
    double eps = 0.1;
    double U = 1.0;
    double kp_sq = 8.0;

    static AfeConfig from_KP(double K, double P) {
        AfeConfig cfg;
        cfg.kp_sq = K * K + P * P;
        cfg.U = std::log(cfg.kp_sq);
        return cfg;
    }
};

/// gamma(s, kappa, p) = Gamma(s + (i kappa + |p|)/2) Gamma(s + (-i kappa + |p|)/2);
/// real for real s (conjugate pair).  Throws PoleError at Gamma poles.
std::complex<double> gamma_factor(std::complex<double> s, double kappa, int p);

/// G(v, kappa, p) = gamma(1/2 + v, kappa, p) / gamma(1/2, kappa, p) * exp(v^2);
/// G(0) = 1 exactly.
std::complex<double> G_weight(std::complex<double> v, double kappa, int p);

/// Truncated contour integrals for the AFE weights:
///   V1(y) = (1/2 pi i) int G(v) y^{-v} dv/v,
///   V2(y) = (1/2 pi i) int zeta(1+2v, 0) G(v)^2 y^{-v} dv/v,
/// over [eps - iU, eps + iU].  `error_envelope` is the shifted-contour error
/// term (K^2+P^2)^eps / (y^eps exp(U^2/2)) (V1) or .../exp(U^2) (V2);
/// `within_tol` records whether it meets spec.tol.
struct AfeValue {
    std::complex<double> value;
    double error_envelope;
    bool within_tol;
};
AfeValue V1(double y, double kappa, int p, const AfeConfig& cfg,
            const QuadratureSpec& spec = {});
AfeValue V2(double y, double kappa, int p, const AfeConfig& cfg,
            const QuadratureSpec& spec = {});

}  // namespace gsieve
