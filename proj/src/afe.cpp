#include "gsieve/afe.hpp"

#include <numbers>

#include "gsieve/errors.hpp"
#include "gsieve/hecke.hpp"
#include "gsieve/loggamma.hpp"

namespace gsieve {

namespace {

constexpr double kPi = std::numbers::pi;

void check_pole(std::complex<double> z, const char* what) {
    if (std::abs(z.imag()) < 1e-12 && z.real() < 0.5 &&
        std::abs(z.real() - std::nearbyint(z.real())) < 1e-12)
        throw PoleError(what);
}

std::complex<double> log_gamma_factor(std::complex<double> s, double kappa, int p) {
    std::complex<double> a = s + std::complex<double>(std::abs(p) / 2.0, kappa / 2.0);
    std::complex<double> b = s + std::complex<double>(std::abs(p) / 2.0, -kappa / 2.0);
    check_pole(a, "gamma_factor: pole");
    check_pole(b, "gamma_factor: pole");
    return lgamma_complex(a) + lgamma_complex(b);
}

// Common contour driver: integrates f(v) y^{-v} / v over v = eps + it,
// t in [-U, U], normalized by 1/(2 pi).
template <typename F>
std::complex<double> contour(const AfeConfig& cfg, double y,
                             const QuadratureSpec& spec, F&& f) {
    double lny = std::log(y);
    auto integrand = [&](double t) -> std::complex<double> {
        std::complex<double> v(cfg.eps, t);
        return f(v) * std::exp(-v * lny) / v;
    };
    double width = std::min({cfg.U / 4.0, kPi / (2.0 * (1.0 + std::abs(lny))), 0.5});
    std::vector<double> bounds{0.0};
    while (bounds.back() < cfg.U)
        bounds.push_back(std::min(cfg.U, bounds.back() + width));
    KahanComplex acc;
    // Symmetric pairs keep the real-y result real to roundoff.
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        acc.add(gl_panel(integrand, bounds[i], bounds[i + 1], spec.panel_nodes));
        auto neg = [&](double t) { return integrand(-t); };
        acc.add(gl_panel(neg, bounds[i], bounds[i + 1], spec.panel_nodes));
    }
    return acc.value() / (2.0 * kPi);
}

}  // namespace

std::complex<double> gamma_factor(std::complex<double> s, double kappa, int p) {
    return std::exp(log_gamma_factor(s, kappa, p));
}

std::complex<double> G_weight(std::complex<double> v, double kappa, int p) {
    std::complex<double> half(0.5, 0.0);
    return std::exp(log_gamma_factor(half + v, kappa, p) -
                    log_gamma_factor(half, kappa, p) + v * v);
}

AfeValue V1(double y, double kappa, int p, const AfeConfig& cfg,
            const QuadratureSpec& spec) {
    if (!(y > 0.0)) throw DomainError("V1: y must be positive");
    std::complex<double> v = contour(
        cfg, y, spec, [&](std::complex<double> w) { return G_weight(w, kappa, p); });
    double env = std::pow(cfg.kp_sq, cfg.eps) /
                 (std::pow(y, cfg.eps) * std::exp(cfg.U * cfg.U / 2.0));
    return {v, env, env <= spec.tol};
}

AfeValue V2(double y, double kappa, int p, const AfeConfig& cfg,
            const QuadratureSpec& spec) {
    if (!(y > 0.0)) throw DomainError("V2: y must be positive");
    // zeta(1+2v, 0) is evaluated right of its pole: Re(1+2v) = 1 + 2 eps.
    if (!(cfg.eps > 0.0)) throw PoleError("V2: contour must have eps > 0");
    std::complex<double> v =
        contour(cfg, y, spec, [&](std::complex<double> w) {
            std::complex<double> g = G_weight(w, kappa, p);
            return dedekind_zeta(1.0 + 2.0 * w) * g * g;
        });
    double env = std::pow(cfg.kp_sq, cfg.eps) /
                 (std::pow(y, cfg.eps) * std::exp(cfg.U * cfg.U));
    return {v, env, env <= spec.tol};
}

}  // namespace gsieve
