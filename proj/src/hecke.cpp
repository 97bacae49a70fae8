#include "gsieve/hecke.hpp"

#include <cmath>
#include <numbers>

#include "gsieve/quadrature.hpp"

namespace gsieve {

namespace {

// Sum_{k>=0} (-1)^k f(k) by the Cohen-Rodriguez Villegas-Zagier acceleration
// with n Chebyshev steps; error ~ (3+sqrt 8)^{-n} for totally monotone f,
// still excellent for the mildly complex exponents used here.
template <typename F>
std::complex<double> alternating_sum(F&& f, int n) {
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0, c = -d;
    std::complex<double> s = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        s += c * f(k);
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
    }
    return s / d;
}

std::complex<double> riemann_zeta(std::complex<double> s) {
    // zeta = eta / (1 - 2^{1-s}); the alternating eta converges for Re > 0.
    std::complex<double> eta = alternating_sum(
        [&](int k) { return std::exp(-s * std::log(static_cast<double>(k + 1))); }, 64);
    return eta / (1.0 - std::exp((1.0 - s) * std::numbers::ln2));
}

std::complex<double> l_chi4(std::complex<double> s) {
    return alternating_sum(
        [&](int k) { return std::exp(-s * std::log(static_cast<double>(2 * k + 1))); },
        64);
}

}  // namespace

std::complex<double> chi(HeckeCharIndex idx, GaussInt n) {
    if (n.is_zero()) throw DomainError("chi: n = 0");
    return std::polar(1.0, 4.0 * idx.p * n.arg());
}

ZetaPartial zeta_direct(std::complex<double> s, HeckeCharIndex idx, std::int64_t cutoff) {
    double sigma = s.real();
    if (sigma <= 1.0) throw DomainError("zeta_direct: Re(s) <= 1");
    if (cutoff < 1) throw DomainError("zeta_direct: cutoff < 1");
    KahanComplex acc;
    for (const IdealRep& n : ideals_norm_le(cutoff)) {
        double ln_norm = std::log(static_cast<double>(norm(n.gen)));
        acc.add(std::polar(1.0, 4.0 * idx.p * n.gen.arg()) * std::exp(-s * ln_norm));
    }
    double tail = 4.0 * std::pow(static_cast<double>(cutoff), 1.0 - sigma) * sigma /
                  (sigma - 1.0);
    return {acc.value(), tail};
}

ZetaOneLine zeta_oneline(double kappa, HeckeCharIndex idx, std::int64_t prime_cutoff) {
    if (kappa == 0.0 && idx.p == 0)
        throw PoleError("zeta_oneline: pole at s = 1, trivial character");
    std::complex<double> s(1.0, 2.0 * kappa);
    std::complex<double> prod = 1.0;
    std::complex<double> at_half = 1.0;
    for (GaussInt pi : gaussian_primes_norm_le(prime_cutoff)) {
        std::int64_t np = norm(pi);
        std::complex<double> factor =
            1.0 / (1.0 - std::polar(1.0, 4.0 * idx.p * pi.arg()) *
                             std::exp(-s * std::log(static_cast<double>(np))));
        if (np <= prime_cutoff / 2) at_half *= factor;
        prod *= factor;
    }
    return {prod, std::abs(prod - at_half), true};
}

std::complex<double> dedekind_zeta(std::complex<double> s) {
    if (s == std::complex<double>(1.0, 0.0)) throw PoleError("dedekind_zeta: s = 1");
    return riemann_zeta(s) * l_chi4(s);
}

std::complex<double> tau(std::complex<double> s, int p, const IdealRep& n) {
    KahanComplex acc;
    for (const IdealRep& a : ideal_divisors(n)) {
        GaussInt b = canonical(div_exact(n.gen, a.gen));
        double phase = a.gen.arg() - b.arg();
        double log_ratio =
            std::log(static_cast<double>(norm(a.gen))) -
            std::log(static_cast<double>(norm(b)));
        // chi_{4p}(a/b) |a/b|^{2s} = e^{4ip(arg a - arg b)} (Na/Nb)^s
        acc.add(std::polar(1.0, 4.0 * p * phase) * std::exp(s * log_ratio));
    }
    return acc.value();
}

}  // namespace gsieve
