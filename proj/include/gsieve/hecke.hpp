#pragma once

#include <complex>
#include <cstdint>

#include "gsieve/factor.hpp"
#include "gsieve/gaussint.hpp"

namespace gsieve {

/// Index of the Grossencharakter chi_{4p}: (n) -> (n/|n|)^{4p}, well-defined
/// on ideals because unit phases are 4th roots of unity.
struct HeckeCharIndex {
    int p = 0;
};

/// chi_{4p}(n) = (n/|n|)^{4p}; unit modulus, invariant under unit multiples.
std::complex<double> chi(HeckeCharIndex idx, GaussInt n);

/// Partial sum of zeta(s, p) = sum over ideals of chi_{4p}(n) / norm(n)^s
/// over norm(n) <= cutoff, with a rigorous tail bound
///   4 * cutoff^(1-Re s) * Re(s) / (Re(s) - 1),
/// valid because the ideal count up to t is at most 4t for every t >= 1
/// (the count is (pi/4) t + O(sqrt t); the constant 4 absorbs the error
/// term from t = 1 on).  Requires Re(s) > 1.
struct ZetaPartial {
    std::complex<double> value;
    double tail_bound;
};
ZetaPartial zeta_direct(std::complex<double> s, HeckeCharIndex idx, std::int64_t cutoff);

/// zeta(1 + 2i*kappa, p_idx) on the 1-line by a truncated Euler product over
/// Gaussian primes of norm <= prime_cutoff.  No rigorous bound exists on the
/// 1-line; `self_consistency` is |value - value at half the cutoff| and the
/// result is flagged heuristic.  Throws PoleError at (kappa, p) = (0, 0).
struct ZetaOneLine {
    std::complex<double> value;
    double self_consistency;
    bool heuristic = true;
};
ZetaOneLine zeta_oneline(double kappa, HeckeCharIndex idx, std::int64_t prime_cutoff);

/// Dedekind zeta of Q(i): zeta(s, 0) = zeta(s) L(s, chi_4), each factor by
/// an accelerated alternating series; accurate to ~1e-13 for Re(s) > 0.3,
/// |Im(s)| <= 50, s != 1.  Cross-checked against zeta_direct in the tests.
std::complex<double> dedekind_zeta(std::complex<double> s);

/// tau_{s,p}(n) = sum over (a)(b) = (n) of chi_{4p}(a/b) |a/b|^{2s};
/// satisfies tau_{-s,-p} = tau_{s,p} and the Hecke relation.
std::complex<double> tau(std::complex<double> s, int p, const IdealRep& n);

}  // namespace gsieve
