#pragma once

#include <cstdint>
#include <vector>

#include "gsieve/gaussint.hpp"

namespace gsieve {

/// Prime factorization in Z[i]: n = unit * prod(p_i^e_i) with each p_i the
/// canonical (first-quadrant) generator of a prime ideal, pairwise
/// non-associate, sorted by (norm, re, im).
struct Factorization {
    GaussInt unit;
    std::vector<std::pair<GaussInt, int>> factors;

    GaussInt product() const;          // unit * prod p^e, for checking
    std::int64_t divisor_count() const;  // prod (e_i + 1)
};

inline constexpr std::int64_t kDefaultTrialPrimeBound = 1'000'000;

/// Factors nonzero n by trial division of norm(n) over rational primes up to
/// `trial_bound`: 2 ramifies as (1+i)^2, p = 1 (mod 4) splits into conjugate
/// Gaussian primes (found via sqrt(-1) mod p and a Gaussian gcd), and
/// q = 3 (mod 4) stays inert.  A prime or inert-square cofactor beyond the
/// bound is still handled; anything else throws FactorizationBudgetError.
Factorization factor(GaussInt n, std::int64_t trial_bound = kDefaultTrialPrimeBound);

/// All ideal divisors (a) of (n), canonical generators sorted by
/// (norm, re, im); the count is multiplicative.
std::vector<IdealRep> ideal_divisors(const IdealRep& n);
std::vector<IdealRep> ideal_divisors(GaussInt n);

/// Canonical generators of all nonzero ideals with norm <= bound,
/// sorted by (norm, re, im).
std::vector<IdealRep> ideals_norm_le(std::int64_t bound);

/// Canonical generators with norm in (lo, hi], sorted by (norm, re, im).
std::vector<IdealRep> ideals_norm_in(std::int64_t lo, std::int64_t hi);

/// Canonical Gaussian primes with norm <= bound, sorted by (norm, re, im).
std::vector<GaussInt> gaussian_primes_norm_le(std::int64_t bound);

/// Rational primes <= bound (shared sieve).
const std::vector<std::int64_t>& rational_primes_le(std::int64_t bound);

}  // namespace gsieve
