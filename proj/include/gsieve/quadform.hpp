#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "gsieve/gaussint.hpp"
#include "gsieve/quadrature.hpp"

namespace gsieve {

/// A finite coefficient sequence supported on the annulus N < |n| <= sqrt(2) N
/// (norms in (N^2, 2N^2]), keyed by canonical ideal generators.
struct CoeffSeq {
    double N = 1.0;
    std::vector<std::pair<IdealRep, std::complex<double>>> values;  // sorted

    /// Validates support and canonicality, sorts by ideal.
    static CoeffSeq make(double N,
                         std::vector<std::pair<IdealRep, std::complex<double>>> v);

    /// ||b_N||_2^2 = sum |b_(n)|^2.
    double norm2_sq() const;
};

struct QuadFormQuery {
    std::complex<double> theta;  // nonzero
    GaussInt c;                  // nonzero
    CoeffSeq seq;
};

inline constexpr std::int64_t kDefaultQuadFormBudget = std::int64_t{1} << 32;

/// B(theta, c, N) = sum over m, n in the support of
///   b_(m) conj(b_(n)) S(m,n;c) cos(4 pi Re(sqrt(m n) theta / c)),
/// with sqrt(mn) = sqrt(m) sqrt(n) on the branch arg(sqrt) in [0, pi/4) for
/// canonical m, n.  Real by the Hermitian symmetry of the summand.
double quadform_B(const QuadFormQuery& q,
                  std::int64_t budget = kDefaultQuadFormBudget);

/// |B| divided by the three bound envelopes:
///   (1)  tau(c)^2 |c| N^2 ||b||^2
///   (2)  (|c|^2 + N^2 + |N c theta| log(2 + |N theta|)) ||b||^2
///   (3)  |N c / theta| N^0.1 ||b||^2, requiring |theta| < 2^{1/8}, |c| < N.
double bound_ratio_1(const QuadFormQuery& q, std::int64_t budget = kDefaultQuadFormBudget);
double bound_ratio_2(const QuadFormQuery& q, std::int64_t budget = kDefaultQuadFormBudget);
double bound_ratio_3(const QuadFormQuery& q, std::int64_t budget = kDefaultQuadFormBudget);

/// Smooth bump supported in [2^{-1/6}, 2], identically 1 on [1, sqrt 2],
/// built from the exp(-1/u) transition.
double smooth_bump(double t);

/// Poisson-summation cross-check for the lattice sum
///   C = sum_{m in Z[i]} eta(|m|/N) e[a m] cos(4 pi Re(b sqrt m)),
/// a = shift/c: `lhs` is the direct lattice sum, `rhs` the dual-side sum of
/// numerically integrated transforms f_hat(u) over |u - a| <= U, evaluated
/// in the sqrt(N)-rescaled chart
///   f_hat(u) = 2 N^2 int eta(|w|^2) |w|^2 e[(a-u) N w^2 - 2 b sqrt(N) w] dA(w).
struct PoissonCheck {
    std::complex<double> lhs;
    std::complex<double> rhs;
    double discrepancy;
};
PoissonCheck poisson_check(GaussInt shift, GaussInt c, std::complex<double> b,
                           double N, double U, const QuadratureSpec& spec = {});

}  // namespace gsieve
