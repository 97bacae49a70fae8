#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gsieve/errors.hpp"

namespace gsieve {

/// Exact Gaussian integer a+bi on 64-bit signed components.
///
/// All arithmetic is overflow-checked; operands whose norm would exceed
/// 2^62 are rejected with ArithmeticOverflow rather than wrapping.
struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr GaussInt() = default;
    constexpr GaussInt(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}

    friend constexpr bool operator==(GaussInt a, GaussInt b) {
        return a.re == b.re && a.im == b.im;
    }
    friend constexpr bool operator!=(GaussInt a, GaussInt b) { return !(a == b); }

    constexpr bool is_zero() const { return re == 0 && im == 0; }
    /// Units are exactly {1, -1, i, -i}.
    constexpr bool is_unit() const {
        return (re == 1 || re == -1) ? im == 0 : (re == 0 && (im == 1 || im == -1));
    }

    constexpr GaussInt conj() const { return {re, -im}; }
    GaussInt neg() const;
    /// Multiplication by i (unit rotation).
    GaussInt mul_i() const;

    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
    /// |z| as a double.
    double abs() const;
    /// arg(z) in (-pi, pi].
    double arg() const;

    std::string str() const;
};

std::ostream& operator<<(std::ostream&, GaussInt);

/// norm(z) = re^2 + im^2, checked; throws ArithmeticOverflow past 2^62.
std::int64_t norm(GaussInt z);

GaussInt add(GaussInt a, GaussInt b);
GaussInt sub(GaussInt a, GaussInt b);
GaussInt mul(GaussInt a, GaussInt b);

GaussInt operator+(GaussInt a, GaussInt b);
GaussInt operator-(GaussInt a, GaussInt b);
GaussInt operator*(GaussInt a, GaussInt b);
GaussInt operator-(GaussInt a);

/// True iff b | a (exact divisibility in Z[i]); b must be nonzero.
bool divides(GaussInt b, GaussInt a);

/// Exact quotient a/b; throws DomainError unless b | a.
GaussInt div_exact(GaussInt a, GaussInt b);

/// Euclidean division: a = q*b + r with norm(r) <= norm(b)/2.
/// Each coordinate of a/b is rounded to the nearest integer, ties toward
/// -infinity.
struct DivRem {
    GaussInt q, r;
};
DivRem div_rem(GaussInt a, GaussInt b);

/// Canonical generator of the ideal (n): the unique associate with
/// re > 0, im >= 0, i.e. argument in [0, pi/2).  Requires n != 0.
struct IdealRep {
    GaussInt gen;

    IdealRep() : gen(1, 0) {}
    explicit IdealRep(GaussInt z);  // canonicalizes

    friend bool operator==(const IdealRep& a, const IdealRep& b) {
        return a.gen == b.gen;
    }
    friend bool operator!=(const IdealRep& a, const IdealRep& b) { return !(a == b); }
    /// Orders by (norm, re, im); a deterministic total order.
    friend bool operator<(const IdealRep& a, const IdealRep& b);
};

/// The canonical associate of z (argument in [0, pi/2)); z must be nonzero.
GaussInt canonical(GaussInt z);

/// The unit u with u*z = canonical(z).
GaussInt canonicalizing_unit(GaussInt z);

/// Extended gcd: g = a*x + b*y with g the canonical generator of (a, b).
/// Not both inputs may be zero.
struct GcdResult {
    GaussInt g, x, y;
};
GcdResult gcd_ext(GaussInt a, GaussInt b);

/// gcd as a canonical generator (gcd(a,0) = canonical(a)).
GaussInt gcd(GaussInt a, GaussInt b);

/// Representatives of the unit group modulo squares: {1, i}.
std::vector<GaussInt> units_mod_squares();

}  // namespace gsieve
