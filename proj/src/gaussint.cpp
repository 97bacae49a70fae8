#include "gsieve/gaussint.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace gsieve {

namespace {

// Norms are capped at 2^62, so components fit in 32 bits of headroom and
// every intermediate product below fits in __int128.
using i128 = __int128;

constexpr std::int64_t kNormCap = std::int64_t{1} << 62;

std::int64_t checked_i64(i128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) throw ArithmeticOverflow(what);
    return static_cast<std::int64_t>(v);
}

// floor(num / den) for den > 0.
i128 floor_div(i128 num, i128 den) {
    i128 q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

// Nearest integer to num/den (den > 0), ties toward -infinity.
i128 round_ties_down(i128 num, i128 den) {
    return floor_div(2 * num + den - 1, 2 * den);
}

}  // namespace

std::int64_t norm(GaussInt z) {
    i128 n = i128(z.re) * z.re + i128(z.im) * z.im;
    if (n > kNormCap) throw ArithmeticOverflow("GaussInt norm exceeds 2^62");
    return static_cast<std::int64_t>(n);
}

GaussInt GaussInt::neg() const { return {-re, -im}; }
GaussInt GaussInt::mul_i() const { return {-im, re}; }

double GaussInt::abs() const { return std::sqrt(static_cast<double>(norm(*this))); }

double GaussInt::arg() const {
    return std::atan2(static_cast<double>(im), static_cast<double>(re));
}

std::string GaussInt::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, GaussInt z) {
    os << z.re;
    if (z.im >= 0)
        os << "+" << z.im << "i";
    else
        os << z.im << "i";
    return os;
}

GaussInt add(GaussInt a, GaussInt b) {
    GaussInt s{checked_i64(i128(a.re) + b.re, "GaussInt add"),
               checked_i64(i128(a.im) + b.im, "GaussInt add")};
    norm(s);
    return s;
}

GaussInt sub(GaussInt a, GaussInt b) {
    GaussInt s{checked_i64(i128(a.re) - b.re, "GaussInt sub"),
               checked_i64(i128(a.im) - b.im, "GaussInt sub")};
    norm(s);
    return s;
}

GaussInt mul(GaussInt a, GaussInt b) {
    norm(a);
    norm(b);
    i128 re = i128(a.re) * b.re - i128(a.im) * b.im;
    i128 im = i128(a.re) * b.im + i128(a.im) * b.re;
    GaussInt p{checked_i64(re, "GaussInt mul"), checked_i64(im, "GaussInt mul")};
    norm(p);
    return p;
}

GaussInt operator+(GaussInt a, GaussInt b) { return add(a, b); }
GaussInt operator-(GaussInt a, GaussInt b) { return sub(a, b); }
GaussInt operator*(GaussInt a, GaussInt b) { return mul(a, b); }
GaussInt operator-(GaussInt a) { return a.neg(); }

DivRem div_rem(GaussInt a, GaussInt b) {
    if (b.is_zero()) throw DomainError("div_rem: zero divisor");
    std::int64_t nb = norm(b);
    norm(a);
    // a/b = a * conj(b) / norm(b); round coordinates with ties toward -inf.
    i128 x = i128(a.re) * b.re + i128(a.im) * b.im;
    i128 y = i128(a.im) * b.re - i128(a.re) * b.im;
    GaussInt q{checked_i64(round_ties_down(x, nb), "div_rem"),
               checked_i64(round_ties_down(y, nb), "div_rem")};
    GaussInt r = sub(a, mul(q, b));
    return {q, r};
}

bool divides(GaussInt b, GaussInt a) {
    if (b.is_zero()) throw DomainError("divides: zero divisor");
    std::int64_t nb = norm(b);
    i128 x = i128(a.re) * b.re + i128(a.im) * b.im;
    i128 y = i128(a.im) * b.re - i128(a.re) * b.im;
    return x % nb == 0 && y % nb == 0;
}

GaussInt div_exact(GaussInt a, GaussInt b) {
    if (b.is_zero()) throw DomainError("div_exact: zero divisor");
    std::int64_t nb = norm(b);
    i128 x = i128(a.re) * b.re + i128(a.im) * b.im;
    i128 y = i128(a.im) * b.re - i128(a.re) * b.im;
    if (x % nb != 0 || y % nb != 0) throw DomainError("div_exact: not divisible");
    return {checked_i64(x / nb, "div_exact"), checked_i64(y / nb, "div_exact")};
}

GaussInt canonicalizing_unit(GaussInt z) {
    if (z.is_zero()) throw DomainError("canonical: zero has no canonical associate");
    // Exactly one of z, iz, -z, -iz has re > 0, im >= 0.
    GaussInt u{1, 0};
    GaussInt w = z;
    for (int k = 0; k < 4; ++k) {
        if (w.re > 0 && w.im >= 0) return u;
        w = w.mul_i();
        u = u.mul_i();
    }
    throw DomainError("canonical: unreachable");
}

GaussInt canonical(GaussInt z) { return mul(z, canonicalizing_unit(z)); }

IdealRep::IdealRep(GaussInt z) : gen(canonical(z)) {}

bool operator<(const IdealRep& a, const IdealRep& b) {
    std::int64_t na = norm(a.gen), nb = norm(b.gen);
    if (na != nb) return na < nb;
    if (a.gen.re != b.gen.re) return a.gen.re < b.gen.re;
    return a.gen.im < b.gen.im;
}

GcdResult gcd_ext(GaussInt a, GaussInt b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd_ext: both inputs zero");
    // Standard extended Euclid; invariants r0 = a*x0 + b*y0, r1 = a*x1 + b*y1.
    GaussInt r0 = a, r1 = b;
    GaussInt x0{1, 0}, y0{0, 0}, x1{0, 0}, y1{1, 0};
    while (!r1.is_zero()) {
        DivRem d = div_rem(r0, r1);
        GaussInt r2 = d.r;
        GaussInt x2 = sub(x0, mul(d.q, x1));
        GaussInt y2 = sub(y0, mul(d.q, y1));
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
        y0 = y1; y1 = y2;
    }
    GaussInt u = canonicalizing_unit(r0);
    return {mul(r0, u), mul(x0, u), mul(y0, u)};
}

GaussInt gcd(GaussInt a, GaussInt b) { return gcd_ext(a, b).g; }

std::vector<GaussInt> units_mod_squares() {
    // O^x = {1, -1, i, -i}, squares = {1, -1}; transversal {1, i}.
    return {GaussInt{1, 0}, GaussInt{0, 1}};
}

}  // namespace gsieve
