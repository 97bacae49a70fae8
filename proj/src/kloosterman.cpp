#include "gsieve/kloosterman.hpp"

#include <cmath>
#include <numbers>

#include "gsieve/factor.hpp"

namespace gsieve {

namespace {

using i128 = __int128;

// Kahan-compensated accumulator for complex doubles.
struct Kahan {
    double sr = 0, cr = 0, si = 0, ci = 0;
    void add(std::complex<double> v) {
        double yr = v.real() - cr, yi = v.imag() - ci;
        double tr = sr + yr, ti = si + yi;
        cr = (tr - sr) - yr;
        ci = (ti - si) - yi;
        sr = tr;
        si = ti;
    }
    std::complex<double> value() const { return {sr, si}; }
};

// e[w/c] for exact w, c: depends only on Re(w * conj(c)) modulo norm(c),
// which is reduced exactly in integers before any rounding.
std::complex<double> char_of_quotient(GaussInt w, GaussInt c, std::int64_t nc) {
    i128 x = i128(w.re) * c.re + i128(w.im) * c.im;
    i128 r = x % nc;
    if (r < 0) r += nc;
    double phase = 2.0 * std::numbers::pi * static_cast<double>(r) /
                   static_cast<double>(nc);
    return {std::cos(phase), std::sin(phase)};
}

}  // namespace

std::complex<double> additive_char(std::complex<double> z) {
    double phase = 2.0 * std::numbers::pi * z.real();
    return {std::cos(phase), std::sin(phase)};
}

KloostermanTable::KloostermanTable(GaussInt c, std::int64_t cap) : modulus_(c) {
    if (c.is_zero()) throw DomainError("KloostermanTable: zero modulus");
    norm_c_ = norm(c);
    if (norm_c_ > cap) throw SizeError("KloostermanTable: norm(c) exceeds cap");
    ResidueSystem rs = residue_system(c, cap);
    pairs_.reserve(rs.reps.size());
    for (GaussInt alpha : rs.reps) {
        GcdResult g = gcd_ext(alpha, c);
        if (!g.g.is_unit()) continue;
        pairs_.emplace_back(alpha, canonical_residue(g.x, c));
    }
}

std::complex<double> KloostermanTable::sum(GaussInt m, GaussInt n) const {
    // S(m,n;c) only depends on m, n mod c; reducing first also keeps every
    // product within the checked 64-bit range.
    m = canonical_residue(m, modulus_);
    n = canonical_residue(n, modulus_);
    Kahan acc;
    for (const auto& [alpha, delta] : pairs_) {
        GaussInt w = add(mul(alpha, m), mul(delta, n));
        acc.add(char_of_quotient(w, modulus_, norm_c_));
    }
    return acc.value();
}

std::complex<double> kloosterman_sum(const KloostermanQuery& q, std::int64_t cap) {
    return KloostermanTable(q.c, cap).sum(q.m, q.n);
}

std::complex<double> kloosterman_sum_naive(const KloostermanQuery& q, std::int64_t cap) {
    if (q.c.is_zero()) throw DomainError("kloosterman_sum_naive: zero modulus");
    std::int64_t nc = norm(q.c);
    if (nc > cap) throw SizeError("kloosterman_sum_naive: norm(c) exceeds cap");
    ResidueSystem rs = residue_system(q.c, cap);
    GaussInt m = canonical_residue(q.m, q.c);
    GaussInt n = canonical_residue(q.n, q.c);
    GaussInt one{1, 0};
    Kahan acc;
    for (GaussInt alpha : rs.reps) {
        for (GaussInt delta : rs.reps) {
            if (!divides(q.c, sub(mul(alpha, delta), one))) continue;
            GaussInt w = add(mul(alpha, m), mul(delta, n));
            acc.add(char_of_quotient(w, q.c, nc));
        }
    }
    return acc.value();
}

std::complex<double> ramanujan_sum(GaussInt n, GaussInt c, std::int64_t cap) {
    return kloosterman_sum({n, GaussInt{0, 0}, c}, cap);
}

double weil_ratio(const KloostermanQuery& q, std::int64_t cap) {
    std::complex<double> s = kloosterman_sum(q, cap);
    auto tau_c = static_cast<double>(factor(q.c).divisor_count());
    GaussInt g;
    if (q.m.is_zero() && q.n.is_zero())
        g = canonical(q.c);
    else
        g = gcd(gcd(q.m, q.n), q.c);
    return std::abs(s) / (tau_c * g.abs() * q.c.abs());
}

}  // namespace gsieve
