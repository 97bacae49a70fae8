#include "gsieve/residue.hpp"

#include <array>
#include <numeric>

namespace gsieve {

namespace {

// Extended gcd on int64: g = gcd(a, b) >= 0 with g = a*x + b*y.
struct Xgcd {
    std::int64_t g, x, y;
};

Xgcd xgcd(std::int64_t a, std::int64_t b) {
    std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        std::int64_t q = a / b;
        std::int64_t t = a - q * b; a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
        t = y0 - q * y1; y0 = y1; y1 = t;
    }
    if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
    return {a, x0, y0};
}

}  // namespace

GaussInt canonical_residue(GaussInt z, GaussInt c) {
    GaussInt r = div_rem(z, c).r;
    // The minimal-norm representative differs from r by delta*c with
    // norm(delta) <= 2, since both lie within |c|/sqrt(2) of the origin.
    static constexpr std::array<GaussInt, 9> kDeltas{
        GaussInt{0, 0},  GaussInt{1, 0},  GaussInt{-1, 0},
        GaussInt{0, 1},  GaussInt{0, -1}, GaussInt{1, 1},
        GaussInt{1, -1}, GaussInt{-1, 1}, GaussInt{-1, -1}};
    GaussInt best = r;
    std::int64_t best_norm = norm(r);
    for (GaussInt d : kDeltas) {
        GaussInt cand = sub(r, mul(d, c));
        std::int64_t n = norm(cand);
        if (n < best_norm ||
            (n == best_norm &&
             (cand.re > best.re || (cand.re == best.re && cand.im > best.im)))) {
            best = cand;
            best_norm = n;
        }
    }
    return best;
}

ResidueSystem residue_system(GaussInt c, std::int64_t norm_cap) {
    if (c.is_zero()) throw DomainError("residue_system: zero modulus");
    std::int64_t nc = norm(c);
    if (nc > norm_cap) throw SizeError("residue_system: norm(c) exceeds cap");

    // The lattice c*Z[i] in Z^2 is spanned by (c.re, c.im) and (-c.im, c.re).
    // Triangular (Hermite) form: the y-coordinates of lattice vectors form
    // g*Z with g = gcd(c.re, c.im), and the x-axis sublattice is a*Z with
    // a*g = norm(c).  Hence {x + iy : 0 <= x < a, 0 <= y < g} is a complete
    // duplicate-free transversal, and the Smith invariants are (g, a): g
    // divides a because g^2 | norm(c).
    std::int64_t g = xgcd(c.re, c.im).g;
    std::int64_t a = nc / g;

    ResidueSystem rs;
    rs.modulus = c;
    rs.smith_diag = {g, a};
    rs.reps.reserve(static_cast<std::size_t>(nc));
    for (std::int64_t x = 0; x < a; ++x)
        for (std::int64_t y = 0; y < g; ++y)
            rs.reps.push_back(canonical_residue(GaussInt{x, y}, c));
    return rs;
}

GaussInt inv_mod(GaussInt a, GaussInt c) {
    if (c.is_zero()) throw DomainError("inv_mod: zero modulus");
    GcdResult g = gcd_ext(a, c);
    if (!g.g.is_unit())
        throw NotInvertibleError("inv_mod: argument not invertible", g.g);
    // g.g == 1 (canonical unit), so a*x == 1 (mod c).
    return canonical_residue(g.x, c);
}

}  // namespace gsieve
