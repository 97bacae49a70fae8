#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gsieve/gaussint.hpp"

namespace gsieve {

/// A complete transversal of Z[i]/(c).
///
/// Built from the Smith normal form of the rank-2 lattice spanned by c and
/// i*c inside Z^2, so |reps| = norm(c) exactly and no deduplication is
/// needed.  Representatives are listed in lexicographic order of their
/// Smith coordinates (x, y), 0 <= x < d1, 0 <= y < d2, each reduced to the
/// canonical residue: minimal norm, ties toward the lexicographically
/// greatest (re, im).
struct ResidueSystem {
    GaussInt modulus;
    std::vector<GaussInt> reps;
    std::pair<std::int64_t, std::int64_t> smith_diag;  // d1 * d2 = norm(modulus)
};

inline constexpr std::int64_t kDefaultResidueCap = std::int64_t{1} << 20;

/// Enumerates Z[i]/(c); throws SizeError when norm(c) exceeds the cap.
ResidueSystem residue_system(GaussInt c, std::int64_t norm_cap = kDefaultResidueCap);

/// The canonical representative of z mod c: minimal norm, ties broken by the
/// lexicographically greatest (re, im).
GaussInt canonical_residue(GaussInt z, GaussInt c);

/// Modular inverse: the canonical residue d with a*d == 1 (mod c).
/// Throws NotInvertibleError (carrying gcd(a, c)) when gcd(a, c) is not a
/// unit.
struct NotInvertibleError : DomainError {
    GaussInt gcd_value;
    NotInvertibleError(const std::string& what, GaussInt g)
        : DomainError(what), gcd_value(g) {}
};

GaussInt inv_mod(GaussInt a, GaussInt c);

}  // namespace gsieve
