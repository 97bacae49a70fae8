#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "gsieve/gaussint.hpp"
#include "gsieve/residue.hpp"

namespace gsieve {

/// e[z] = exp(2*pi*i*Re(z)); always unit modulus.
std::complex<double> additive_char(std::complex<double> z);

struct KloostermanQuery {
    GaussInt m, n, c;
};

inline constexpr std::int64_t kDefaultKloostermanCap = std::int64_t{1} << 20;

/// Invertible residues mod c paired with their inverses, built once per
/// modulus and reused across (m, n) pairs.  Read-only after construction.
///
/// Accumulation is compensated (Kahan) in residue-system order, so results
/// are reproducible across runs; for norm(c) <= 10^6 the absolute error is
/// well below 1e-7.
class KloostermanTable {
  public:
    explicit KloostermanTable(GaussInt c, std::int64_t cap = kDefaultKloostermanCap);

    /// S(m,n;c) = sum over alpha*delta == 1 (mod c) of e[(alpha*m + delta*n)/c].
    /// Real up to roundoff; norm(c) = 1 gives 1.
    std::complex<double> sum(GaussInt m, GaussInt n) const;

    GaussInt modulus() const { return modulus_; }
    std::int64_t unit_count() const { return static_cast<std::int64_t>(pairs_.size()); }

  private:
    GaussInt modulus_;
    std::int64_t norm_c_;
    std::vector<std::pair<GaussInt, GaussInt>> pairs_;  // (alpha, alpha^{-1})
};

/// One-shot S(m,n;c) through a freshly built table.
std::complex<double> kloosterman_sum(const KloostermanQuery& q,
                                     std::int64_t cap = kDefaultKloostermanCap);

/// Naive oracle: scans all residue pairs (alpha, delta) and keeps those with
/// alpha*delta == 1 (mod c).  Independent of the inverse-table path.
std::complex<double> kloosterman_sum_naive(const KloostermanQuery& q,
                                           std::int64_t cap = kDefaultKloostermanCap);

/// Ramanujan sum S(n, 0; c).
std::complex<double> ramanujan_sum(GaussInt n, GaussInt c,
                                   std::int64_t cap = kDefaultKloostermanCap);

/// |S(m,n;c)| / (tau((c)) * |gcd(m,n,c)| * |c|), the Weil-normalized ratio.
double weil_ratio(const KloostermanQuery& q,
                  std::int64_t cap = kDefaultKloostermanCap);

}  // namespace gsieve
