#include "gsieve/factor.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace gsieve {

namespace {

using u128 = unsigned __int128;
using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// sqrt(-1) mod p for p = 1 (mod 4): x = a^((p-1)/4) with a the least
// quadratic non-residue.
u64 sqrt_minus_one(u64 p) {
    for (u64 a = 2;; ++a) {
        if (powmod(a, (p - 1) / 2, p) == p - 1) return powmod(a, (p - 1) / 4, p);
    }
}

// Canonical Gaussian prime above a split rational prime p = 1 (mod 4).
GaussInt split_prime(std::int64_t p) {
    u64 x = sqrt_minus_one(static_cast<u64>(p));
    return gcd(GaussInt{p, 0}, GaussInt{static_cast<std::int64_t>(x), 1});
}

int divide_out(GaussInt& n, GaussInt p) {
    int e = 0;
    while (divides(p, n)) {
        n = div_exact(n, p);
        ++e;
    }
    return e;
}

std::vector<std::int64_t> sieve_primes(std::int64_t bound) {
    std::vector<bool> comp(static_cast<std::size_t>(bound) + 1, false);
    std::vector<std::int64_t> primes;
    for (std::int64_t i = 2; i <= bound; ++i) {
        if (comp[static_cast<std::size_t>(i)]) continue;
        primes.push_back(i);
        for (std::int64_t j = i * i; j <= bound; j += i) comp[static_cast<std::size_t>(j)] = true;
    }
    return primes;
}

}  // namespace

const std::vector<std::int64_t>& rational_primes_le(std::int64_t bound) {
    static std::mutex mtx;
    static std::vector<std::int64_t> primes;
    static std::int64_t covered = 0;
    std::lock_guard<std::mutex> lock(mtx);
    if (bound > covered) {
        // Sieve generously so the table never regrows under concurrent use.
        std::int64_t target = std::max(bound, kDefaultTrialPrimeBound);
        primes = sieve_primes(target);
        covered = target;
    }
    return primes;
}

GaussInt Factorization::product() const {
    GaussInt r = unit;
    for (const auto& [p, e] : factors)
        for (int i = 0; i < e; ++i) r = mul(r, p);
    return r;
}

std::int64_t Factorization::divisor_count() const {
    std::int64_t c = 1;
    for (const auto& [p, e] : factors) c *= (e + 1);
    return c;
}

Factorization factor(GaussInt n, std::int64_t trial_bound) {
    if (n.is_zero()) throw DomainError("factor: zero input");
    Factorization f;
    GaussInt rest = n;

    auto push = [&](GaussInt p, int e) {
        if (e > 0) f.factors.emplace_back(p, e);
    };

    push(GaussInt{1, 1}, divide_out(rest, GaussInt{1, 1}));

    std::int64_t remaining_norm = norm(rest);
    const auto& primes = rational_primes_le(trial_bound);
    for (std::int64_t p : primes) {
        if (p > trial_bound || p * p > remaining_norm) break;
        if (p == 2) continue;
        if (remaining_norm % p != 0) continue;
        if (p % 4 == 3) {
            push(GaussInt{p, 0}, divide_out(rest, GaussInt{p, 0}));
        } else {
            GaussInt pi = split_prime(p);
            push(pi, divide_out(rest, pi));
            GaussInt pibar = canonical(pi.conj());
            push(pibar, divide_out(rest, pibar));
        }
        remaining_norm = norm(rest);
    }

    // Cofactor beyond the trial bound: recognizable cases are a prime norm
    // (one split prime) or a prime-squared norm (an inert prime, or a pair /
    // power of conjugate split primes).
    remaining_norm = norm(rest);
    if (remaining_norm > 1) {
        std::int64_t q = 0;
        {
            auto r = static_cast<std::int64_t>(
                std::llround(std::sqrt(static_cast<double>(remaining_norm))));
            for (std::int64_t d = -2; d <= 2; ++d)
                if (r + d > 1 && (r + d) * (r + d) == remaining_norm) q = r + d;
        }
        if (is_prime_u64(static_cast<u64>(remaining_norm))) {
            // 2 and its square were already divided out, so the prime splits.
            GaussInt pi = split_prime(remaining_norm);
            int e = divide_out(rest, pi);
            if (e == 0) {
                pi = canonical(pi.conj());
                e = divide_out(rest, pi);
            }
            push(pi, e);
        } else if (q > 1 && is_prime_u64(static_cast<u64>(q))) {
            if (q % 4 == 3) {
                push(GaussInt{q, 0}, divide_out(rest, GaussInt{q, 0}));
            } else {
                GaussInt pi = split_prime(q);
                push(pi, divide_out(rest, pi));
                GaussInt pibar = canonical(pi.conj());
                push(pibar, divide_out(rest, pibar));
            }
        }
        if (norm(rest) != 1)
            throw FactorizationBudgetError("factor: cofactor not factorable in budget");
    }

    f.unit = rest;  // all primes divided out exactly
    std::sort(f.factors.begin(), f.factors.end(), [](const auto& a, const auto& b) {
        return IdealRep(a.first) < IdealRep(b.first);
    });
    return f;
}

std::vector<IdealRep> ideal_divisors(const IdealRep& n) {
    Factorization f = factor(n.gen);
    std::vector<IdealRep> divs;
    divs.reserve(static_cast<std::size_t>(f.divisor_count()));
    // Mixed-radix enumeration of exponent vectors.
    std::vector<int> e(f.factors.size(), 0);
    for (;;) {
        GaussInt d{1, 0};
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) d = mul(d, f.factors[i].first);
        divs.emplace_back(d);
        std::size_t i = 0;
        while (i < e.size() && e[i] == f.factors[i].second) {
            e[i] = 0;
            ++i;
        }
        if (i == e.size()) break;
        ++e[i];
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<IdealRep> ideal_divisors(GaussInt n) { return ideal_divisors(IdealRep(n)); }

std::vector<IdealRep> ideals_norm_le(std::int64_t bound) {
    return ideals_norm_in(0, bound);
}

std::vector<IdealRep> ideals_norm_in(std::int64_t lo, std::int64_t hi) {
    std::vector<IdealRep> out;
    if (hi < 1) return out;
    auto rmax = static_cast<std::int64_t>(std::sqrt(static_cast<double>(hi))) + 2;
    for (std::int64_t a = 1; a <= rmax; ++a) {
        if (a * a > hi) break;
        for (std::int64_t b = 0; a * a + b * b <= hi; ++b) {
            std::int64_t nn = a * a + b * b;
            if (nn > lo) {
                IdealRep r;
                r.gen = GaussInt{a, b};
                out.push_back(r);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GaussInt> gaussian_primes_norm_le(std::int64_t bound) {
    std::vector<GaussInt> out;
    if (bound >= 2) out.push_back(GaussInt{1, 1});
    const auto& primes = rational_primes_le(bound);
    for (std::int64_t p : primes) {
        if (p > bound) break;
        if (p == 2) continue;
        if (p % 4 == 1) {
            GaussInt pi = split_prime(p);
            out.push_back(pi);
            out.push_back(canonical(pi.conj()));
        } else if (p % 4 == 3 && p * p <= bound) {
            out.push_back(GaussInt{p, 0});
        }
    }
    std::sort(out.begin(), out.end(), [](GaussInt a, GaussInt b) {
        return IdealRep(a) < IdealRep(b);
    });
    return out;
}

}  // namespace gsieve
