#include "gsieve/quadform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gsieve/factor.hpp"
#include "gsieve/kloosterman.hpp"

namespace gsieve {

namespace {

constexpr double kPi = std::numbers::pi;

// sqrt on the half-angle branch: canonical n has arg in [0, pi/2), so
// arg(sqrt n) lands in [0, pi/4).
std::complex<double> sqrt_canonical(GaussInt n) {
    double mod = std::pow(static_cast<double>(norm(n)), 0.25);
    return std::polar(mod, 0.5 * n.arg());
}

}  // namespace

CoeffSeq CoeffSeq::make(double N,
                        std::vector<std::pair<IdealRep, std::complex<double>>> v) {
    if (!(N > 0.0)) throw DomainError("CoeffSeq: N must be positive");
    for (const auto& [n, b] : v) {
        double an = n.gen.abs();
        if (!(an > N && an <= std::sqrt(2.0) * N + 1e-12))
            throw DomainError("CoeffSeq: support must satisfy N < |n| <= sqrt(2) N");
    }
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (!(v[i].first < v[i + 1].first))
            throw DomainError("CoeffSeq: duplicate support ideal");
    return {N, std::move(v)};
}

double CoeffSeq::norm2_sq() const {
    KahanReal acc;
    for (const auto& [n, b] : values) acc.add(std::norm(b));
    return acc.value();
}

double quadform_B(const QuadFormQuery& q, std::int64_t budget) {
    if (q.c.is_zero()) throw DomainError("quadform_B: c = 0");
    if (q.theta == std::complex<double>(0.0, 0.0))
        throw DomainError("quadform_B: theta = 0");
    auto pairs = static_cast<std::int64_t>(q.seq.values.size()) *
                 static_cast<std::int64_t>(q.seq.values.size());
    if (pairs * norm(q.c) > budget) throw BudgetError("quadform_B: budget exceeded");

    KloostermanTable table(q.c);
    std::complex<double> theta_over_c =
        q.theta * std::complex<double>(q.c.re, -q.c.im) /
        static_cast<double>(norm(q.c));

    // Cache sqrt(m) theta/c and S(m, n; c) per pair.
    std::vector<std::complex<double>> roots;
    roots.reserve(q.seq.values.size());
    for (const auto& [m, bm] : q.seq.values)
        roots.push_back(sqrt_canonical(m.gen) * theta_over_c);

    KahanComplex acc;
    for (std::size_t i = 0; i < q.seq.values.size(); ++i) {
        for (std::size_t j = 0; j < q.seq.values.size(); ++j) {
            const auto& [m, bm] = q.seq.values[i];
            const auto& [n, bn] = q.seq.values[j];
            std::complex<double> s = table.sum(m.gen, n.gen);
            double phase = 4.0 * kPi * (roots[i] * sqrt_canonical(n.gen)).real();
            acc.add(bm * std::conj(bn) * s * std::cos(phase));
        }
    }
    return acc.value().real();
}

double bound_ratio_1(const QuadFormQuery& q, std::int64_t budget) {
    double b2 = q.seq.norm2_sq();
    auto tau_c = static_cast<double>(factor(q.c).divisor_count());
    double env = tau_c * tau_c * q.c.abs() * q.seq.N * q.seq.N * b2;
    return std::abs(quadform_B(q, budget)) / env;
}

double bound_ratio_2(const QuadFormQuery& q, std::int64_t budget) {
    double b2 = q.seq.norm2_sq();
    double N = q.seq.N, ac = q.c.abs(), at = std::abs(q.theta);
    double env = (ac * ac + N * N + N * ac * at * std::log(2.0 + N * at)) * b2;
    return std::abs(quadform_B(q, budget)) / env;
}

double bound_ratio_3(const QuadFormQuery& q, std::int64_t budget) {
    double N = q.seq.N, ac = q.c.abs(), at = std::abs(q.theta);
    if (!(at < std::pow(2.0, 0.125) && ac < N))
        throw DomainError("bound_ratio_3: proviso |theta| < 2^(1/8), |c| < N violated");
    double env = (N * ac / at) * std::pow(N, 0.1) * q.seq.norm2_sq();
    return std::abs(quadform_B(q, budget)) / env;
}

double smooth_bump(double t) {
    static const double lo = std::pow(2.0, -1.0 / 6.0);
    static const double mid_hi = std::sqrt(2.0);
    auto edge = [](double u) {  // exp(-1/u) glue, 0 at u<=0, 1 at u>=1
        if (u <= 0.0) return 0.0;
        if (u >= 1.0) return 1.0;
        double fa = std::exp(-1.0 / u);
        double fb = std::exp(-1.0 / (1.0 - u));
        return fa / (fa + fb);
    };
    if (t <= lo || t >= 2.0) return 0.0;
    if (t < 1.0) return edge((t - lo) / (1.0 - lo));
    if (t <= mid_hi) return 1.0;
    return edge((2.0 - t) / (2.0 - mid_hi));
}

PoissonCheck poisson_check(GaussInt shift, GaussInt c, std::complex<double> b,
                           double N, double U, const QuadratureSpec& spec) {
    if (c.is_zero()) throw DomainError("poisson_check: c = 0");
    if (!(N > 0.0) || N > 30.0)
        throw DomainError("poisson_check: need 0 < N <= 30 for the lattice sum");
    std::complex<double> a = std::complex<double>(shift.re, shift.im) *
                             std::complex<double>(c.re, -c.im) /
                             static_cast<double>(norm(c));

    // Direct lattice sum over the support |m| <= 2N.
    KahanComplex lhs;
    auto radius = static_cast<std::int64_t>(std::floor(2.0 * N)) + 1;
    for (std::int64_t x = -radius; x <= radius; ++x) {
        for (std::int64_t y = -radius; y <= radius; ++y) {
            double am = std::hypot(static_cast<double>(x), static_cast<double>(y));
            double eta = smooth_bump(am / N);
            if (eta == 0.0) continue;
            std::complex<double> m(static_cast<double>(x), static_cast<double>(y));
            std::complex<double> term =
                eta * additive_char(a * m) *
                std::cos(4.0 * kPi * (b * std::sqrt(m)).real());
            lhs.add(term);
        }
    }

    // Dual side in the rescaled chart: w-annulus |w| in [2^{-1/12}, sqrt 2].
    const double rho0 = std::pow(2.0, -1.0 / 12.0), rho1 = std::sqrt(2.0);
    double sqrtN = std::sqrt(N);
    auto f_hat = [&](std::complex<double> u) {
        std::complex<double> du = a - u;
        double adu = std::abs(du), ab = std::abs(b);
        // Phase amplitudes in alpha: 2 pi |du| N rho^2 on the e^{2 i alpha}
        // harmonic and 2 pi |b| sqrt(N) rho on e^{i alpha}; node count covers
        // twice the first plus the Airy edges.
        double amp2 = 2.0 * kPi * adu * N * rho1 * rho1;
        double amp1 = 2.0 * kPi * ab * sqrtN * rho1;
        double band = 2.0 * amp2 + amp1 + 6.0 * std::cbrt(amp2 + amp1 + 1.0) + 24.0;
        int n_alpha = 2 * static_cast<int>(std::ceil(band / 2.0)) + 16;
        auto ring = [&](double rho) -> std::complex<double> {
            double eta = smooth_bump(rho * rho);
            if (eta == 0.0) return 0.0;
            double pref = eta * rho * rho * rho;
            auto f = [&](double alpha) -> std::complex<double> {
                std::complex<double> w = std::polar(rho, alpha);
                std::complex<double> arg = du * N * w * w - 2.0 * b * sqrtN * w;
                return additive_char(arg);
            };
            return pref * trapezoid_periodic(f, 2.0 * kPi, n_alpha);
        };
        double freq = 2.0 * kPi * (2.0 * adu * N * rho1 + 2.0 * ab * sqrtN);
        std::vector<double> bounds = oscillation_panels(rho0, rho1, 0.1, [&](double) {
            return freq;
        });
        KahanComplex acc;
        for (std::size_t i = 0; i + 1 < bounds.size(); ++i)
            acc.add(gl_panel(ring, bounds[i], bounds[i + 1], spec.panel_nodes));
        return 2.0 * N * N * acc.value();
    };

    KahanComplex rhs;
    auto ur = static_cast<std::int64_t>(std::floor(U)) + 1;
    auto ax = static_cast<std::int64_t>(std::llround(a.real()));
    auto ay = static_cast<std::int64_t>(std::llround(a.imag()));
    for (std::int64_t x = ax - ur; x <= ax + ur; ++x) {
        for (std::int64_t y = ay - ur; y <= ay + ur; ++y) {
            std::complex<double> u(static_cast<double>(x), static_cast<double>(y));
            if (std::abs(u - a) > U) continue;
            rhs.add(f_hat(u));
        }
    }
    PoissonCheck out{lhs.value(), rhs.value(), 0.0};
    out.discrepancy = std::abs(out.lhs - out.rhs);
    return out;
}

}  // namespace gsieve
