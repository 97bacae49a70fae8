#include "gsieve/bessel.hpp"

#include <cmath>
#include <numbers>

#include "gsieve/loggamma.hpp"

extern "C" double jn(int, double);

namespace gsieve {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesRadius = 30.0;

using cld = std::complex<long double>;

bool is_negative_integer(std::complex<double> nu) {
    return nu.imag() == 0.0 && nu.real() < 0.0 &&
           nu.real() == std::nearbyint(nu.real());
}

// Series at the point r e^{i phi} with the branch (z/2)^nu = e^{nu(log(r/2)+i phi)}
// taken from the given phase, which may sit on either edge of the cut.
BesselSeries series_core_polar(std::complex<double> nu, double r, double phi) {
    std::complex<double> log_t0 =
        nu * std::complex<double>(std::log(r / 2.0), phi) - lgamma_complex(nu + 1.0);
    std::complex<double> z = std::polar(r, phi);
    if (log_t0.real() > 650.0)
        throw RegimeError("bessel_j_series: leading term overflows");
    cld t = std::exp(cld(log_t0));
    cld sum = t;
    cld z2 = cld(z / 2.0);
    cld mz2sq = -z2 * z2;
    cld nul = cld(nu);
    int stagnant = 0;
    int n = 0;
    long double scale = std::abs(t);
    for (n = 1; n <= 600; ++n) {
        t *= mz2sq / (cld(static_cast<long double>(n), 0.0L) *
                      (nul + static_cast<long double>(n)));
        sum += t;
        scale = std::max(scale, std::abs(sum));
        if (std::abs(t) < 1e-20L * (1.0L + std::abs(sum))) {
            if (++stagnant >= 3) break;
        } else {
            stagnant = 0;
        }
    }
    if (stagnant < 3) throw AccuracyError("bessel_j_series: no stagnation", 0.0);
    return {std::complex<double>(sum), n};
}

// J_m(x) for integer m >= 0, real 0 <= x <= 30, by the same series with
// exact rational leading term; long double throughout.
double series_real_int(int m, double x) {
    if (x == 0.0) return m == 0 ? 1.0 : 0.0;
    long double t = 1.0L;
    long double x2 = static_cast<long double>(x) / 2.0L;
    for (int k = 1; k <= m; ++k) t *= x2 / k;
    long double sum = t;
    long double mx2sq = -x2 * x2;
    int stagnant = 0;
    for (int n = 1; n <= 600; ++n) {
        t *= mx2sq / (static_cast<long double>(n) * (m + n));
        sum += t;
        if (fabsl(t) < 1e-22L * (1.0L + fabsl(sum))) {
            if (++stagnant >= 3) break;
        } else {
            stagnant = 0;
        }
    }
    return static_cast<double>(sum);
}

int trapezoid_nodes(double x, int p) {
    return 64 * (1 + static_cast<int>(std::ceil((x + 2.0 * std::abs(p)) / 8.0)));
}

std::complex<double> i_pow_2p(int p) {
    return (p % 2 == 0) ? std::complex<double>(1, 0) : std::complex<double>(-1, 0);
}

// Dispatch with the special integer-order cases; phi may be +-pi.
BesselSeries series_at(std::complex<double> nu, double r, double phi) {
    if (r == 0.0) throw DomainError("bessel_j_series: z = 0");
    if (r > kSeriesRadius)
        throw RegimeError("bessel_j_series: |z| beyond series regime");
    if (is_negative_integer(nu)) {
        // J_{-m} = (-1)^m J_m; the generic leading term degenerates here.
        int m = static_cast<int>(-nu.real());
        BesselSeries s = series_core_polar(std::complex<double>(m, 0.0), r, phi);
        if (m % 2 == 1) s.value = -s.value;
        return s;
    }
    if (nu.imag() == 0.0 && nu.real() >= 0.0 && nu.real() == std::nearbyint(nu.real()) &&
        phi == 0.0) {
        // Integer order on the positive axis: exact rational leading term.
        int m = static_cast<int>(nu.real());
        return {std::complex<double>(series_real_int(m, r), 0.0), 0};
    }
    return series_core_polar(nu, r, phi);
}

}  // namespace

BesselSeries bessel_j_series_info(std::complex<double> nu, std::complex<double> z) {
    return series_at(nu, std::abs(z), std::arg(z));
}

std::complex<double> bessel_j_series(std::complex<double> nu, std::complex<double> z) {
    return bessel_j_series_info(nu, z).value;
}

std::complex<double> kernel_J(BesselOrder ord, std::complex<double> z) {
    // The second factor lives at the reflected phase -arg(z), not at the
    // principal argument of the conjugate point; the two differ only on the
    // negative real axis, where this choice is what makes the kernel even.
    double r = std::abs(z), phi = std::arg(z);
    std::complex<double> p(static_cast<double>(ord.p), 0.0);
    return series_at(ord.nu + p, r, phi).value *
           series_at(ord.nu - p, r, -phi).value;
}

std::complex<double> kernel_boldJ(double kappa, int p, std::complex<double> z,
                                  double eps) {
    double r = std::abs(z), phi = std::arg(z);
    auto eval = [&](double k) -> std::complex<double> {
        // With G = J_{ik+p}(z) J_{ik-p}(zbar), the reflected term is exactly
        // conj(G), so (2pi^2/sin(pi ik)) (J_{-ik,-p} - J_{ik,p}) collapses to
        // -4 pi^2 Im(G) / sinh(pi k); manifestly real.
        std::complex<double> nu(0.0, k);
        std::complex<double> dp(static_cast<double>(p), 0.0);
        std::complex<double> g =
            series_at(nu + dp, r, phi).value * series_at(nu - dp, r, -phi).value;
        return {-4.0 * kPi * kPi * g.imag() / std::sinh(kPi * k), 0.0};
    };
    if (std::abs(kappa) >= 1e-3) return eval(kappa);
    // Removable singularity at nu = 0.  The direct difference loses
    // log-gamma roundoff amplified by 1/kappa, so near zero evaluate at
    // symmetric offsets kappa +- eps (cancels the linear term) and
    // Richardson-extrapolate eps vs eps/2 (cancels the quadratic one).
    auto avg = [&](double e) { return 0.5 * (eval(kappa + e) + eval(kappa - e)); };
    return (4.0 * avg(eps / 2) - avg(eps)) / 3.0;
}

double bessel_2p_real(int p, double x) {
    int n = trapezoid_nodes(x, p);
    KahanComplex acc;
    double h = 2.0 * kPi / n;
    for (int j = 0; j < n; ++j) {
        double w = h * j;
        double phase = 2.0 * p * w + x * std::cos(w);
        acc.add({std::cos(phase), std::sin(phase)});
    }
    std::complex<double> integral = acc.value() * h;
    return (integral / (2.0 * kPi * i_pow_2p(p))).real();
}

double bessel_j2p_fast(int p, double x) {
    int m = 2 * std::abs(p);  // J_{-2|p|} = J_{2|p|}, even order
    if (x <= kSeriesRadius) return series_real_int(m, x);
    return jn(m, x);
}

double bessel_jn_fast(int m, double x) {
    double sign = 1.0;
    if (m < 0) {
        m = -m;
        if (m % 2 == 1) sign = -1.0;
    }
    if (x <= kSeriesRadius) return sign * series_real_int(m, x);
    return sign * jn(m, x);
}

void bessel_jn_table(double x, int m_max, std::vector<double>& out) {
    out.resize(static_cast<std::size_t>(m_max) + 1);
    if (x > 2.0 * m_max + 20.0 && x > kSeriesRadius) {
        // Oscillatory regime: upward recurrence is stable.
        out[0] = jn(0, x);
        if (m_max >= 1) out[1] = jn(1, x);
        for (int m = 1; m < m_max; ++m)
            out[static_cast<std::size_t>(m) + 1] =
                (2.0 * m / x) * out[static_cast<std::size_t>(m)] -
                out[static_cast<std::size_t>(m) - 1];
        return;
    }
    for (int m = 0; m <= m_max; ++m)
        out[static_cast<std::size_t>(m)] = bessel_jn_fast(m, x);
}

std::complex<double> rotated_bessel(std::complex<double> a, int p) {
    if (a == std::complex<double>(0.0, 0.0))
        throw DomainError("rotated_bessel: a = 0");
    double r = std::abs(a);
    std::complex<double> unit = a / r;
    // chibar_{2p}(a) = (a/|a|)^{-2p}
    std::complex<double> chibar = std::polar(1.0, -2.0 * p * std::arg(unit));
    return chibar * bessel_j2p_fast(p, r);
}

std::complex<double> rotated_bessel_quadrature(std::complex<double> a, int p) {
    double x = std::abs(a);
    int n = trapezoid_nodes(x, p);
    KahanComplex acc;
    double h = 2.0 * kPi / n;
    for (int j = 0; j < n; ++j) {
        double w = h * j;
        double phase = 2.0 * p * w +
                       (a * std::complex<double>(std::cos(w), std::sin(w))).real();
        acc.add({std::cos(phase), std::sin(phase)});
    }
    return acc.value() * h / (2.0 * kPi * i_pow_2p(p));
}

double kernel_Y(std::complex<double> z) { return std::abs(z + 1.0 / z); }

std::complex<double> kernel_E(std::complex<double> z) {
    std::complex<double> w = z + 1.0 / z;
    return w / std::abs(w);
}

KernelIntegral kernel_boldJ_integral(double kappa, int p, PolarPoint pt,
                                     const QuadratureSpec& spec) {
    if (pt.x <= 0.0) throw DomainError("kernel_boldJ_integral: x <= 0");
    const double x = pt.x, phi = pt.phi;

    // Tail after one integration by parts: amplitude ~ sqrt(2/(pi w)) at
    // w = 2x sinh R against phase derivative ~ 2x sinh R.
    auto tail_estimate = [&](double R) {
        double w = 2.0 * x * std::sinh(R);
        return 8.0 * kPi * std::sqrt(2.0 / kPi) * (1.0 + p * p / w) /
               (w * std::sqrt(w));
    };
    double R = std::max(spec.kernel_r_min, std::asinh(40.0 / x));
    while (tail_estimate(R) > spec.tol && R < spec.kernel_r_max) R += 0.5;
    double tail = tail_estimate(R);
    if (tail > spec.tol)
        throw AccuracyError("kernel_boldJ_integral: tail estimate exceeds tolerance",
                            tail);

    auto integrand = [&](double r) -> std::complex<double> {
        std::complex<double> u = std::cosh(std::complex<double>(r, phi));
        double m = std::abs(u);
        std::complex<double> osc = std::polar(1.0, 2.0 * kappa * r);
        if (m < 1e-300) return p == 0 ? osc : std::complex<double>(0.0, 0.0);
        std::complex<double> chibar = std::polar(1.0, -2.0 * p * std::arg(u));
        return chibar * bessel_j2p_fast(p, 2.0 * x * m) * osc;
    };
    // Panel widths track the local phase speed 2x cosh r (+ 2|kappa|).
    auto freq = [&](double t) { return 2.0 * x * std::cosh(t) + 2.0 * std::abs(kappa); };
    std::vector<double> bounds = oscillation_panels(0.0, R, 0.5, freq);

    KahanComplex acc;
    // Positive side ascending, then the mirrored negative side.
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i)
        acc.add(gl_panel(integrand, bounds[i], bounds[i + 1], spec.panel_nodes));
    auto integrand_neg = [&](double r) { return integrand(-r); };
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i)
        acc.add(gl_panel(integrand_neg, bounds[i], bounds[i + 1], spec.panel_nodes));

    std::complex<double> value = 4.0 * kPi * i_pow_2p(p) * acc.value();
    return {value, tail, R};
}

}  // namespace gsieve
