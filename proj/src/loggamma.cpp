#include "gsieve/loggamma.hpp"

#include <cmath>
#include <numbers>

namespace gsieve {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // log(sqrt(2 pi))

// Lanczos g = 7, 9-term coefficient set.
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

std::complex<double> lgamma_right(std::complex<double> z) {
    // Valid for Re(z) >= 0.5.
    std::complex<double> x = kLanczos[0];
    for (int k = 1; k < 9; ++k) x += kLanczos[k] / (z - 1.0 + static_cast<double>(k));
    std::complex<double> t = z + 6.5;
    return kLogSqrt2Pi + (z - 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

std::complex<double> log_sin_pi(std::complex<double> z) {
    std::complex<double> w = kPi * z;
    double y = w.imag();
    if (std::abs(y) <= 20.0) return std::log(std::sin(w));
    if (y > 0.0) {
        // sin w = (i/2) e^{-iw} (1 - e^{2iw}) up to sign conventions:
        // log sin w = -iw + log(1 - e^{2iw}) + log(i/2) ... fold constants.
        std::complex<double> iw(-w.imag(), w.real());
        return -iw + std::log(1.0 - std::exp(2.0 * iw)) +
               std::complex<double>(-std::numbers::ln2, kPi / 2.0);
    }
    return std::conj(log_sin_pi(std::conj(z)));
}

std::complex<double> lgamma_complex(std::complex<double> z) {
    if (z.real() >= 0.5) return lgamma_right(z);
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    return std::log(kPi) - log_sin_pi(z) - lgamma_right(1.0 - z);
}

std::complex<double> gamma_complex(std::complex<double> z) {
    return std::exp(lgamma_complex(z));
}

}  // namespace gsieve
