#pragma once

#include <complex>

namespace gsieve {

/// log Gamma(z) for complex z, Lanczos approximation (g = 7, 9 terms) with
/// reflection for Re(z) < 1/2.
///
/// Accuracy: relative error below ~1e-13 for |Re z| <= 200, |Im z| <= 1e3,
/// staying at least 1e-6 away from the poles at nonpositive integers.  The
/// imaginary part may differ from the principal value by a multiple of
/// 2*pi*i after reflection, which drops out under exponentiation -- every
/// use in this toolkit exponentiates sums and differences of these values.
std::complex<double> lgamma_complex(std::complex<double> z);

/// exp(lgamma_complex(z)).
std::complex<double> gamma_complex(std::complex<double> z);

/// log(sin(pi z)) computed without overflow for large |Im z| (same 2*pi*i
/// caveat as above).
std::complex<double> log_sin_pi(std::complex<double> z);

}  // namespace gsieve
