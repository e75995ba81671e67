#pragma once

#include <complex>

namespace fluxon {

// Principal-branch log Gamma(z), continued analytically from the positive
// real axis (the imaginary part is not reduced mod 2 pi). Lanczos
// approximation for Re z >= 1/2, downward recurrence otherwise;
// 13+ significant digits for |Im z| <= 1e4.
//
// Throws PoleError at the poles z = 0, -1, -2, ...
std::complex<double> log_gamma_complex(std::complex<double> z);

}  // namespace fluxon
