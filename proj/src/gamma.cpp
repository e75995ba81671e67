#include "fluxon/gamma.hpp"

#include <array>
#include <cmath>

#include "fluxon/constants.hpp"
#include "fluxon/errors.hpp"

namespace fluxon {

namespace {

// Lanczos g = 7, 9-term coefficients (Godfrey's set).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7,
};

// Valid for Re z >= 1/2; continuous there, so it realizes the principal
// branch without further bookkeeping.
std::complex<double> lanczos_log_gamma(std::complex<double> z) {
    std::complex<double> series(kLanczos[0], 0.0);
    for (std::size_t i = 1; i < kLanczos.size(); ++i) {
        series += kLanczos[i] / (z + static_cast<double>(i - 1));
    }
    const std::complex<double> t = z + (kLanczosG - 0.5);
    constexpr double half_log_two_pi = 0.91893853320467274178032973640562;
    return half_log_two_pi + (z - 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

std::complex<double> log_gamma_complex(std::complex<double> z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
        throw PoleError("log_gamma_complex: pole at non-positive integer");
    }
    if (z.real() >= 0.5) {
        return lanczos_log_gamma(z);
    }
    // Shift into the half-plane Re >= 1/2 with
    // log Gamma(z) = log Gamma(z + n) - sum_j log(z + j), principal logs.
    std::complex<double> shift(0.0, 0.0);
    while (z.real() < 0.5) {
        shift += std::log(z);
        z += 1.0;
    }
    return lanczos_log_gamma(z) - shift;
}

}  // namespace fluxon
