#include "fluxon/analytic.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "fluxon/constants.hpp"
#include "fluxon/gamma.hpp"

namespace fluxon {

namespace {

using constants::pi;

void check_rate(double rate) {
    if (!(rate > 0.0) || !std::isfinite(rate)) {
        throw std::invalid_argument("rate must be finite and > 0");
    }
}

}  // namespace

double detail::log_sinh(double x) {
    // sinh x = e^x (1 - e^{-2x}) / 2; stable for the whole range x > 0.
    return x + std::log1p(-std::exp(-2.0 * x)) - 0.6931471805599453094172321214581766;
}

BogoliubovPair bogoliubov_tanh(const ModeSpec& mode, double rate) {
    mode.validate();
    check_rate(rate);
    if (mode.omega_in == mode.omega_out) {
        return BogoliubovPair{{1.0, 0.0}, {0.0, 0.0}};  // static spectrum
    }

    const std::complex<double> i(0.0, 1.0);
    const double x_in = mode.omega_in / rate;
    const double x_out = mode.omega_out / rate;
    const double x_plus = mode.omega_plus() / rate;
    const double x_minus = mode.omega_minus() / rate;
    const double half_log_ratio = 0.5 * (std::log(mode.omega_out) - std::log(mode.omega_in));

    const std::complex<double> log_alpha =
        half_log_ratio + log_gamma_complex(1.0 - i * x_in) + log_gamma_complex(-i * x_out) -
        log_gamma_complex(-i * x_plus) - log_gamma_complex(1.0 - i * x_plus);
    const std::complex<double> log_beta =
        half_log_ratio + log_gamma_complex(1.0 - i * x_in) + log_gamma_complex(i * x_out) -
        log_gamma_complex(i * x_minus) - log_gamma_complex(1.0 + i * x_minus);

    return BogoliubovPair{std::exp(log_alpha), std::exp(log_beta)};
}

double particle_number_tanh(const ModeSpec& mode, double rate) {
    mode.validate();
    check_rate(rate);
    const double x_minus = pi * mode.omega_minus() / rate;
    if (x_minus == 0.0) return 0.0;
    const double x_in = pi * mode.omega_in / rate;
    const double x_out = pi * mode.omega_out / rate;
    const double log_n =
        2.0 * detail::log_sinh(x_minus) - detail::log_sinh(x_in) - detail::log_sinh(x_out);
    return std::exp(log_n);
}

double particle_number_sudden(const ModeSpec& mode) {
    mode.validate();
    const double diff = mode.omega_out - mode.omega_in;
    return diff * diff / (4.0 * mode.omega_in * mode.omega_out);
}

double effective_temperature(double n, double omega) {
    if (!(n >= 0.0)) throw std::invalid_argument("effective_temperature: n must be >= 0");
    if (!(omega > 0.0)) throw std::invalid_argument("effective_temperature: omega must be > 0");
    return n * constants::hbar * omega / constants::boltzmann;
}

}  // namespace fluxon
