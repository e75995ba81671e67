#pragma once

#include "fluxon/mode_spec.hpp"

namespace fluxon {

// Exact Bogoliubov pair of the tanh-ramp model for the given mode and
// ramp rate [rad/s]. Gamma ratios are evaluated as exp of summed
// log-gammas, so arbitrarily small rate/frequency ratios do not overflow.
// omega_in == omega_out is the removable beta = 0 point and returns
// (alpha, beta) = (1, 0) exactly.
BogoliubovPair bogoliubov_tanh(const ModeSpec& mode, double rate);

// Created particle number <n_k> = |beta|^2 of the tanh-ramp model,
// sinh closed form evaluated in the log domain.
double particle_number_tanh(const ModeSpec& mode, double rate);

// Sudden (step) limit, (omega_out - omega_in)^2 / (4 omega_in omega_out).
double particle_number_sudden(const ModeSpec& mode);

// Per-mode energy n * hbar * omega expressed as a temperature [K].
// An order-of-magnitude diagnostic, not a thermodynamic temperature.
double effective_temperature(double n, double omega);

namespace detail {
// log(sinh x) for x > 0 without overflow.
double log_sinh(double x);
}  // namespace detail

}  // namespace fluxon
