#pragma once

#include <span>
#include <vector>

#include "fluxon/mode_spec.hpp"
#include "fluxon/scale_factor.hpp"

namespace fluxon {

// SI parameters of one unit cell of the SQUID-array transmission line.
// The SQUID is treated as a single effective junction of capacitance C_J
// with flux-tunable Josephson energy; self-inductance and charging-regime
// corrections are out of scope.
struct CircuitParams {
    double critical_current;      // I_c  [A]
    double junction_capacitance;  // C_J  [F], effective single junction
    double ground_capacitance;    // C_0  [F]
    double cell_inductance;       // L_0  [H]
    double cell_length;           // a    [m]

    double total_capacitance() const { return ground_capacitance + junction_capacitance; }

    void validate() const;  // throws std::invalid_argument

    // Reference design used throughout the docs and example configs:
    // I_c = 1 uA, C_J = 0.5 fF, C_0 = 0.1 pF, L_0 = 0.25 nH, a = 15 um.
    static CircuitParams reference();
};

// Flux-dependent state of the effective junction.
struct JosephsonState {
    double external_flux;      // [Wb]
    double josephson_energy;   // E_J(flux) = 2 (Phi_0 I_c / 2 pi) |cos(pi flux / Phi_0)| [J]
    double kinetic_inductance; // L_J = (Phi_0 / 2 pi)^2 / E_J [H]
};

// Throws DegenerateJunction where cos(pi flux / Phi_0) = 0 (L_J diverges).
JosephsonState josephson_state(const CircuitParams& circuit, double flux_wb);

// Effective mass term m^2 a^2 = 1 / (L_J(flux) C) [rad^2/s^2].
// Even in flux, periodic with period 2 Phi_0, and monotonically
// decreasing in |flux| on the principal branch [0, Phi_0/2).
double effective_mass_sq(const CircuitParams& circuit, double flux_wb);

// Largest realizable mass term, 1 / (L_J,min C) at zero flux.
double max_effective_mass_sq(const CircuitParams& circuit);

// Flux-bias samples realizing m^2 a^2(t) on the principal arccos branch,
// flux in [0, Phi_0/2). Throws InfeasibleProfile when the requested mass
// term leaves (0, max_effective_mass_sq].
std::vector<double> drive_waveform(const CircuitParams& circuit,
                                   const ScaleFactorProfile& profile, double m,
                                   std::span<const double> times);

// Mode of the continuum-limit field for a physical wave number k' [rad/m]
// between two flux settings. ModeSpec.k = a k' / sqrt(L_0 C); the mass
// convention is m = 1 with a^2 carrying 1/(L_J C) directly.
struct CircuitMode {
    ModeSpec spec;
    double k_prime;          // [rad/m]
    double ka;               // k' * cell_length, continuum validity measure
    bool continuum_suspect;  // ka >= 1: cell no longer small vs wavelength
};

CircuitMode mode_from_circuit(const CircuitParams& circuit, double k_prime,
                              double flux_in_wb, double flux_out_wb);

// A consistent (k', flux_in, flux_out) assignment hitting the two target
// frequencies. Prefers flux_out = 0 with the wave number absorbing the
// remainder; falls back to k' = 0 when omega_out is below the maximal
// mass frequency. Throws InfeasibleProfile when no assignment exists.
struct FluxAssignment {
    double k_prime;      // [rad/m]
    double flux_in_wb;   // [Wb]
    double flux_out_wb;  // [Wb]
    CircuitMode mode;    // resulting mode, omega_in/omega_out at the targets
};

FluxAssignment solve_flux_assignment(const CircuitParams& circuit, double omega_in,
                                     double omega_out);

}  // namespace fluxon
