#include "fluxon/params.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fluxon/constants.hpp"
#include "fluxon/errors.hpp"

namespace fluxon {

namespace {

using constants::flux_quantum;
using constants::pi;

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        std::ostringstream os;
        os << "CircuitParams: " << name << " must be finite and > 0, got " << v;
        throw std::invalid_argument(os.str());
    }
}

// cos(pi flux / Phi_0), the tuning factor of the Josephson energy.
double junction_cosine(double flux_wb) {
    return std::cos(pi * flux_wb / flux_quantum);
}

}  // namespace

void CircuitParams::validate() const {
    require_positive(critical_current, "critical_current");
    require_positive(junction_capacitance, "junction_capacitance");
    require_positive(ground_capacitance, "ground_capacitance");
    require_positive(cell_inductance, "cell_inductance");
    require_positive(cell_length, "cell_length");
}

CircuitParams CircuitParams::reference() {
    return CircuitParams{1e-6, 0.5e-15, 0.1e-12, 0.25e-9, 15e-6};
}

JosephsonState josephson_state(const CircuitParams& circuit, double flux_wb) {
    circuit.validate();
    const double c = std::abs(junction_cosine(flux_wb));
    if (c == 0.0) {
        throw DegenerateJunction(
            "josephson_state: cos(pi flux / Phi_0) = 0, kinetic inductance diverges");
    }
    const double e_j = 2.0 * (flux_quantum * circuit.critical_current / (2.0 * pi)) * c;
    const double phi_over_2pi = flux_quantum / (2.0 * pi);
    return JosephsonState{flux_wb, e_j, phi_over_2pi * phi_over_2pi / e_j};
}

double effective_mass_sq(const CircuitParams& circuit, double flux_wb) {
    const JosephsonState j = josephson_state(circuit, flux_wb);
    return 1.0 / (j.kinetic_inductance * circuit.total_capacitance());
}

double max_effective_mass_sq(const CircuitParams& circuit) {
    circuit.validate();
    // 1 / (L_J,min C) = 4 pi I_c / (Phi_0 C), the zero-flux value.
    return 4.0 * pi * circuit.critical_current /
           (flux_quantum * circuit.total_capacitance());
}

std::vector<double> drive_waveform(const CircuitParams& circuit,
                                   const ScaleFactorProfile& profile, double m,
                                   std::span<const double> times) {
    circuit.validate();
    if (!(m > 0.0) || !std::isfinite(m)) {
        throw std::invalid_argument("drive_waveform: mass must be finite and > 0");
    }
    const double mu_max = max_effective_mass_sq(circuit);

    std::vector<double> flux;
    flux.reserve(times.size());
    for (double t : times) {
        const double mu = m * m * profile.evaluate(t);
        const double arg = mu / mu_max;
        if (!(arg > 0.0) || arg > 1.0) {
            std::ostringstream os;
            os << "drive_waveform: requested m^2 a^2 = " << mu << " at t = " << t
               << " outside the feasible range (0, " << mu_max << "]";
            throw InfeasibleProfile(os.str(), mu_max, t, t);
        }
        flux.push_back(flux_quantum / pi * std::acos(arg));
    }
    return flux;
}

CircuitMode mode_from_circuit(const CircuitParams& circuit, double k_prime,
                              double flux_in_wb, double flux_out_wb) {
    circuit.validate();
    if (!std::isfinite(k_prime) || k_prime < 0.0) {
        throw std::invalid_argument("mode_from_circuit: k_prime must be finite and >= 0");
    }
    const double l0c = circuit.cell_inductance * circuit.total_capacitance();
    const double k_eff = circuit.cell_length * k_prime / std::sqrt(l0c);
    const double mu_in = effective_mass_sq(circuit, flux_in_wb);
    const double mu_out = effective_mass_sq(circuit, flux_out_wb);

    CircuitMode mode;
    mode.spec.k = k_eff;
    mode.spec.omega_in = std::sqrt(k_eff * k_eff + mu_in);
    mode.spec.omega_out = std::sqrt(k_eff * k_eff + mu_out);
    mode.spec.validate();
    mode.k_prime = k_prime;
    mode.ka = k_prime * circuit.cell_length;
    mode.continuum_suspect = mode.ka >= 1.0;
    return mode;
}

FluxAssignment solve_flux_assignment(const CircuitParams& circuit, double omega_in,
                                     double omega_out) {
    circuit.validate();
    if (!(omega_in > 0.0) || !(omega_out > 0.0) || omega_out < omega_in) {
        throw std::invalid_argument(
            "solve_flux_assignment: need 0 < omega_in <= omega_out");
    }
    const double mu_max = max_effective_mass_sq(circuit);
    const double l0c = circuit.cell_inductance * circuit.total_capacitance();
    const double velocity = circuit.cell_length / std::sqrt(l0c);  // a / sqrt(L_0 C)

    double k_eff_sq = 0.0;
    double flux_out = 0.0;
    if (omega_out * omega_out >= mu_max) {
        // Pin the out flux at zero (maximal mass) and let k carry the rest.
        k_eff_sq = omega_out * omega_out - mu_max;
    } else {
        flux_out = flux_quantum / pi * std::acos(omega_out * omega_out / mu_max);
    }

    const double mu_in = omega_in * omega_in - k_eff_sq;
    const double arg_in = mu_in / mu_max;
    if (!(arg_in > 0.0) || arg_in > 1.0) {
        std::ostringstream os;
        os << "solve_flux_assignment: omega_in = " << omega_in
           << " unreachable: required m^2 a^2 = " << mu_in << " outside (0, " << mu_max
           << "]";
        throw InfeasibleProfile(os.str(), mu_max, 0.0, 0.0);
    }
    const double flux_in = flux_quantum / pi * std::acos(arg_in);
    const double k_prime = std::sqrt(k_eff_sq) / velocity;

    FluxAssignment out;
    out.k_prime = k_prime;
    out.flux_in_wb = flux_in;
    out.flux_out_wb = flux_out;
    out.mode = mode_from_circuit(circuit, k_prime, flux_in, flux_out);
    return out;
}

}  // namespace fluxon
