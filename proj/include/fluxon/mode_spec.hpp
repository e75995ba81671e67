#pragma once

#include <complex>

#include "fluxon/scale_factor.hpp"

namespace fluxon {

// One field mode of the massive 1+1d scalar: an effective wave-number
// term k plus the in/out asymptotic frequencies. All three are angular
// frequencies [rad/s] (or dimensionless after scaling by a reference
// frequency); k is the quantity whose square adds to the mass term.
struct ModeSpec {
    double k = 0.0;
    double omega_in = 0.0;
    double omega_out = 0.0;

    double omega_plus() const { return 0.5 * omega_out + 0.5 * omega_in; }
    double omega_minus() const { return 0.5 * omega_out - 0.5 * omega_in; }

    // Mass-squared terms omega^2 - k^2 in the two asymptotic regions.
    double mass_term_in() const { return omega_in * omega_in - k * k; }
    double mass_term_out() const { return omega_out * omega_out - k * k; }

    // Throws std::invalid_argument when frequencies are non-positive or a
    // mass-squared term would be negative.
    void validate() const;

    static ModeSpec from_frequencies(double k, double omega_in, double omega_out);

    // Mode of mass m on the given profile: omega^2 = k^2 + m^2 * a^2.
    static ModeSpec for_profile(const ScaleFactorProfile& profile, double k, double m);
};

// Bogoliubov pair (alpha, beta) relating in and out mode bases.
struct BogoliubovPair {
    std::complex<double> alpha{1.0, 0.0};
    std::complex<double> beta{0.0, 0.0};

    // |alpha|^2 - |beta|^2 - 1; zero for an exact transformation.
    double normalization_defect() const {
        return std::norm(alpha) - std::norm(beta) - 1.0;
    }
};

}  // namespace fluxon
