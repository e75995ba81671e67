#include "fluxon/mode_spec.hpp"

#include <cmath>
#include <stdexcept>

namespace fluxon {

void ModeSpec::validate() const {
    if (!(omega_in > 0.0) || !std::isfinite(omega_in)) {
        throw std::invalid_argument("ModeSpec: omega_in must be finite and > 0");
    }
    if (!(omega_out > 0.0) || !std::isfinite(omega_out)) {
        throw std::invalid_argument("ModeSpec: omega_out must be finite and > 0");
    }
    if (!std::isfinite(k)) {
        throw std::invalid_argument("ModeSpec: k must be finite");
    }
    if (mass_term_in() < 0.0 || mass_term_out() < 0.0) {
        throw std::invalid_argument("ModeSpec: omega^2 - k^2 must be non-negative");
    }
}

ModeSpec ModeSpec::from_frequencies(double k, double omega_in, double omega_out) {
    ModeSpec m{k, omega_in, omega_out};
    m.validate();
    return m;
}

ModeSpec ModeSpec::for_profile(const ScaleFactorProfile& profile, double k, double m) {
    if (!(m >= 0.0) || !std::isfinite(m)) {
        throw std::invalid_argument("ModeSpec: mass must be finite and >= 0");
    }
    const Asymptotics a = profile.asymptotics();
    ModeSpec spec;
    spec.k = k;
    spec.omega_in = std::sqrt(k * k + m * m * a.a2_in);
    spec.omega_out = std::sqrt(k * k + m * m * a.a2_out);
    spec.validate();
    return spec;
}

}  // namespace fluxon
