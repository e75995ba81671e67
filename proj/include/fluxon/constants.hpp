#pragma once

// Fixed physical constants (SI). CODATA exact / recommended values.
// These are compile-time constants on purpose: nothing in the library
// treats them as configurable.

namespace fluxon::constants {

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Magnetic flux quantum h/2e [Wb]
inline constexpr double flux_quantum = 2.067833848e-15;

// Reduced Planck constant [J s]
inline constexpr double hbar = 1.054571817e-34;

// Boltzmann constant [J/K]
inline constexpr double boltzmann = 1.380649e-23;

}  // namespace fluxon::constants
