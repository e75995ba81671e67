#pragma once

#include <stdexcept>
#include <string>

namespace fluxon {

// Flux bias sits at a zero of cos(pi*flux/flux_quantum): the effective
// Josephson energy vanishes and the kinetic inductance diverges.
class DegenerateJunction : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Requested mass profile exceeds what the circuit can realize
// (arccos argument left (0, 1]). Carries the maximal feasible m^2*a^2
// and the offending time range.
class InfeasibleProfile : public std::runtime_error {
public:
    InfeasibleProfile(const std::string& msg, double max_feasible_m2a2,
                      double t_begin, double t_end)
        : std::runtime_error(msg),
          max_feasible_m2a2_(max_feasible_m2a2),
          t_begin_(t_begin),
          t_end_(t_end) {}

    double max_feasible_m2a2() const { return max_feasible_m2a2_; }
    double offending_t_begin() const { return t_begin_; }
    double offending_t_end() const { return t_end_; }

private:
    double max_feasible_m2a2_;
    double t_begin_;
    double t_end_;
};

// Gamma function evaluated at a non-positive integer.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Tabulated profile queried outside its time range.
class OutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Adaptive integrator could not meet the tolerance without the step
// size collapsing below machine resolution.
class StepSizeUnderflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Integration span does not start/end in an asymptotically static region.
class PreconditionNotAsymptotic : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Late-time Bogoliubov extraction did not settle to a stable value.
class NotConverged : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// CLI configuration failed fail-fast validation.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fluxon
