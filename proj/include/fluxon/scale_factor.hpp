#pragma once

#include <memory>
#include <vector>

#include "fluxon/interp.hpp"

namespace fluxon {

// Asymptotic values of the conformal scale factor squared.
struct Asymptotics {
    double a2_in;
    double a2_out;
};

// Time profile of the conformal scale factor squared a^2(t).
//
// Three variants:
//   tanh_ramp  — smooth ramp between two static asymptotic levels,
//                a^2(t) = mid + half_swing * tanh(rate * t)
//   step       — sudden switch at t = 0, right-continuous (a^2(0) = out level)
//   tabulated  — monotone-cubic interpolant through user samples whose first
//                and last 10% must be asymptotically flat
//
// Both asymptotic levels must be strictly positive; contraction
// (a2_out < a2_in) is allowed. Values are immutable after construction.
class ScaleFactorProfile {
public:
    enum class Kind { tanh_ramp, step, tabulated };

    static ScaleFactorProfile tanh_ramp(double a2_in, double a2_out, double rate);
    static ScaleFactorProfile step(double a2_in, double a2_out);
    static ScaleFactorProfile tabulated(std::vector<double> times, std::vector<double> values);

    // a^2 at time t. Throws OutOfRange when a tabulated profile is
    // queried outside its sample range.
    double evaluate(double t) const;
    double operator()(double t) const { return evaluate(t); }

    Asymptotics asymptotics() const { return asymptotics_; }
    Kind kind() const { return kind_; }

    // Ramp rate rho [rad/s]; only meaningful for tanh_ramp.
    double rate() const;

    // Valid query range; infinite except for tabulated profiles.
    double t_min() const;
    double t_max() const;

private:
    ScaleFactorProfile() = default;

    Kind kind_ = Kind::step;
    Asymptotics asymptotics_{1.0, 1.0};
    double rate_ = 0.0;
    std::shared_ptr<const MonotoneCubic> table_;  // tabulated only
    double table_t_min_ = 0.0;
    double table_t_max_ = 0.0;
};

}  // namespace fluxon
