#pragma once

#include <vector>

namespace fluxon {

// Monotone cubic Hermite interpolant (Fritsch-Carlson slope limiting).
// Does not overshoot the data, so strictly positive samples interpolate
// to a strictly positive curve.
class MonotoneCubic {
public:
    MonotoneCubic(std::vector<double> x, std::vector<double> y);

    // Throws OutOfRange outside [x.front(), x.back()].
    double operator()(double t) const;

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

private:
    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> slope_;
};

}  // namespace fluxon
