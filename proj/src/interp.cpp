#include "fluxon/interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fluxon/errors.hpp"

namespace fluxon {

namespace {

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

// One-sided three-point slope for the end points, limited so the end
// segment stays monotone (same scheme scipy's PCHIP uses).
double edge_slope(double h0, double h1, double d0, double d1) {
    double d = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (sgn(d) != sgn(d0)) {
        d = 0.0;
    } else if (sgn(d0) != sgn(d1) && std::abs(d) > 3.0 * std::abs(d0)) {
        d = 3.0 * d0;
    }
    return d;
}

}  // namespace

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n) {
        throw std::invalid_argument("MonotoneCubic: need >= 2 samples and matching lengths");
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (!(x_[i] > x_[i - 1])) {
            throw std::invalid_argument("MonotoneCubic: abscissae must be strictly increasing");
        }
    }

    slope_.assign(n, 0.0);
    if (n == 2) {
        const double d = (y_[1] - y_[0]) / (x_[1] - x_[0]);
        slope_[0] = slope_[1] = d;
        return;
    }

    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x_[i + 1] - x_[i];
        delta[i] = (y_[i + 1] - y_[i]) / h[i];
    }

    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            slope_[i] = 0.0;
        } else {
            // Weighted harmonic mean of the neighbouring secants.
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            slope_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    slope_[0] = edge_slope(h[0], h[1], delta[0], delta[1]);
    slope_[n - 1] = edge_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
}

double MonotoneCubic::operator()(double t) const {
    if (t < x_.front() || t > x_.back()) {
        throw OutOfRange("MonotoneCubic: query outside tabulated range");
    }
    auto it = std::upper_bound(x_.begin(), x_.end(), t);
    std::size_t i = (it == x_.begin()) ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
    if (i + 1 >= x_.size()) i = x_.size() - 2;

    const double h = x_[i + 1] - x_[i];
    const double s = (t - x_[i]) / h;
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
    const double h10 = s3 - 2.0 * s2 + s;
    const double h01 = -2.0 * s3 + 3.0 * s2;
    const double h11 = s3 - s2;
    return h00 * y_[i] + h10 * h * slope_[i] + h01 * y_[i + 1] + h11 * h * slope_[i + 1];
}

}  // namespace fluxon
