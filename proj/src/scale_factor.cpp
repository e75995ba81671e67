#include "fluxon/scale_factor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fluxon/errors.hpp"

namespace fluxon {

namespace {

void check_levels(double a2_in, double a2_out) {
    if (!(a2_in > 0.0) || !std::isfinite(a2_in)) {
        throw std::invalid_argument("ScaleFactorProfile: a2_in must be finite and > 0");
    }
    if (!(a2_out > 0.0) || !std::isfinite(a2_out)) {
        throw std::invalid_argument("ScaleFactorProfile: a2_out must be finite and > 0");
    }
}

// Relative spread of a sample block; blocks at both ends must be flat.
double block_spread(const std::vector<double>& v, std::size_t begin, std::size_t end) {
    double lo = v[begin], hi = v[begin], sum = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
        lo = std::min(lo, v[i]);
        hi = std::max(hi, v[i]);
        sum += v[i];
    }
    const double mean = sum / static_cast<double>(end - begin);
    return (hi - lo) / mean;
}

double block_mean(const std::vector<double>& v, std::size_t begin, std::size_t end) {
    double sum = 0.0;
    for (std::size_t i = begin; i < end; ++i) sum += v[i];
    return sum / static_cast<double>(end - begin);
}

}  // namespace

ScaleFactorProfile ScaleFactorProfile::tanh_ramp(double a2_in, double a2_out, double rate) {
    check_levels(a2_in, a2_out);
    if (!(rate > 0.0) || !std::isfinite(rate)) {
        throw std::invalid_argument("ScaleFactorProfile: tanh rate must be finite and > 0");
    }
    ScaleFactorProfile p;
    p.kind_ = Kind::tanh_ramp;
    p.asymptotics_ = {a2_in, a2_out};
    p.rate_ = rate;
    return p;
}

ScaleFactorProfile ScaleFactorProfile::step(double a2_in, double a2_out) {
    check_levels(a2_in, a2_out);
    ScaleFactorProfile p;
    p.kind_ = Kind::step;
    p.asymptotics_ = {a2_in, a2_out};
    return p;
}

ScaleFactorProfile ScaleFactorProfile::tabulated(std::vector<double> times,
                                                 std::vector<double> values) {
    const std::size_t n = times.size();
    if (n < 4 || values.size() != n) {
        throw std::invalid_argument("ScaleFactorProfile: tabulated needs >= 4 matched samples");
    }
    for (double v : values) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument("ScaleFactorProfile: tabulated values must be > 0");
        }
    }

    // First and last 10% of the samples must be asymptotically static.
    const std::size_t edge = std::max<std::size_t>(2, n / 10);
    constexpr double kFlatTol = 1e-6;
    if (block_spread(values, 0, edge) >= kFlatTol) {
        throw std::invalid_argument(
            "ScaleFactorProfile: tabulated start is not asymptotically static");
    }
    if (block_spread(values, n - edge, n) >= kFlatTol) {
        throw std::invalid_argument(
            "ScaleFactorProfile: tabulated end is not asymptotically static");
    }

    ScaleFactorProfile p;
    p.kind_ = Kind::tabulated;
    p.asymptotics_ = {block_mean(values, 0, edge), block_mean(values, n - edge, n)};
    p.table_t_min_ = times.front();
    p.table_t_max_ = times.back();
    p.table_ = std::make_shared<MonotoneCubic>(std::move(times), std::move(values));
    return p;
}

double ScaleFactorProfile::evaluate(double t) const {
    switch (kind_) {
        case Kind::tanh_ramp: {
            const double mid = 0.5 * (asymptotics_.a2_out + asymptotics_.a2_in);
            const double half_swing = 0.5 * (asymptotics_.a2_out - asymptotics_.a2_in);
            return mid + half_swing * std::tanh(rate_ * t);
        }
        case Kind::step:
            return t < 0.0 ? asymptotics_.a2_in : asymptotics_.a2_out;
        case Kind::tabulated:
            return (*table_)(t);
    }
    throw std::logic_error("ScaleFactorProfile: unknown kind");
}

double ScaleFactorProfile::rate() const {
    if (kind_ != Kind::tanh_ramp) {
        throw std::logic_error("ScaleFactorProfile::rate: only defined for tanh_ramp");
    }
    return rate_;
}

double ScaleFactorProfile::t_min() const {
    return kind_ == Kind::tabulated ? table_t_min_ : -std::numeric_limits<double>::infinity();
}

double ScaleFactorProfile::t_max() const {
    return kind_ == Kind::tabulated ? table_t_max_ : std::numeric_limits<double>::infinity();
}

}  // namespace fluxon
