#include "gdual/real_norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gdual {

namespace {

constexpr double kMonotoneSlack = 1e-12;

std::vector<double> geometric_grid(double lo, double hi, int count) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    const double step = std::log(hi / lo) / (count - 1);
    for (int j = 0; j < count; ++j) {
        out.push_back(lo * std::exp(step * j));
    }
    return out;
}

} // namespace

RealNorm RealNorm::power(double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0) {
        throw std::invalid_argument("RealNorm::power: alpha must lie in (0, 1]");
    }
    return RealNorm(Family::power, alpha, {});
}

RealNorm RealNorm::linear(double slope) {
    if (!(slope > 0.0)) throw std::invalid_argument("RealNorm::linear: slope must be positive");
    return RealNorm(Family::linear, slope, {});
}

RealNorm RealNorm::log1p_scale(double a) {
    if (!(a > 0.0)) throw std::invalid_argument("RealNorm::log1p_scale: scale must be positive");
    return RealNorm(Family::log1p, a, {});
}

RealNorm RealNorm::table(std::vector<std::pair<double, double>> points, double extension_slope) {
    if (points.size() < 2) throw std::invalid_argument("RealNorm::table: need at least two breakpoints");
    if (points.front().first != 0.0 || points.front().second != 0.0) {
        throw std::invalid_argument("RealNorm::table: first breakpoint must be (0, 0)");
    }
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (!(points[i].first > points[i - 1].first)) {
            throw std::invalid_argument("RealNorm::table: breakpoints must be strictly increasing in x");
        }
    }
    if (extension_slope < 0.0) {
        throw std::invalid_argument("RealNorm::table: extension slope must be nonnegative");
    }
    return RealNorm(Family::table, extension_slope, std::move(points));
}

double RealNorm::operator()(double t) const {
    switch (family_) {
        case Family::power:
            return std::pow(t, param_);
        case Family::linear:
            return param_ * t;
        case Family::log1p:
            return std::log1p(param_ * t);
        case Family::table: {
            const auto& p = points_;
            if (t >= p.back().first) {
                return p.back().second + param_ * (t - p.back().first);
            }
            auto it = std::upper_bound(p.begin(), p.end(), t,
                                       [](double v, const auto& pt) { return v < pt.first; });
            const auto& hi = *it;
            const auto& lo = *(it - 1);
            const double w = (t - lo.first) / (hi.first - lo.first);
            return lo.second + w * (hi.second - lo.second);
        }
    }
    return 0;
}

std::string RealNorm::describe() const {
    switch (family_) {
        case Family::power:
            return "power(" + std::to_string(param_) + ")";
        case Family::linear:
            return "linear(" + std::to_string(param_) + ")";
        case Family::log1p:
            return "log1p(" + std::to_string(param_) + ")";
        case Family::table:
            return "table(" + std::to_string(points_.size()) + " points, ext " +
                   std::to_string(param_) + ")";
    }
    return "";
}

NormCheck validate(const RealNorm& w) {
    if (w(0.0) != 0.0) return {false, "omega(0)=0", 0, 0};

    const auto probes = geometric_grid(1e-6, 1e6, 193);
    for (std::size_t j = 0; j < probes.size(); ++j) {
        const double v = w(probes[j]);
        if (!(v > 0.0) || !std::isfinite(v)) {
            return {false, "positivity off 0", probes[j], 0};
        }
        if (j > 0 && w(probes[j]) < w(probes[j - 1]) * (1.0 - kMonotoneSlack)) {
            return {false, "monotonicity", probes[j - 1], probes[j]};
        }
    }

    const auto sub = geometric_grid(1e-4, 1e4, 49);
    for (double s : sub) {
        for (double t : sub) {
            if (t < s) continue;
            const double lhs = w(s + t);
            const double rhs = w(s) + w(t);
            if (lhs > rhs * (1.0 + 1e-12) + 1e-300) {
                return {false, "subadditivity", s, t};
            }
        }
    }

    if (!(w(1e15) > w(1e3) * (1.0 + 1e-9))) {
        return {false, "properness (growth at infinity)", 1e3, 1e15};
    }
    return {};
}

void ensure_valid(const RealNorm& w) {
    const NormCheck c = validate(w);
    if (!c.ok) {
        throw std::invalid_argument("real norm invalid: " + c.property + " at probes (" +
                                    std::to_string(c.s) + ", " + std::to_string(c.t) + ")");
    }
}

ZNorm ZNorm::abs() {
    return {[](std::int64_t k) { return Rational(k); },
            [](std::int64_t K) { return Rational(K + 1); }};
}

ZNorm ZNorm::scaled_abs(const Rational& c) {
    if (c.is_zero()) throw std::invalid_argument("ZNorm::scaled_abs: factor must be positive");
    return {[c](std::int64_t k) { return c * Rational(k); },
            [c](std::int64_t K) { return c * Rational(K + 1); }};
}

NormCheck validate(const ZNorm& p) {
    if (!p.value(0).is_zero()) return {false, "m(0)=0", 0, 0};
    for (std::int64_t j = 1; j <= 24; ++j) {
        for (std::int64_t k = j; k <= 24; ++k) {
            if (p.value(j + k) > p.value(j) + p.value(k)) {
                return {false, "subadditivity", double(j), double(k)};
            }
        }
    }
    bool diverges = false;
    for (int e = 1; e <= 40; ++e) {
        const Rational env = p.lower_envelope(std::int64_t(1) << e);
        if (env > Rational(1000000)) {
            diverges = true;
            break;
        }
    }
    if (!diverges) return {false, "properness (lower envelope stagnates)", 0, 0};
    return {};
}

double TNorm::eval(double theta) const {
    double u = theta - std::floor(theta);
    if (u > 0.5) u = 1.0 - u;
    return value_on_half(u);
}

TNorm TNorm::arc() {
    return {[](double u) { return u; }};
}

TNorm TNorm::scaled_arc(double c) {
    if (!(c > 0.0)) throw std::invalid_argument("TNorm::scaled_arc: factor must be positive");
    return {[c](double u) { return c * u; }};
}

TNorm TNorm::sampled(std::vector<double> values) {
    if (values.size() < 2) throw std::invalid_argument("TNorm::sampled: need at least two samples");
    return {[values = std::move(values)](double u) {
        const double pos = u * 2.0 * (values.size() - 1);
        const std::size_t i = std::min(static_cast<std::size_t>(pos), values.size() - 2);
        const double w = pos - static_cast<double>(i);
        return values[i] + w * (values[i + 1] - values[i]);
    }};
}

NormCheck validate(const TNorm& p) {
    if (p.eval(0.0) != 0.0) return {false, "p(0)=0", 0, 0};
    constexpr int kProbes = 128;
    for (int j = 1; j <= kProbes; ++j) {
        const double u = 0.5 * j / kProbes;
        if (!(p.eval(u) > 0.0)) return {false, "positivity off 0", u, 0};
    }
    for (int j = 1; j <= 32; ++j) {
        for (int k = j; k <= 32; ++k) {
            const double a = 0.5 * j / 32, b = 0.5 * k / 32;
            if (p.eval(a + b) > (p.eval(a) + p.eval(b)) * (1.0 + 1e-12)) {
                return {false, "subadditivity", a, b};
            }
        }
    }
    return {};
}

} // namespace gdual
