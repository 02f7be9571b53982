#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gdual/rational.hpp"

namespace gdual {

/// Numerical knobs for the one-dimensional transforms. Everything in this
/// corner of the engine is binary64 with explicit tolerances, unlike the
/// exact finite-group side.
struct TransformConfig {
    int grid_points = 4096;   // supremum scan resolution
    int refine_rounds = 3;    // golden-section passes around the best cell
    double rel_tol = 1e-6;

    double qc_lo = 1e-6;      // quasi-concavity probe span
    double qc_hi = 1e6;
    int qc_probes = 4096;     // probes for closed-form norms
    int fn_qc_probes = 257;   // probes when each evaluation is itself a transform

    double probe_lo = 1e-2;   // fixpoint deviation scan span
    double probe_hi = 1e2;
    int probe_points = 65;
};

/// Monotone subadditive proper norm on the nonnegative half-line,
/// evaluated as omega(t); the induced norm on the reals is omega(|t|).
class RealNorm {
public:
    enum class Family { power, linear, log1p, table };

    /// t^alpha with alpha in (0, 1].
    static RealNorm power(double alpha);
    /// c * t with c > 0.
    static RealNorm linear(double slope);
    /// log(1 + a t) with a > 0.
    static RealNorm log1p_scale(double a);
    /// Piecewise-linear through the given breakpoints (first must be (0,0),
    /// x strictly increasing), extended past the last breakpoint with the
    /// given slope.
    static RealNorm table(std::vector<std::pair<double, double>> points, double extension_slope);

    double operator()(double t) const;

    Family family() const { return family_; }
    double alpha() const { return param_; }
    double slope() const { return param_; }
    double scale_param() const { return param_; }
    const std::vector<std::pair<double, double>>& points() const { return points_; }
    double extension_slope() const { return param_; }
    std::string describe() const;

private:
    RealNorm(Family f, double param, std::vector<std::pair<double, double>> pts)
        : family_(f), param_(param), points_(std::move(pts)) {}

    Family family_;
    double param_ = 0;
    std::vector<std::pair<double, double>> points_;
};

/// Outcome of a probe-grid validation; on failure `property` names the
/// violated requirement and (s, t) the offending probe pair.
struct NormCheck {
    bool ok = true;
    std::string property;
    double s = 0;
    double t = 0;
};

/// Checks omega(0) = 0, positivity off 0, monotonicity, subadditivity on a
/// probe grid, and properness (divergence at large arguments; for the table
/// family that amounts to a positive extension slope).
NormCheck validate(const RealNorm& w);

/// Throws std::invalid_argument carrying the NormCheck message.
void ensure_valid(const RealNorm& w);

/// Norm on the integers with exact rational values, plus a queryable lower
/// envelope m(K) = min over |k| > K, which the dual transform uses to
/// truncate its supremum rigorously.
struct ZNorm {
    std::function<Rational(std::int64_t)> value;          // k >= 0
    std::function<Rational(std::int64_t)> lower_envelope; // min over |k| > K

    static ZNorm abs();
    static ZNorm scaled_abs(const Rational& c);
};

NormCheck validate(const ZNorm& p);

/// Norm on the circle, stored on [0, 1/2] and unfolded by p(u) = p(1 - u).
struct TNorm {
    std::function<double(double)> value_on_half;

    double eval(double theta) const; // any real theta, reduced mod 1

    static TNorm arc();                      // the canonical arc-distance norm
    static TNorm scaled_arc(double c);       // c times the arc norm
    static TNorm sampled(std::vector<double> values); // uniform grid on [0, 1/2]
};

NormCheck validate(const TNorm& p);

} // namespace gdual
