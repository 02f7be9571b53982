#pragma once

#include <functional>

#include "gdual/ext_value.hpp"
#include "gdual/real_norms.hpp"

namespace gdual {

struct QcReport {
    bool quasiconcave = true;
    std::string property;   // which monotonicity failed
    double witness_lo = 0;  // adjacent probe pair straddling the violation
    double witness_hi = 0;
};

/// Quasi-concavity probe: omega must be monotone increasing and
/// omega(t)/t monotone non-increasing across a geometric grid.
QcReport is_quasiconcave(const RealNorm& w, const TransformConfig& cfg = {});
QcReport is_quasiconcave_fn(const std::function<double(double)>& f, double lo, double hi,
                            int probes);

/// Dual value at t > 0 through the supremum formula
///   p'(t) = sup_{s in (0, 1/2]} s / omega(s / t),
/// evaluated by a grid scan plus golden-section refinement around the best
/// cell. The grid scan is OpenMP-parallel; the returned value dominates
/// every probed ratio.
double real_dual(const RealNorm& w, double t, const TransformConfig& cfg = {});

/// Reference single-threaded scan of the same formula.
double real_dual_serial(const RealNorm& w, double t, const TransformConfig& cfg = {});

/// Same supremum for an arbitrary positive evaluator (no validation); used
/// to iterate the transform. grid_override > 0 replaces cfg.grid_points.
double real_dual_fn(const std::function<double(double)>& w, double t, const TransformConfig& cfg,
                    int grid_override = 0);

/// Closed form 1 / (2 omega(1/(2t))), valid exactly for quasi-concave
/// norms; calling it on anything else is a contract error (std::logic_error).
double real_dual_closed(const RealNorm& w, double t, const TransformConfig& cfg = {});

struct BidualReport {
    bool input_quasiconcave = false;
    bool dual_quasiconcave = false;  // holds for every valid input
    double max_rel_deviation = 0;    // |bidual - omega| / omega over the probe grid
    double crosscheck_rel = 0;       // nested supremum vs. the fast bidual path
    bool bidual_quasiconcave = false;
    bool bidual_below = false;       // bidual <= omega on the probe grid
    double max_rel_drop = 0;         // largest relative gap omega - bidual
    double dual_match_rel = 0;       // dual(bidual) vs dual(omega), relative
};

/// Applies the dual transform twice and compares against the input.
/// For quasi-concave input the deviation must vanish within tolerance; for
/// anything else the bidual is the quasi-concave envelope below omega with
/// the same dual.
BidualReport real_bidual_fixpoint(const RealNorm& w, const TransformConfig& cfg = {});

/// Exact dual value of an integer norm at a rational point of the circle:
///   sup_{k != 0} lambda(k theta) / p(k),
/// enumerated with a rigorous cutoff: once the lower envelope exceeds
/// 1/(2 * best), no remaining term can win. Values lambda(k theta) repeat
/// with period den(theta), so the supremum over each residue class is
/// dominated and the scan terminates for every proper p.
ExtValue z_dual_at_exact(const ZNorm& p, const Rational& theta, const TransformConfig& cfg = {});
double z_dual_at(const ZNorm& p, const Rational& theta, const TransformConfig& cfg = {});

/// Dual of a circle norm at an integer frequency:
///   sup_{theta in (0, 1/2]} lambda(k theta) / p(theta),
/// grid scan with refinement; for the arc norm this recovers |k|.
double t_dual_at(const TNorm& p, std::int64_t k, const TransformConfig& cfg = {});
double t_dual_at_serial(const TNorm& p, std::int64_t k, const TransformConfig& cfg = {});

/// Certified Lipschitz constant from a ball condition: if a homomorphism
/// into the circle maps the open p-ball of radius r into the closed arc
/// ball of radius 1/4, its dual value is at most 1/(2r). The bound uses the
/// exactness lambda(z^n) = n lambda(z) while n lambda(z) <= 1/2, which
/// sharpens the generic Gleason-metric constant away entirely.
double ball_lipschitz_bound(double r);

} // namespace gdual
