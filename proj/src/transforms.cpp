#include "gdual/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace gdual {

namespace {

constexpr double kSlack = 1e-12;

double dist_to_integers(double y) {
    return std::fabs(y - std::nearbyint(y));
}

/// Golden-section maximisation on [lo, hi]; returns the best value seen,
/// which can only improve on the inputs.
double golden_max(const std::function<double(double)>& f, double lo, double hi, int iterations,
                  double seed_best) {
    constexpr double kInvPhi = 0.6180339887498949;
    double best = seed_best;
    double a = lo, b = hi;
    double c = b - (b - a) * kInvPhi;
    double d = a + (b - a) * kInvPhi;
    double fc = f(c), fd = f(d);
    best = std::max({best, fc, fd});
    for (int i = 0; i < iterations; ++i) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) * kInvPhi;
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) * kInvPhi;
            fd = f(d);
        }
        best = std::max({best, fc, fd});
    }
    return best;
}

struct ScanResult {
    double best = -1;
    int best_index = 0;
};

/// Deterministic max over the half-open grid s_j = (j+1)/(2N); ties break
/// to the smaller index regardless of the thread partition.
ScanResult grid_scan(const std::function<double(double)>& f, int n, bool parallel) {
    ScanResult out;
    if (parallel) {
#pragma omp parallel
        {
            ScanResult local;
#pragma omp for schedule(static) nowait
            for (int j = 0; j < n; ++j) {
                const double s = 0.5 * (j + 1) / n;
                const double v = f(s);
                if (v > local.best || (v == local.best && j < local.best_index)) {
                    local.best = v;
                    local.best_index = j;
                }
            }
#pragma omp critical
            {
                if (local.best > out.best ||
                    (local.best == out.best && local.best_index < out.best_index)) {
                    out = local;
                }
            }
        }
    } else {
        for (int j = 0; j < n; ++j) {
            const double s = 0.5 * (j + 1) / n;
            const double v = f(s);
            if (v > out.best) {
                out.best = v;
                out.best_index = j;
            }
        }
    }
    return out;
}

double sup_on_half_interval(const std::function<double(double)>& f, const TransformConfig& cfg,
                            int grid, bool parallel) {
    const int n = grid > 0 ? grid : cfg.grid_points;
    const ScanResult scan = grid_scan(f, n, parallel);
    const double lo = scan.best_index == 0 ? 0.25 / n : 0.5 * scan.best_index / n;
    const double hi = 0.5 * std::min(scan.best_index + 2, n) / n;
    return golden_max(f, lo, hi, cfg.refine_rounds * 20, scan.best);
}

QcReport qc_probe(const std::function<double(double)>& f, double lo, double hi, int probes) {
    QcReport rep;
    double prev_t = lo;
    double prev_v = f(lo);
    double prev_ratio = prev_v / lo;
    const double step = std::log(hi / lo) / (probes - 1);
    for (int j = 1; j < probes; ++j) {
        const double t = lo * std::exp(step * j);
        const double v = f(t);
        const double ratio = v / t;
        if (v < prev_v * (1.0 - kSlack)) {
            return {false, "monotonicity", prev_t, t};
        }
        if (ratio > prev_ratio * (1.0 + kSlack)) {
            return {false, "ratio-monotonicity", prev_t, t};
        }
        prev_t = t;
        prev_v = v;
        prev_ratio = ratio;
    }
    return rep;
}

std::vector<double> geometric(double lo, double hi, int count) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    const double step = std::log(hi / lo) / (count - 1);
    for (int j = 0; j < count; ++j) out.push_back(lo * std::exp(step * j));
    return out;
}

double rel_gap(double a, double b) {
    const double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
    return std::fabs(a - b) / scale;
}

} // namespace

QcReport is_quasiconcave(const RealNorm& w, const TransformConfig& cfg) {
    ensure_valid(w);
    return qc_probe([&w](double t) { return w(t); }, cfg.qc_lo, cfg.qc_hi, cfg.qc_probes);
}

QcReport is_quasiconcave_fn(const std::function<double(double)>& f, double lo, double hi,
                            int probes) {
    return qc_probe(f, lo, hi, probes);
}

double real_dual(const RealNorm& w, double t, const TransformConfig& cfg) {
    ensure_valid(w);
    if (!(t > 0.0)) throw std::invalid_argument("real_dual: t must be positive");
    return sup_on_half_interval([&w, t](double s) { return s / w(s / t); }, cfg, 0, true);
}

double real_dual_serial(const RealNorm& w, double t, const TransformConfig& cfg) {
    ensure_valid(w);
    if (!(t > 0.0)) throw std::invalid_argument("real_dual: t must be positive");
    return sup_on_half_interval([&w, t](double s) { return s / w(s / t); }, cfg, 0, false);
}

double real_dual_fn(const std::function<double(double)>& w, double t, const TransformConfig& cfg,
                    int grid_override) {
    return sup_on_half_interval([&w, t](double s) { return s / w(s / t); }, cfg, grid_override,
                                false);
}

double real_dual_closed(const RealNorm& w, double t, const TransformConfig& cfg) {
    ensure_valid(w);
    if (!(t > 0.0)) throw std::invalid_argument("real_dual_closed: t must be positive");
    const QcReport qc = is_quasiconcave(w, cfg);
    if (!qc.quasiconcave) {
        throw std::logic_error("real_dual_closed: norm is not quasi-concave (" + qc.property +
                               " fails near t=" + std::to_string(qc.witness_lo) + ")");
    }
    return 1.0 / (2.0 * w(1.0 / (2.0 * t)));
}

BidualReport real_bidual_fixpoint(const RealNorm& w, const TransformConfig& cfg) {
    ensure_valid(w);
    BidualReport rep;
    rep.input_quasiconcave = is_quasiconcave(w, cfg).quasiconcave;

    const auto dual_fn = [&w, &cfg](double x) {
        return real_dual_fn([&w](double u) { return w(u); }, x, cfg);
    };
    rep.dual_quasiconcave =
        is_quasiconcave_fn(dual_fn, cfg.qc_lo, cfg.qc_hi, cfg.fn_qc_probes).quasiconcave;

    // Second application. A quasi-concave integrand makes the supremum in
    //   sup_s s / p'(s/t)
    // attain at s = 1/2, which is the closed form applied to the dual; the
    // nested scan below cross-checks that shortcut on sparse probes.
    const auto bidual_fn = [&, qc = rep.dual_quasiconcave](double x) {
        if (qc) return 1.0 / (2.0 * dual_fn(1.0 / (2.0 * x)));
        return real_dual_fn(dual_fn, x, cfg, 1024);
    };

    for (double t : geometric(0.2, 5.0, 5)) {
        const double nested = real_dual_fn(dual_fn, t, cfg, 512);
        rep.crosscheck_rel = std::max(rep.crosscheck_rel, rel_gap(nested, bidual_fn(t)));
    }

    rep.bidual_below = true;
    for (double t : geometric(cfg.probe_lo, cfg.probe_hi, cfg.probe_points)) {
        const double original = w(t);
        const double twice = bidual_fn(t);
        rep.max_rel_deviation = std::max(rep.max_rel_deviation, rel_gap(original, twice));
        if (twice > original * (1.0 + cfg.rel_tol)) rep.bidual_below = false;
        if (original > 0) {
            rep.max_rel_drop = std::max(rep.max_rel_drop, (original - twice) / original);
        }
    }

    rep.bidual_quasiconcave =
        is_quasiconcave_fn(bidual_fn, cfg.qc_lo, cfg.qc_hi, cfg.fn_qc_probes).quasiconcave;

    // Third application: the bidual is quasi-concave, so its dual is exactly
    // the closed form; it must reproduce the first dual.
    for (double t : geometric(0.1, 10.0, 9)) {
        const double from_bidual = 1.0 / (2.0 * bidual_fn(1.0 / (2.0 * t)));
        rep.dual_match_rel = std::max(rep.dual_match_rel, rel_gap(from_bidual, dual_fn(t)));
    }
    return rep;
}

ExtValue z_dual_at_exact(const ZNorm& p, const Rational& theta, const TransformConfig&) {
    if (theta > Rational(1, 2)) {
        throw std::invalid_argument("z_dual_at: theta must lie in [0, 1/2]");
    }
    if (theta.is_zero()) return ExtValue(Rational(0));
    const std::int64_t a = theta.num();
    const std::int64_t b = theta.den();

    constexpr std::int64_t kMaxScan = 10'000'000;
    ExtValue best{Rational(0)};
    for (std::int64_t k = 1; k <= kMaxScan; ++k) {
        const std::int64_t r = static_cast<std::int64_t>(static_cast<__int128>(k) * a % b);
        if (r != 0) {
            const Rational lam(std::min(r, b - r), b);
            const ExtValue cand = ExtValue::ratio(lam, ExtValue(p.value(k)));
            if (best < cand) best = cand;
            if (cand.is_infinite()) return cand;
        }
        const Rational env = p.lower_envelope(k);
        if (!env.is_zero() && best.is_finite() && !best.is_zero()) {
            // every remaining term is at most (1/2) / env
            if (Rational(1, 2) < best.value() * env) return best;
        }
    }
    throw std::invalid_argument("z_dual_at: norm is not proper (lower envelope stagnates)");
}

double z_dual_at(const ZNorm& p, const Rational& theta, const TransformConfig& cfg) {
    const ExtValue v = z_dual_at_exact(p, theta, cfg);
    return v.is_finite() ? v.value().to_double() : HUGE_VAL;
}

namespace {

double t_dual_impl(const TNorm& p, std::int64_t k, const TransformConfig& cfg, bool parallel) {
    const NormCheck c = validate(p);
    if (!c.ok) {
        throw std::invalid_argument("t_dual_at: circle norm invalid: " + c.property);
    }
    if (k == 0) return 0.0;
    const double kk = static_cast<double>(k < 0 ? -k : k);
    const auto f = [&p, kk](double theta) {
        return dist_to_integers(kk * theta) / p.eval(theta);
    };
    return sup_on_half_interval(f, cfg, 0, parallel);
}

} // namespace

double t_dual_at(const TNorm& p, std::int64_t k, const TransformConfig& cfg) {
    return t_dual_impl(p, k, cfg, true);
}

double t_dual_at_serial(const TNorm& p, std::int64_t k, const TransformConfig& cfg) {
    return t_dual_impl(p, k, cfg, false);
}

double ball_lipschitz_bound(double r) {
    if (!(r > 0.0)) throw std::invalid_argument("ball_lipschitz_bound: radius must be positive");
    return 1.0 / (2.0 * r);
}

} // namespace gdual
