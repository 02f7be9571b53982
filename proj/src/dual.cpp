#include "gdual/dual.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

namespace gdual {

namespace {

ExtValue dual_at(const FiniteAbelianGroup& g, const std::vector<ExtValue>& v, std::int64_t a) {
    ExtValue best{Rational(0)}; // sup(empty) = 0
    for (std::int64_t x = 1; x < g.order(); ++x) {
        const Rational lam = g.pair(a, x);
        if (lam.is_zero()) continue;
        const ExtValue r = ExtValue::ratio(lam, v[static_cast<std::size_t>(x)]);
        if (best < r) best = r;
    }
    return best;
}

std::vector<ExtValue> dual_values(const FiniteAbelianGroup& g, const std::vector<ExtValue>& v,
                                  bool parallel) {
    const std::int64_t n = g.order();
    std::vector<ExtValue> out(static_cast<std::size_t>(n));
    if (parallel) {
        std::exception_ptr err;
#pragma omp parallel for schedule(static)
        for (std::int64_t a = 0; a < n; ++a) {
            try {
                out[static_cast<std::size_t>(a)] = dual_at(g, v, a);
            } catch (...) {
#pragma omp critical
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
    } else {
        for (std::int64_t a = 0; a < n; ++a) {
            out[static_cast<std::size_t>(a)] = dual_at(g, v, a);
        }
    }
    return out;
}

} // namespace

QuasiNorm dual(const QuasiNorm& q) {
    ensure_valid(q);
    return {q.group, dual_values(*q.group, q.values, true)};
}

QuasiNorm dual_serial(const QuasiNorm& q) {
    ensure_valid(q);
    return {q.group, dual_values(*q.group, q.values, false)};
}

QuasiNorm bidual(const QuasiNorm& q) {
    ensure_valid(q);
    const FiniteAbelianGroup& g = *q.group;
    return {q.group, dual_values(g, dual_values(g, q.values, true), true)};
}

QuasiNorm regularise(const QuasiNorm& q) {
    return bidual(q);
}

QuasiNorm regularise_formula(const QuasiNorm& q) {
    ensure_valid(q);
    const FiniteAbelianGroup& g = *q.group;
    const std::int64_t n = g.order();

    // inner infimum per character: inf over g not in ker(chi) of q(g) / lambda(chi(g))
    std::vector<ExtValue> inner(static_cast<std::size_t>(n), ExtValue::infinity());
    std::exception_ptr err;
#pragma omp parallel for schedule(static)
    for (std::int64_t a = 1; a < n; ++a) {
        try {
            ExtValue inf = ExtValue::infinity();
            for (std::int64_t x = 1; x < n; ++x) {
                const Rational lam = g.pair(a, x);
                if (lam.is_zero()) continue;
                const ExtValue c = q.at(x).div_by(lam);
                if (c < inf) inf = c;
            }
            inner[static_cast<std::size_t>(a)] = inf;
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);

    std::vector<ExtValue> out(static_cast<std::size_t>(n), ExtValue(Rational(0)));
#pragma omp parallel for schedule(static)
    for (std::int64_t x = 1; x < n; ++x) {
        try {
            ExtValue best{Rational(0)};
            for (std::int64_t a = 1; a < n; ++a) {
                const Rational lam = g.pair(a, x);
                if (lam.is_zero()) continue;
                const ExtValue cand = lam * inner[static_cast<std::size_t>(a)];
                if (best < cand) best = cand;
            }
            out[static_cast<std::size_t>(x)] = best;
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return {q.group, std::move(out)};
}

QuasiNorm regularise_formula_nested(const QuasiNorm& q) {
    ensure_valid(q);
    const FiniteAbelianGroup& g = *q.group;
    const std::int64_t n = g.order();
    std::vector<ExtValue> out(static_cast<std::size_t>(n), ExtValue(Rational(0)));
    for (std::int64_t x = 1; x < n; ++x) {
        ExtValue best{Rational(0)};
        for (std::int64_t a = 1; a < n; ++a) {
            const Rational lam_x = g.pair(a, x);
            if (lam_x.is_zero()) continue;
            ExtValue inf = ExtValue::infinity();
            for (std::int64_t y = 1; y < n; ++y) {
                const Rational lam_y = g.pair(a, y);
                if (lam_y.is_zero()) continue;
                const ExtValue cand = (lam_x / lam_y) * q.at(y);
                if (cand < inf) inf = cand;
            }
            if (best < inf) best = inf;
        }
        out[static_cast<std::size_t>(x)] = best;
    }
    return {q.group, std::move(out)};
}

RegularityReport is_regular(const QuasiNorm& q) {
    const QuasiNorm reg = regularise(q);
    RegularityReport report;
    for (std::int64_t x = 0; x < q.group->order(); ++x) {
        if (reg.at(x) != q.at(x)) {
            report.is_regular = false;
            report.witness = x;
            report.witness_value = q.at(x);
            report.witness_regularised = reg.at(x);
            break;
        }
    }

    // Surjectivity tally for the canonical map: ε_x = ε_y iff x - y lies in
    // the radical {z : chi(z) = 1 for every character}, so the image size is
    // order / |radical|. The radical is trivial on any finite abelian group;
    // counting it keeps the claim checked rather than assumed.
    const FiniteAbelianGroup& g = *q.group;
    const std::int64_t n = g.order();
    std::int64_t radical = 0;
    for (std::int64_t z = 0; z < n; ++z) {
        bool invisible = true;
        for (std::int64_t a = 0; a < n; ++a) {
            if (!g.pair(a, z).is_zero()) {
                invisible = false;
                break;
            }
        }
        if (invisible) ++radical;
    }
    report.evaluation_image_count = n / radical;
    report.is_reflexive = report.is_regular && report.evaluation_image_count == n;
    return report;
}

} // namespace gdual
