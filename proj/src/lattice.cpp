#include "gdual/lattice.hpp"

#include <stdexcept>

namespace gdual {

namespace {

void require_common_group(std::span<const QuasiNorm> members) {
    if (members.empty()) throw std::invalid_argument("lattice: empty member list");
    for (const QuasiNorm& m : members) {
        if (!m.group->same_as(*members.front().group)) {
            throw std::invalid_argument("lattice: members live on different groups");
        }
        ensure_valid(m);
    }
}

} // namespace

QuasiNorm join(std::span<const QuasiNorm> members) {
    require_common_group(members);
    QuasiNorm out{members.front().group, members.front().values};
    for (std::size_t k = 1; k < members.size(); ++k) {
        for (std::size_t i = 0; i < out.values.size(); ++i) {
            out.values[i] = max(out.values[i], members[k].values[i]);
        }
    }
    return out;
}

QuasiNorm meet(std::span<const QuasiNorm> members) {
    require_common_group(members);
    std::vector<QuasiNorm> duals;
    duals.reserve(members.size());
    for (const QuasiNorm& m : members) duals.push_back(dual(m));
    return dual(join(duals));
}

QuasiNorm product(std::span<const QuasiNorm> factors) {
    if (factors.empty()) throw std::invalid_argument("product: empty factor list");
    std::vector<std::int64_t> moduli;
    for (const QuasiNorm& f : factors) {
        ensure_valid(f);
        const auto& m = f.group->moduli();
        moduli.insert(moduli.end(), m.begin(), m.end());
    }
    GroupPtr prod = make_group(std::move(moduli));
    std::vector<ExtValue> values(static_cast<std::size_t>(prod->order()));
    for (std::int64_t idx = 0; idx < prod->order(); ++idx) {
        // indices nest big-endian, so the flat index splits by factor orders
        ExtValue v{Rational(0)};
        std::int64_t rest = idx;
        std::int64_t suffix = prod->order();
        for (const QuasiNorm& f : factors) {
            suffix /= f.group->order();
            const std::int64_t comp = rest / suffix;
            rest %= suffix;
            v = max(v, f.at(comp));
        }
        values[static_cast<std::size_t>(idx)] = v;
    }
    return {std::move(prod), std::move(values)};
}

Subgroup kernel(const QuasiNorm& q) {
    std::vector<std::int64_t> elems;
    for (std::int64_t x = 0; x < q.group->order(); ++x) {
        if (q.at(x).is_zero()) elems.push_back(x);
    }
    return Subgroup{q.group, std::move(elems), {}};
}

Subgroup fin_part(const QuasiNorm& q) {
    std::vector<std::int64_t> elems;
    for (std::int64_t x = 0; x < q.group->order(); ++x) {
        if (q.at(x).is_finite()) elems.push_back(x);
    }
    return Subgroup{q.group, std::move(elems), {}};
}

SubgroupQuasiNorm restrict_to(const QuasiNorm& q, const Subgroup& h) {
    if (!h.ambient->same_as(*q.group)) {
        throw std::invalid_argument("restrict: subgroup lives in a different group");
    }
    ensure_valid(q);
    std::vector<ExtValue> values;
    values.reserve(h.elements.size());
    for (std::int64_t x : h.elements) values.push_back(q.at(x));
    return {h, std::move(values)};
}

SubgroupDual subgroup_dual(const SubgroupQuasiNorm& p) {
    const FiniteAbelianGroup& g = *p.sub.ambient;
    CharacterClasses classes = subgroup_characters(p.sub);
    std::vector<ExtValue> values;
    values.reserve(classes.reps.size());
    for (std::int64_t a : classes.reps) {
        ExtValue best{Rational(0)};
        for (std::size_t i = 0; i < p.sub.elements.size(); ++i) {
            const Rational lam = g.pair(a, p.sub.elements[i]);
            if (lam.is_zero()) continue;
            const ExtValue r = ExtValue::ratio(lam, p.values[i]);
            if (best < r) best = r;
        }
        values.push_back(best);
    }
    return {std::move(classes), std::move(values)};
}

SubgroupQuasiNorm subgroup_regularise(const SubgroupQuasiNorm& p) {
    const FiniteAbelianGroup& g = *p.sub.ambient;
    const SubgroupDual sd = subgroup_dual(p);
    std::vector<ExtValue> values;
    values.reserve(p.sub.elements.size());
    for (std::int64_t h : p.sub.elements) {
        ExtValue best{Rational(0)};
        for (std::size_t c = 0; c < sd.classes.reps.size(); ++c) {
            const Rational lam = g.pair(sd.classes.reps[c], h);
            if (lam.is_zero()) continue;
            const ExtValue r = ExtValue::ratio(lam, sd.values[c]);
            if (best < r) best = r;
        }
        values.push_back(best);
    }
    return {p.sub, std::move(values)};
}

SubgroupRegularity subgroup_is_regular(const SubgroupQuasiNorm& p) {
    const SubgroupQuasiNorm reg = subgroup_regularise(p);
    for (std::size_t i = 0; i < p.values.size(); ++i) {
        if (reg.values[i] != p.values[i]) {
            return {false, p.sub.elements[i]};
        }
    }
    return {};
}

} // namespace gdual
