#include "gdual/structures.hpp"

#include <stdexcept>

#include "gdual/dual.hpp"

namespace gdual {

namespace {

bool has_inner_upper_bound(const std::vector<QuasiNorm>& members, std::size_t i, std::size_t j) {
    for (const QuasiNorm& r : members) {
        if (pointwise_le(members[i], r) && pointwise_le(members[j], r)) return true;
    }
    return false;
}

bool has_inner_lower_bound(const std::vector<QuasiNorm>& members, std::size_t i, std::size_t j) {
    for (const QuasiNorm& v : members) {
        if (pointwise_le(v, members[i]) && pointwise_le(v, members[j])) return true;
    }
    return false;
}

} // namespace

MetricStructure make_structure(std::vector<QuasiNorm> members) {
    if (members.empty()) throw std::invalid_argument("structure: empty member list");
    GroupPtr group = members.front().group;
    for (const QuasiNorm& m : members) {
        if (!m.group->same_as(*group)) throw std::invalid_argument("structure: mixed groups");
        ensure_valid(m);
    }
    return {std::move(group), std::move(members)};
}

StructureReport check_structure(const MetricStructure& p) {
    StructureReport rep;
    const FiniteAbelianGroup& g = *p.group;

    for (std::int64_t x = 1; x < g.order(); ++x) {
        bool positive = false;
        bool finite = false;
        for (const QuasiNorm& m : p.members) {
            if (!m.at(x).is_zero()) positive = true;
            if (m.at(x).is_finite()) finite = true;
            if (positive && finite) break;
        }
        if (!positive && rep.separating) {
            rep.separating = false;
            rep.separating_witness = x;
        }
        if (!finite && rep.fin_covering) {
            rep.fin_covering = false;
            rep.fin_witness = x;
        }
    }

    for (std::size_t i = 0; i < p.members.size() && (rep.upward_directed || rep.downward_directed); ++i) {
        for (std::size_t j = i + 1; j < p.members.size(); ++j) {
            if (rep.upward_directed && !has_inner_upper_bound(p.members, i, j)) {
                rep.upward_directed = false;
                rep.upward_witness = {i, j};
            }
            if (rep.downward_directed && !has_inner_lower_bound(p.members, i, j)) {
                rep.downward_directed = false;
                rep.downward_witness = {i, j};
            }
        }
    }

    rep.is_metric_structure =
        rep.separating && rep.upward_directed && rep.downward_directed && rep.fin_covering;
    return rep;
}

MetricStructure dual_structure(const MetricStructure& p) {
    std::vector<QuasiNorm> duals;
    duals.reserve(p.members.size());
    for (const QuasiNorm& m : p.members) duals.push_back(dual(m));
    return {p.group, std::move(duals)};
}

PropMetrstrReport check_prop_metrstr(const MetricStructure& p) {
    for (const QuasiNorm& m : p.members) {
        if (!is_regular(m).is_regular) {
            throw std::invalid_argument("prop-metrstr: family contains a non-regular member");
        }
    }
    const StructureReport base = check_structure(p);
    if (!base.separating) throw std::invalid_argument("prop-metrstr: family is not separating");
    if (!base.upward_directed) throw std::invalid_argument("prop-metrstr: family is not upward directed");

    const MetricStructure d = dual_structure(p);
    const StructureReport drep = check_structure(d);

    bool dual_pointwise_finite = true;
    for (std::int64_t phi = 0; phi < p.group->order() && dual_pointwise_finite; ++phi) {
        bool finite = false;
        for (const QuasiNorm& m : d.members) {
            if (m.at(phi).is_finite()) {
                finite = true;
                break;
            }
        }
        dual_pointwise_finite = finite;
    }

    PropMetrstrReport rep;
    rep.cond_i = drep.separating && drep.upward_directed;
    rep.cond_ii = base.downward_directed && base.fin_covering;
    rep.cond_iii = drep.separating && drep.upward_directed && drep.downward_directed &&
                   dual_pointwise_finite;
    rep.consistent = (rep.cond_i == rep.cond_ii) && (rep.cond_ii == rep.cond_iii);
    return rep;
}

} // namespace gdual
