#include "gdual/quasinorm.hpp"

#include <stdexcept>

namespace gdual {

std::string ValidationResult::message() const {
    switch (violated) {
        case Axiom::none:
            return "valid";
        case Axiom::identity:
            return "p(e_G)=0 violated";
        case Axiom::symmetry:
            return "p(-x)=p(x) violated at x=" + std::to_string(witness_x);
        case Axiom::subadditivity:
            return "p(x+y)<=p(x)+p(y) violated at x=" + std::to_string(witness_x) +
                   ", y=" + std::to_string(witness_y);
    }
    return "valid";
}

ValidationResult validate(const QuasiNorm& q) {
    const FiniteAbelianGroup& g = *q.group;
    if (static_cast<std::int64_t>(q.values.size()) != g.order()) {
        throw std::invalid_argument("quasinorm: value table is not total over the group");
    }
    if (!q.at(0).is_zero()) {
        return {false, Axiom::identity, 0, -1};
    }
    for (std::int64_t x = 1; x < g.order(); ++x) {
        if (q.at(x) != q.at(g.negate(x))) {
            return {false, Axiom::symmetry, x, g.negate(x)};
        }
    }
    for (std::int64_t x = 1; x < g.order(); ++x) {
        for (std::int64_t y = x; y < g.order(); ++y) {
            if (q.at(g.add(x, y)) > q.at(x) + q.at(y)) {
                return {false, Axiom::subadditivity, x, y};
            }
        }
    }
    return {};
}

void ensure_valid(const QuasiNorm& q) {
    const ValidationResult r = validate(q);
    if (!r.ok) throw std::invalid_argument("quasinorm: " + r.message());
}

QuasiNorm discrete_norm(const GroupPtr& group) {
    std::vector<ExtValue> v(static_cast<std::size_t>(group->order()), ExtValue(Rational(1)));
    v[0] = ExtValue(Rational(0));
    return {group, std::move(v)};
}

QuasiNorm zero_qn(const GroupPtr& group) {
    return {group, std::vector<ExtValue>(static_cast<std::size_t>(group->order()), ExtValue(Rational(0)))};
}

QuasiNorm infty_qn(const GroupPtr& group) {
    std::vector<ExtValue> v(static_cast<std::size_t>(group->order()), ExtValue::infinity());
    v[0] = ExtValue(Rational(0));
    return {group, std::move(v)};
}

QuasiNorm scale(const QuasiNorm& q, const Rational& c) {
    if (c.is_zero()) throw std::invalid_argument("scale: factor must be positive");
    QuasiNorm out{q.group, q.values};
    for (auto& v : out.values) {
        if (!v.is_zero()) v = c * v;
    }
    return out;
}

bool same_table(const QuasiNorm& a, const QuasiNorm& b) {
    return a.group->same_as(*b.group) && a.values == b.values;
}

bool pointwise_le(const QuasiNorm& a, const QuasiNorm& b) {
    if (!a.group->same_as(*b.group)) throw std::invalid_argument("pointwise_le: mixed groups");
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        if (a.values[i] > b.values[i]) return false;
    }
    return true;
}

} // namespace gdual
