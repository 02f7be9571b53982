#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gdual/ext_value.hpp"
#include "gdual/group.hpp"

namespace gdual {

/// Total value table over a finite abelian group. A valid table satisfies
/// p(0) = 0, p(-x) = p(x) and p(x+y) <= p(x) + p(y).
struct QuasiNorm {
    GroupPtr group;
    std::vector<ExtValue> values;

    const ExtValue& at(std::int64_t x) const { return values[static_cast<std::size_t>(x)]; }
};

enum class Axiom { none, identity, symmetry, subadditivity };

struct ValidationResult {
    bool ok = true;
    Axiom violated = Axiom::none;
    std::int64_t witness_x = -1;
    std::int64_t witness_y = -1;

    std::string message() const;
};

/// Checks the three axioms; a table whose size does not match the group
/// order is reported as an input error (std::invalid_argument).
ValidationResult validate(const QuasiNorm& q);

/// validate() that throws std::invalid_argument with the violated axiom.
void ensure_valid(const QuasiNorm& q);

QuasiNorm discrete_norm(const GroupPtr& group);
QuasiNorm zero_qn(const GroupPtr& group);
QuasiNorm infty_qn(const GroupPtr& group);

/// Pointwise multiple by a strictly positive rational; infinity stays put.
QuasiNorm scale(const QuasiNorm& q, const Rational& c);

bool same_table(const QuasiNorm& a, const QuasiNorm& b);
bool pointwise_le(const QuasiNorm& a, const QuasiNorm& b);

} // namespace gdual
