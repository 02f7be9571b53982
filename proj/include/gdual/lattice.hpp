#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "gdual/dual.hpp"
#include "gdual/quasinorm.hpp"

namespace gdual {

/// Pointwise supremum. Nonempty input, all members on one group.
QuasiNorm join(std::span<const QuasiNorm> members);

/// Order-infimum of regular quasi-norms through the dual side: the
/// pointwise supremum of the duals is dualised back and read off along the
/// canonical identification. A pointwise minimum would not in general be
/// subadditive, so the computation never touches one.
QuasiNorm meet(std::span<const QuasiNorm> members);

/// Quasi-norm on the product group (concatenated moduli); the value of a
/// tuple is the maximum of the componentwise values.
QuasiNorm product(std::span<const QuasiNorm> factors);

Subgroup kernel(const QuasiNorm& q);   // { x : q(x) = 0 }
Subgroup fin_part(const QuasiNorm& q); // { x : q(x) < inf }

/// Restriction of a table to a subgroup, kept in ambient coordinates.
/// Duality for the restriction runs against the character classes of H.
struct SubgroupQuasiNorm {
    Subgroup sub;
    std::vector<ExtValue> values; // aligned with sub.elements

    const ExtValue& at_position(std::size_t i) const { return values[i]; }
};

SubgroupQuasiNorm restrict_to(const QuasiNorm& q, const Subgroup& h);

/// Dual of a restricted norm, indexed by the character classes of H.
struct SubgroupDual {
    CharacterClasses classes;
    std::vector<ExtValue> values; // aligned with classes.reps

    const ExtValue& at_class_of(std::int64_t ambient_char) const {
        return values[classes.class_index(ambient_char)];
    }
};

SubgroupDual subgroup_dual(const SubgroupQuasiNorm& p);

/// Second dual pulled back onto H itself.
SubgroupQuasiNorm subgroup_regularise(const SubgroupQuasiNorm& p);

struct SubgroupRegularity {
    bool is_regular = true;
    std::optional<std::int64_t> witness; // ambient element index
};

SubgroupRegularity subgroup_is_regular(const SubgroupQuasiNorm& p);

} // namespace gdual
