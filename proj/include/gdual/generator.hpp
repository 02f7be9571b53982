#pragma once

#include <cstdint>
#include <span>

#include "gdual/quasinorm.hpp"

namespace gdual {

/// Deterministic quasi-norm generator. A raw table is drawn from the value
/// pool, pinned to 0 at the identity, symmetrised by a pointwise min with
/// the negated argument, and then closed under subadditivity: each value is
/// replaced by the cheapest factorisation cost, i.e. the shortest-path
/// distance from the identity in the complete Cayley graph weighted by the
/// raw table. The result always validates and is the greatest quasi-norm
/// dominated by the raw draw.
QuasiNorm random_quasinorm(const GroupPtr& group, std::uint64_t seed,
                           std::span<const ExtValue> pool);

} // namespace gdual
