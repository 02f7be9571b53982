#pragma once

#include <cstdint>
#include <optional>

#include "gdual/quasinorm.hpp"

namespace gdual {

/// Dual quasi-norm on the dual group (same moduli):
///   p#(chi) = sup { lambda(chi(g)) / p(g) : g in G, chi(g) != 1 }
/// with sup(empty) = 0, a/0 = inf, a/inf = 0. The index set excludes g with
/// lambda(chi(g)) = 0, so 0/0 never forms. OpenMP-parallel over characters.
QuasiNorm dual(const QuasiNorm& q);

/// Single-threaded reference for the same computation.
QuasiNorm dual_serial(const QuasiNorm& q);

/// dual(dual(q)) read back on G through the canonical identification
/// (the pairing is symmetric, so the table index is reused verbatim).
QuasiNorm bidual(const QuasiNorm& q);

/// Regularisation reg q = bidual(q); always regular, always <= q.
QuasiNorm regularise(const QuasiNorm& q);

/// Independent sup-inf route:
///   reg q(x) = sup_{chi: chi(x) != 1} inf_{g not in ker chi}
///              [lambda(chi(x)) / lambda(chi(g))] * q(g).
/// The constant factor lambda(chi(x)) is hoisted out of the inner infimum.
/// Must agree with regularise() on every input; a mismatch is a defect.
QuasiNorm regularise_formula(const QuasiNorm& q);

/// Literal nested sup-inf evaluation, no hoisting, serial. Reference
/// implementation for regularise_formula on small groups.
QuasiNorm regularise_formula_nested(const QuasiNorm& q);

struct RegularityReport {
    bool is_regular = true;
    bool is_reflexive = true;
    std::optional<std::int64_t> witness;  // element where reg q != q
    ExtValue witness_value;               // q at the witness
    ExtValue witness_regularised;         // reg q at the witness
    std::int64_t evaluation_image_count = 0;  // distinct evaluation characters
};

/// q is regular iff regularise(q) = q everywhere. On a finite group the
/// canonical map to the second dual is bijective, so reflexivity reduces to
/// regularity; the image count is still tallied as a sanity check.
RegularityReport is_regular(const QuasiNorm& q);

} // namespace gdual
