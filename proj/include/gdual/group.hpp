#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gdual/rational.hpp"

namespace gdual {

/// Finite abelian group Z/n1 x ... x Z/nk given by its cyclic moduli.
///
/// Elements and characters are addressed by a flat index in [0, order);
/// the index enumerates residue vectors lexicographically. Characters use
/// the same index space: the character with coefficient vector a sends x to
/// exp(2*pi*i * sum a_i x_i / n_i), so the dual group is carried by the
/// same moduli and pair() is symmetric in its two arguments.
class FiniteAbelianGroup {
public:
    explicit FiniteAbelianGroup(std::vector<std::int64_t> moduli);

    std::int64_t order() const { return order_; }
    std::size_t rank() const { return moduli_.size(); }
    const std::vector<std::int64_t>& moduli() const { return moduli_; }

    std::int64_t add(std::int64_t x, std::int64_t y) const;
    std::int64_t negate(std::int64_t x) const;

    /// Canonicalizes arbitrary integer residues (negatives allowed).
    std::int64_t index_of(std::span<const std::int64_t> residues) const;
    std::vector<std::int64_t> residues_of(std::int64_t index) const;

    /// lambda(chi_a(x)): exact distance of sum a_i x_i / n_i to the nearest
    /// integer, as a reduced rational in [0, 1/2]. Symmetric in a and x.
    Rational pair(std::int64_t a, std::int64_t x) const;

    /// Least m >= 1 with m*x = 0. Same computation orders characters.
    std::int64_t element_order(std::int64_t x) const;

    bool same_as(const FiniteAbelianGroup& other) const { return moduli_ == other.moduli_; }

    /// "Z/2 x Z/9" style tag for reports and witnesses.
    std::string label() const;

private:
    Rational pair_uncached(std::int64_t a, std::int64_t x) const;

    std::vector<std::int64_t> moduli_;
    std::vector<std::int64_t> strides_;
    std::int64_t order_ = 1;
    std::int64_t lcm_ = 1;
    std::vector<std::int64_t> weights_; // lcm / moduli[i]
    std::vector<Rational> pair_table_;  // order x order, built for small groups
};

using GroupPtr = std::shared_ptr<const FiniteAbelianGroup>;

/// Throws std::invalid_argument on an empty list or a nonpositive modulus.
GroupPtr make_group(std::vector<std::int64_t> moduli);

/// Subgroup in ambient representation: a sorted, deduplicated, closed set
/// of element indices. Sorted index order coincides with lexicographic
/// order on residue vectors.
struct Subgroup {
    GroupPtr ambient;
    std::vector<std::int64_t> elements;
    std::vector<std::int64_t> generators;

    std::int64_t size() const { return static_cast<std::int64_t>(elements.size()); }
    bool contains(std::int64_t x) const;
};

/// Closure of the generators under addition and negation; gens may be empty
/// (yielding the trivial subgroup).
Subgroup subgroup_generate(const GroupPtr& group, std::span<const std::int64_t> gens);

/// Characters identically trivial on H, as a subgroup of the dual side.
Subgroup annihilator(const Subgroup& h);

/// The character group of a subgroup H <= G, realised as the quotient of
/// ambient characters modulo the annihilator of H. Each class is named by
/// its lexicographically smallest member.
struct CharacterClasses {
    Subgroup perp;                    // annihilator of H in the dual group
    std::vector<std::int64_t> reps;   // canonical representative per class, ascending

    /// Canonical representative of the class containing a.
    std::int64_t rep_of(std::int64_t a) const;
    /// Position of a's class in reps.
    std::size_t class_index(std::int64_t a) const;
};

/// Distinct restrictions of ambient characters to H; the class count always
/// equals |H|.
CharacterClasses subgroup_characters(const Subgroup& h);

} // namespace gdual
