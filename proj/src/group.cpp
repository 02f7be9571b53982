#include "gdual/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gdual {

namespace {

constexpr std::int64_t kMaxOrder = std::int64_t(1) << 20;
constexpr std::int64_t kPairCacheLimit = 1024;

std::int64_t positive_mod(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

} // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> moduli)
    : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw std::invalid_argument("group: empty modulus list");
    for (std::int64_t m : moduli_) {
        if (m < 1) throw std::invalid_argument("group: nonpositive modulus");
        if (order_ > kMaxOrder / m) throw std::invalid_argument("group: order too large");
        order_ *= m;
        lcm_ = std::lcm(lcm_, m);
    }
    strides_.assign(moduli_.size(), 1);
    for (std::size_t i = moduli_.size(); i-- > 1;) {
        strides_[i - 1] = strides_[i] * moduli_[i];
    }
    weights_.reserve(moduli_.size());
    for (std::int64_t m : moduli_) weights_.push_back(lcm_ / m);

    if (order_ <= kPairCacheLimit) {
        pair_table_.resize(static_cast<std::size_t>(order_) * order_);
        for (std::int64_t a = 0; a < order_; ++a) {
            for (std::int64_t x = a; x < order_; ++x) {
                Rational v = pair_uncached(a, x);
                pair_table_[static_cast<std::size_t>(a) * order_ + x] = v;
                pair_table_[static_cast<std::size_t>(x) * order_ + a] = v;
            }
        }
    }
}

std::int64_t FiniteAbelianGroup::add(std::int64_t x, std::int64_t y) const {
    std::int64_t out = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        const std::int64_t m = moduli_[i];
        const std::int64_t s = strides_[i];
        const std::int64_t xi = (x / s) % m;
        const std::int64_t yi = (y / s) % m;
        std::int64_t zi = xi + yi;
        if (zi >= m) zi -= m;
        out += zi * s;
    }
    return out;
}

std::int64_t FiniteAbelianGroup::negate(std::int64_t x) const {
    std::int64_t out = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        const std::int64_t m = moduli_[i];
        const std::int64_t s = strides_[i];
        const std::int64_t xi = (x / s) % m;
        out += (xi == 0 ? 0 : m - xi) * s;
    }
    return out;
}

std::int64_t FiniteAbelianGroup::index_of(std::span<const std::int64_t> residues) const {
    if (residues.size() != moduli_.size()) {
        throw std::invalid_argument("group: residue vector has wrong length");
    }
    std::int64_t index = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        index += positive_mod(residues[i], moduli_[i]) * strides_[i];
    }
    return index;
}

std::vector<std::int64_t> FiniteAbelianGroup::residues_of(std::int64_t index) const {
    if (index < 0 || index >= order_) throw std::invalid_argument("group: element index out of range");
    std::vector<std::int64_t> out(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        out[i] = (index / strides_[i]) % moduli_[i];
    }
    return out;
}

Rational FiniteAbelianGroup::pair(std::int64_t a, std::int64_t x) const {
    if (a < 0 || a >= order_ || x < 0 || x >= order_) {
        throw std::invalid_argument("group: index out of range in pairing");
    }
    if (!pair_table_.empty()) {
        return pair_table_[static_cast<std::size_t>(a) * order_ + x];
    }
    return pair_uncached(a, x);
}

Rational FiniteAbelianGroup::pair_uncached(std::int64_t a, std::int64_t x) const {
    // sum a_i x_i / n_i = (sum a_i x_i (L/n_i)) / L with L = lcm(moduli)
    __int128 acc = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        const std::int64_t m = moduli_[i];
        const std::int64_t s = strides_[i];
        const std::int64_t ai = (a / s) % m;
        const std::int64_t xi = (x / s) % m;
        acc += static_cast<__int128>(ai) * xi % m * weights_[i];
    }
    const std::int64_t phase = static_cast<std::int64_t>(acc % lcm_);
    return Rational(std::min(phase, lcm_ - phase), lcm_);
}

std::int64_t FiniteAbelianGroup::element_order(std::int64_t x) const {
    if (x < 0 || x >= order_) throw std::invalid_argument("group: element index out of range");
    std::int64_t ord = 1;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        const std::int64_t m = moduli_[i];
        const std::int64_t xi = (x / strides_[i]) % m;
        ord = std::lcm(ord, m / std::gcd(xi, m));
    }
    return ord;
}

std::string FiniteAbelianGroup::label() const {
    std::string out;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        if (i > 0) out += " x ";
        out += "Z/" + std::to_string(moduli_[i]);
    }
    return out;
}

GroupPtr make_group(std::vector<std::int64_t> moduli) {
    return std::make_shared<const FiniteAbelianGroup>(std::move(moduli));
}

bool Subgroup::contains(std::int64_t x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

Subgroup subgroup_generate(const GroupPtr& group, std::span<const std::int64_t> gens) {
    for (std::int64_t g : gens) {
        if (g < 0 || g >= group->order()) {
            throw std::invalid_argument("subgroup: generator index out of range");
        }
    }
    std::vector<char> seen(static_cast<std::size_t>(group->order()), 0);
    std::vector<std::int64_t> frontier{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < frontier.size(); ++head) {
        const std::int64_t u = frontier[head];
        for (std::int64_t g : gens) {
            for (std::int64_t v : {group->add(u, g), group->add(u, group->negate(g))}) {
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    frontier.push_back(v);
                }
            }
        }
    }
    std::sort(frontier.begin(), frontier.end());
    return Subgroup{group, std::move(frontier), {gens.begin(), gens.end()}};
}

Subgroup annihilator(const Subgroup& h) {
    const FiniteAbelianGroup& g = *h.ambient;
    std::vector<std::int64_t> chars;
    for (std::int64_t a = 0; a < g.order(); ++a) {
        bool vanishes = true;
        for (std::int64_t x : h.elements) {
            if (!g.pair(a, x).is_zero()) {
                vanishes = false;
                break;
            }
        }
        if (vanishes) chars.push_back(a);
    }
    return Subgroup{h.ambient, std::move(chars), {}};
}

std::int64_t CharacterClasses::rep_of(std::int64_t a) const {
    const FiniteAbelianGroup& g = *perp.ambient;
    std::int64_t best = g.order();
    for (std::int64_t z : perp.elements) {
        best = std::min(best, g.add(a, z));
    }
    return best;
}

std::size_t CharacterClasses::class_index(std::int64_t a) const {
    const std::int64_t rep = rep_of(a);
    const auto it = std::lower_bound(reps.begin(), reps.end(), rep);
    if (it == reps.end() || *it != rep) {
        throw std::logic_error("character classes: representative not found");
    }
    return static_cast<std::size_t>(it - reps.begin());
}

CharacterClasses subgroup_characters(const Subgroup& h) {
    const FiniteAbelianGroup& g = *h.ambient;
    Subgroup perp = annihilator(h);
    std::vector<char> assigned(static_cast<std::size_t>(g.order()), 0);
    std::vector<std::int64_t> reps;
    for (std::int64_t a = 0; a < g.order(); ++a) {
        if (assigned[static_cast<std::size_t>(a)]) continue;
        reps.push_back(a);
        for (std::int64_t z : perp.elements) {
            assigned[static_cast<std::size_t>(g.add(a, z))] = 1;
        }
    }
    if (static_cast<std::int64_t>(reps.size()) != h.size()) {
        throw std::logic_error("character classes: class count does not equal subgroup order");
    }
    return CharacterClasses{std::move(perp), std::move(reps)};
}

} // namespace gdual
