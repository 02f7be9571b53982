#include "gdual/generator.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace gdual {

QuasiNorm random_quasinorm(const GroupPtr& group, std::uint64_t seed,
                           std::span<const ExtValue> pool) {
    if (pool.empty()) throw std::invalid_argument("random_quasinorm: empty value pool");
    const FiniteAbelianGroup& g = *group;
    const std::int64_t n = g.order();

    std::mt19937_64 rng(seed);
    std::vector<ExtValue> raw(static_cast<std::size_t>(n), ExtValue(Rational(0)));
    for (std::int64_t x = 1; x < n; ++x) {
        raw[static_cast<std::size_t>(x)] = pool[rng() % pool.size()];
    }
    for (std::int64_t x = 1; x < n; ++x) {
        const std::int64_t nx = g.negate(x);
        const ExtValue m = min(raw[static_cast<std::size_t>(x)], raw[static_cast<std::size_t>(nx)]);
        raw[static_cast<std::size_t>(x)] = m;
        raw[static_cast<std::size_t>(nx)] = m;
    }

    // Dijkstra from the identity over all single-step moves.
    std::vector<ExtValue> dist(static_cast<std::size_t>(n), ExtValue::infinity());
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    dist[0] = ExtValue(Rational(0));
    for (std::int64_t round = 0; round < n; ++round) {
        std::int64_t u = -1;
        for (std::int64_t v = 0; v < n; ++v) {
            if (!done[static_cast<std::size_t>(v)] &&
                (u < 0 || dist[static_cast<std::size_t>(v)] < dist[static_cast<std::size_t>(u)])) {
                u = v;
            }
        }
        if (dist[static_cast<std::size_t>(u)].is_infinite()) break;
        done[static_cast<std::size_t>(u)] = 1;
        for (std::int64_t step = 1; step < n; ++step) {
            const ExtValue w = raw[static_cast<std::size_t>(step)];
            if (w.is_infinite()) continue;
            const std::int64_t v = g.add(u, step);
            const ExtValue cand = dist[static_cast<std::size_t>(u)] + w;
            if (cand < dist[static_cast<std::size_t>(v)]) {
                dist[static_cast<std::size_t>(v)] = cand;
            }
        }
    }
    return {group, std::move(dist)};
}

} // namespace gdual
