#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gdual/quasinorm.hpp"

namespace gdual {

/// Nonempty family of quasi-norms on one group.
struct MetricStructure {
    GroupPtr group;
    std::vector<QuasiNorm> members;
};

/// Throws on an empty list or mixed groups; members are validated.
MetricStructure make_structure(std::vector<QuasiNorm> members);

struct StructureReport {
    bool separating = true;
    bool upward_directed = true;
    bool downward_directed = true;
    bool fin_covering = true;
    bool is_metric_structure = true;

    std::optional<std::int64_t> separating_witness;                     // element all members kill
    std::optional<std::pair<std::size_t, std::size_t>> upward_witness;  // pair with no upper bound
    std::optional<std::pair<std::size_t, std::size_t>> downward_witness;
    std::optional<std::int64_t> fin_witness;                            // element no member keeps finite
};

/// separating: every x != 0 has a member positive at x;
/// upward/downward: every member pair has an in-family bound;
/// fin covering: every x has a member finite at x.
StructureReport check_structure(const MetricStructure& p);

/// Memberwise dual on the dual group, order preserved.
MetricStructure dual_structure(const MetricStructure& p);

/// Equivalence check for families of regular members that are upward
/// directed and separating (preconditions enforced, violations are input
/// errors). The three conditions must evaluate identically; disagreement is
/// a defect in the engine, not in the input.
struct PropMetrstrReport {
    bool cond_i = false;    // dual family separating and upward directed
    bool cond_ii = false;   // family downward directed and finitely covering
    bool cond_iii = false;  // dual family separating, both directed, pointwise finite
    bool consistent = false;
};

PropMetrstrReport check_prop_metrstr(const MetricStructure& p);

} // namespace gdual
