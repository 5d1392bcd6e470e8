#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tempo/graph.hpp"

namespace tempo {

enum class CostKind {
    foremost_walk,
    shortest_path,
    shortest_fastest_path,
    shortest_restless_walk,
    strict_prefix_foremost_path,
};

// Incremental walk cost. Meaning of the fields depends on the model:
//   foremost / prefix-foremost   primary = arrival time
//   shortest / shortest-restless primary = length
//   shortest-fastest             primary = duration, secondary = length
struct CostLabel {
    int32_t primary = 0;
    int32_t secondary = 0;
    bool operator==(const CostLabel&) const = default;
};

enum class Ordering { less, equal, greater };

// One optimality concept. Immutable after prepare(); strict-prefix-foremost
// carries a per-source earliest-arrival table, the other kinds need none.
struct CostModel {
    CostKind kind = CostKind::shortest_path;
    bool strict = false;
    int delta = 0;  // waiting bound, shortest-restless only

    std::shared_ptr<const std::vector<int32_t>> earliest;  // per vertex, -1 unreachable
    int prepared_source = -1;

    static CostModel foremost(bool strict = false);
    static CostModel shortest(bool strict = false);
    static CostModel shortest_fastest(bool strict = false);
    static CostModel shortest_restless(int delta, bool strict = false);
    static CostModel prefix_foremost();

    bool needs_prepare() const { return kind == CostKind::strict_prefix_foremost_path; }
    bool prepared_for(int source) const { return !needs_prepare() || prepared_source == source; }
    std::string spelling() const;             // CLI name of the kind
    std::string describe() const;             // kind plus flags, for output metadata
};

// Label of the trivial start at (s, 0): extending it along a first arc must
// yield the cost of that one-arc walk.
CostLabel identity_label(const CostModel& model);

// Cost of extending a walk that sits at `at` with `arc`. nullopt means the
// extension is not admitted by the model (a value, not an error). at.time == 0
// marks the start appearance (s, 0); the waiting bound of the restless model
// does not apply to the first transition.
std::optional<CostLabel> extend(const CostModel& model, CostLabel label, VertexAppearance at,
                                const TimeArc& arc);

Ordering compare(const CostModel& model, CostLabel a, CostLabel b);

// Per-source precomputation. Identity for all kinds except
// strict-prefix-foremost, which gets the earliest strict arrival per vertex.
CostModel prepare(const CostModel& model, const TemporalGraph& graph, int source);

std::string label_to_string(const CostModel& model, CostLabel label);

std::optional<CostKind> parse_cost_kind(std::string_view spelling);

}  // namespace tempo
