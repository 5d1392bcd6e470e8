#include "tempo/cost.hpp"

#include <cassert>

namespace tempo {

CostModel CostModel::foremost(bool strict) { return {CostKind::foremost_walk, strict, 0, nullptr, -1}; }
CostModel CostModel::shortest(bool strict) { return {CostKind::shortest_path, strict, 0, nullptr, -1}; }
CostModel CostModel::shortest_fastest(bool strict) {
    return {CostKind::shortest_fastest_path, strict, 0, nullptr, -1};
}
CostModel CostModel::shortest_restless(int delta, bool strict) {
    assert(delta > 0);
    return {CostKind::shortest_restless_walk, strict, delta, nullptr, -1};
}
CostModel CostModel::prefix_foremost() {
    return {CostKind::strict_prefix_foremost_path, true, 0, nullptr, -1};
}

std::string CostModel::spelling() const {
    switch (kind) {
        case CostKind::foremost_walk: return "foremost";
        case CostKind::shortest_path: return "shortest";
        case CostKind::shortest_fastest_path: return "shortest-fastest";
        case CostKind::shortest_restless_walk: return "shortest-restless";
        case CostKind::strict_prefix_foremost_path: return "prefix-foremost";
    }
    return "?";
}

std::string CostModel::describe() const {
    std::string s = spelling();
    if (kind == CostKind::shortest_restless_walk) s += " delta=" + std::to_string(delta);
    s += strict ? " strict" : " non-strict";
    return s;
}

std::optional<CostKind> parse_cost_kind(std::string_view spelling) {
    if (spelling == "foremost") return CostKind::foremost_walk;
    if (spelling == "shortest") return CostKind::shortest_path;
    if (spelling == "shortest-fastest") return CostKind::shortest_fastest_path;
    if (spelling == "shortest-restless") return CostKind::shortest_restless_walk;
    if (spelling == "prefix-foremost") return CostKind::strict_prefix_foremost_path;
    return std::nullopt;
}

CostLabel identity_label(const CostModel&) { return {0, 0}; }

std::optional<CostLabel> extend(const CostModel& model, CostLabel label, VertexAppearance at,
                                const TimeArc& arc) {
    assert(arc.tail == at.vertex);
    assert(model.strict ? arc.time > at.time : arc.time >= at.time);
    switch (model.kind) {
        case CostKind::foremost_walk:
            return CostLabel{arc.time, 0};
        case CostKind::shortest_path:
            return CostLabel{label.primary + 1, 0};
        case CostKind::shortest_restless_walk:
            if (at.time != 0 && arc.time - at.time > model.delta) return std::nullopt;
            return CostLabel{label.primary + 1, 0};
        case CostKind::shortest_fastest_path:
            if (at.time == 0) return CostLabel{0, 1};  // duration starts with the first arc
            return CostLabel{label.primary + (arc.time - at.time), label.secondary + 1};
        case CostKind::strict_prefix_foremost_path: {
            assert(model.earliest && "model not prepared");
            if (arc.time != (*model.earliest)[static_cast<size_t>(arc.head)]) return std::nullopt;
            return CostLabel{arc.time, 0};
        }
    }
    return std::nullopt;
}

Ordering compare(const CostModel& model, CostLabel a, CostLabel b) {
    if (model.kind == CostKind::shortest_fastest_path) {
        if (a.primary != b.primary) return a.primary < b.primary ? Ordering::less : Ordering::greater;
        if (a.secondary != b.secondary)
            return a.secondary < b.secondary ? Ordering::less : Ordering::greater;
        return Ordering::equal;
    }
    if (a.primary != b.primary) return a.primary < b.primary ? Ordering::less : Ordering::greater;
    return Ordering::equal;
}

CostModel prepare(const CostModel& model, const TemporalGraph& graph, int source) {
    if (!model.needs_prepare()) return model;
    auto earliest = std::make_shared<std::vector<int32_t>>(graph.vertex_count(), -1);
    (*earliest)[static_cast<size_t>(source)] = 0;
    // Arcs are sorted by time, so one ascending pass settles every vertex:
    // an arc at time t can only be boarded from arrivals strictly before t,
    // and those are final by the time t is reached.
    for (const TimeArc& a : graph.arcs()) {
        int32_t ea_tail = (*earliest)[static_cast<size_t>(a.tail)];
        if (ea_tail < 0 || ea_tail >= a.time) continue;
        int32_t& ea_head = (*earliest)[static_cast<size_t>(a.head)];
        if (ea_head < 0 || a.time < ea_head) ea_head = a.time;
    }
    CostModel prepared = model;
    prepared.earliest = std::move(earliest);
    prepared.prepared_source = source;
    return prepared;
}

std::string label_to_string(const CostModel& model, CostLabel label) {
    switch (model.kind) {
        case CostKind::foremost_walk:
        case CostKind::strict_prefix_foremost_path:
            return "arrival " + std::to_string(label.primary);
        case CostKind::shortest_path:
        case CostKind::shortest_restless_walk:
            return "length " + std::to_string(label.primary);
        case CostKind::shortest_fastest_path:
            return "duration " + std::to_string(label.primary) + ", length " +
                   std::to_string(label.secondary);
    }
    return "?";
}

}  // namespace tempo
