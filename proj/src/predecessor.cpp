#include "tempo/predecessor.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>

namespace tempo {

VertexAppearance PredecessorGraph::node_appearance(int id) const {
    if (id == start_id()) return {source, 0};
    return {graph->appearance_vertex(id), graph->appearance_time(id)};
}

namespace {

// Label-correcting state of one source run. Appearances materialize lazily:
// only (head, time) pairs of actual arcs can ever carry a label.
struct BellmanFordState {
    const TemporalGraph& graph;
    const CostModel& model;
    int source;
    int start;

    std::vector<uint8_t> has;
    std::vector<CostLabel> best;
    std::vector<std::vector<int32_t>> preds;
    bool changed = false;

    BellmanFordState(const TemporalGraph& g, const CostModel& m, int s)
        : graph(g), model(m), source(s), start(g.appearance_count()),
          has(static_cast<size_t>(g.appearance_count()), 0),
          best(static_cast<size_t>(g.appearance_count())),
          preds(static_cast<size_t>(g.appearance_count())) {}

    void relax(int from_node, CostLabel from_label, VertexAppearance at, const TimeArc& arc,
               int head_app) {
        auto extended = extend(model, from_label, at, arc);
        if (!extended) return;
        auto& tie_set = preds[static_cast<size_t>(head_app)];
        if (!has[static_cast<size_t>(head_app)]) {
            has[static_cast<size_t>(head_app)] = 1;
            best[static_cast<size_t>(head_app)] = *extended;
            tie_set.assign(1, from_node);
            changed = true;
            return;
        }
        switch (compare(model, *extended, best[static_cast<size_t>(head_app)])) {
            case Ordering::less:
                best[static_cast<size_t>(head_app)] = *extended;
                tie_set.assign(1, from_node);
                changed = true;
                break;
            case Ordering::equal:
                if (std::find(tie_set.begin(), tie_set.end(), from_node) == tie_set.end()) {
                    tie_set.push_back(from_node);
                    changed = true;
                }
                break;
            case Ordering::greater:
                break;
        }
    }

    // One full sweep over all (arc, tail appearance) pairs.
    bool pass() {
        changed = false;
        CostLabel start_label = identity_label(model);
        const auto& arcs = graph.arcs();
        for (size_t i = 0; i < arcs.size(); ++i) {
            const TimeArc& arc = arcs[i];
            int head_app = graph.arc_head_app(static_cast<int>(i));
            if (arc.tail == source)
                relax(start, start_label, {source, 0}, arc, head_app);
            int lo = graph.app_begin(arc.tail);
            int hi = graph.app_end(arc.tail);
            // restless extensions further than delta back are always invalid
            if (model.kind == CostKind::shortest_restless_walk) {
                while (lo < hi && graph.appearance_time(lo) < arc.time - model.delta) ++lo;
            }
            for (int app = lo; app < hi; ++app) {
                int t = graph.appearance_time(app);
                if (model.strict ? t >= arc.time : t > arc.time) break;
                if (!has[static_cast<size_t>(app)]) continue;
                relax(app, best[static_cast<size_t>(app)], {arc.tail, t}, arc, head_app);
            }
        }
        return changed;
    }
};

}  // namespace

PredecessorGraph build_predecessor_graph(const TemporalGraph& graph, int source,
                                         const CostModel& model) {
    assert(model.prepared_for(source));
    BellmanFordState bf(graph, model, source);

    // n*T passes always reach the fixed point; in practice the first
    // no-change pass ends the loop much earlier.
    long cap = static_cast<long>(graph.vertex_count()) * graph.lifetime() + 2;
    int passes = 0;
    while (bf.pass()) {
        ++passes;
        if (passes > cap) {
            assert(false && "relaxation failed to reach a fixed point");
            break;
        }
    }

    PredecessorGraph pg;
    pg.graph = &graph;
    pg.model = model;
    pg.source = source;
    pg.passes_used = passes;
    int appearance_count = graph.appearance_count();
    pg.value = std::move(bf.best);

    // Vertex optima over every labelled appearance. Appearances that do not
    // lead to any vertex optimum lie on no optimal walk and are dropped.
    int n = graph.vertex_count();
    pg.vertex_reachable.assign(static_cast<size_t>(n), 0);
    pg.vertex_best.assign(static_cast<size_t>(n), CostLabel{});
    for (int app = 0; app < appearance_count; ++app) {
        if (!bf.has[static_cast<size_t>(app)]) continue;
        int v = graph.appearance_vertex(app);
        if (!pg.vertex_reachable[static_cast<size_t>(v)] ||
            compare(model, pg.value[static_cast<size_t>(app)],
                    pg.vertex_best[static_cast<size_t>(v)]) == Ordering::less) {
            pg.vertex_reachable[static_cast<size_t>(v)] = 1;
            pg.vertex_best[static_cast<size_t>(v)] = pg.value[static_cast<size_t>(app)];
        }
    }
    pg.app_vertex_optimal.assign(static_cast<size_t>(appearance_count), 0);
    pg.present.assign(static_cast<size_t>(appearance_count), 0);
    std::vector<int32_t> stack;
    for (int app = 0; app < appearance_count; ++app) {
        if (!bf.has[static_cast<size_t>(app)]) continue;
        int v = graph.appearance_vertex(app);
        if (compare(model, pg.value[static_cast<size_t>(app)],
                    pg.vertex_best[static_cast<size_t>(v)]) == Ordering::equal) {
            pg.app_vertex_optimal[static_cast<size_t>(app)] = 1;
            if (!pg.present[static_cast<size_t>(app)]) {
                pg.present[static_cast<size_t>(app)] = 1;
                stack.push_back(app);
            }
        }
    }
    // Walk the predecessor relation backwards from the vertex optima; every
    // node so reached lies on an optimal walk.
    while (!stack.empty()) {
        int app = stack.back();
        stack.pop_back();
        for (int32_t p : bf.preds[static_cast<size_t>(app)]) {
            if (p == bf.start || pg.present[static_cast<size_t>(p)]) continue;
            pg.present[static_cast<size_t>(p)] = 1;
            stack.push_back(p);
        }
    }

    pg.preds.assign(static_cast<size_t>(appearance_count), {});
    pg.succs.assign(static_cast<size_t>(appearance_count) + 1, {});
    for (int app = 0; app < appearance_count; ++app) {
        if (!pg.present[static_cast<size_t>(app)]) continue;
        pg.nodes.push_back(app);
        auto& kept = pg.preds[static_cast<size_t>(app)];
        kept = std::move(bf.preds[static_cast<size_t>(app)]);
        std::sort(kept.begin(), kept.end());
        for (int32_t p : kept) pg.succs[static_cast<size_t>(p)].push_back(app);
    }
    return pg;
}

void PredecessorGraph::to_dot(std::ostream& out) const {
    out << "digraph predecessors {\n";
    auto node_name = [&](int id) {
        VertexAppearance a = node_appearance(id);
        return graph->vertex_name(a.vertex) + "@" + std::to_string(a.time);
    };
    out << "  \"" << node_name(start_id()) << "\" [cost=\""
        << label_to_string(model, identity_label(model)) << "\"];\n";
    for (int32_t app : nodes) {
        out << "  \"" << node_name(app) << "\" [cost=\""
            << label_to_string(model, value[static_cast<size_t>(app)]) << "\"];\n";
    }
    for (int32_t app : nodes) {
        for (int32_t p : preds[static_cast<size_t>(app)]) {
            out << "  \"" << node_name(p) << "\" -> \"" << node_name(app) << "\";\n";
        }
    }
    out << "}\n";
}

}  // namespace tempo
