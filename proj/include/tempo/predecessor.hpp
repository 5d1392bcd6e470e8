#pragma once

#include <iosfwd>
#include <vector>

#include "tempo/cost.hpp"
#include "tempo/graph.hpp"

namespace tempo {

// Per-source digraph over vertex appearances. Nodes are the appearances that
// lie on some optimal walk from the source, plus the start node (s, 0); an
// arc (v,t) -> (w,t') records that some optimal walk enters w at t' directly
// from v entered at t. Appearance nodes are identified by the owning graph's
// appearance ids; the start node has id start_id() == appearance_count().
struct PredecessorGraph {
    const TemporalGraph* graph = nullptr;
    CostModel model;
    int source = -1;

    std::vector<uint8_t> present;            // per appearance id
    std::vector<CostLabel> value;            // c* per appearance id, valid where present
    std::vector<std::vector<int32_t>> preds; // per appearance id, entries are node ids
    std::vector<std::vector<int32_t>> succs; // per node id (size A+1)
    std::vector<int32_t> nodes;              // present appearance ids, ascending

    // per-vertex optima over the present appearances
    std::vector<uint8_t> vertex_reachable;    // some (v, t>=1) node exists
    std::vector<CostLabel> vertex_best;       // valid where reachable
    std::vector<uint8_t> app_vertex_optimal;  // appearance achieves its vertex's optimum

    int passes_used = 0;  // relaxation passes that changed something

    int start_id() const { return graph->appearance_count(); }
    int node_count() const { return static_cast<int>(nodes.size()) + 1; }
    bool is_node(int app) const { return present[static_cast<size_t>(app)]; }
    VertexAppearance node_appearance(int id) const;

    // DOT dump: node ids "v@t", one edge per predecessor relation, node
    // attribute `cost` with the rendered label.
    void to_dot(std::ostream& out) const;
};

PredecessorGraph build_predecessor_graph(const TemporalGraph& graph, int source,
                                         const CostModel& prepared_model);

}  // namespace tempo
