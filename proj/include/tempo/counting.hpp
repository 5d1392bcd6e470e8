#pragma once

#include <vector>

#include "tempo/bignum.hpp"
#include "tempo/predecessor.hpp"

namespace tempo {

// Count of optimal walks; infinite is an explicit algebraic value, never a
// sentinel number.
struct WalkCount {
    bool infinite = false;
    BigNat value;
};

struct WalkCounts {
    int source = -1;
    std::vector<uint8_t> node_present;       // mirrors the predecessor graph
    std::vector<WalkCount> per_appearance;   // by appearance id, valid where present
    WalkCount start_count;                   // the start node (s,0); always exactly 1
    std::vector<WalkCount> per_vertex;       // by vertex; value 0 = no optimal walk
    std::vector<uint8_t> vertex_reachable;   // per-vertex count > 0 (or infinite)
    bool any_infinite = false;
    // Finite nodes of the predecessor graph in topological order, the start
    // node first. Covers every node iff !any_infinite.
    std::vector<int32_t> topo;
};

// Partition of the predecessor graph's nodes (start node included) into
// strongly connected components.
std::vector<std::vector<int32_t>> strongly_connected_components(const PredecessorGraph& pg);

// Whether the induced optimal walk set is finite, i.e. every SCC is trivial.
bool is_finite(const PredecessorGraph& pg);

WalkCounts count_walks(const PredecessorGraph& pg);

}  // namespace tempo
