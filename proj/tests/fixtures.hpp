#pragma once

#include "tempo/cost.hpp"
#include "tempo/graph.hpp"

namespace fixtures {

// 9 vertices, 13 time-arcs; the shared example used across the suite
inline tempo::TemporalGraph running_example() {
    return tempo::TemporalGraph::from_triples({
        {"s", "a", 1}, {"s", "c", 1}, {"s", "d", 2}, {"a", "b", 3}, {"b", "v", 5},
        {"c", "e", 4}, {"d", "v", 5}, {"v", "f", 6}, {"v", "f", 9}, {"f", "e", 7},
        {"e", "v", 8}, {"f", "z", 10}, {"e", "z", 11},
    });
}

inline tempo::TemporalGraph diamond() {
    return tempo::TemporalGraph::from_triples(
        {{"s", "a", 1}, {"s", "b", 1}, {"a", "z", 2}, {"b", "z", 2}});
}

// forced same-timestep 2-cycle under non-strict semantics
inline tempo::TemporalGraph cycle_fixture() {
    return tempo::TemporalGraph::from_triples({{"s", "a", 1}, {"a", "b", 1}, {"b", "a", 1}});
}

inline tempo::TemporalGraph single_arc() {
    return tempo::TemporalGraph::from_triples({{"s", "z", 3}});
}

// smallest graph with a closed optimal walk
inline tempo::TemporalGraph closed_walk_pair() {
    return tempo::TemporalGraph::from_triples({{"s", "a", 1}, {"a", "s", 2}});
}

// an optimal s-z-walk re-enters its own source
inline tempo::TemporalGraph source_revisit() {
    return tempo::TemporalGraph::from_triples({{"s", "a", 1}, {"a", "s", 2}, {"s", "z", 5}});
}

// dead-end same-time cycle that no optimal walk uses
inline tempo::TemporalGraph dead_end_cycle() {
    return tempo::TemporalGraph::from_triples(
        {{"s", "a", 1}, {"s", "b", 1}, {"a", "b", 2}, {"b", "a", 2}});
}

// the only infinite family here is the closed-walk one: the cycle at time 3
// feeds an optimal s-s-walk but no other vertex's optimum
inline tempo::TemporalGraph closed_only_cycle() {
    return tempo::TemporalGraph::from_triples(
        {{"s", "x", 1}, {"s", "y", 1}, {"x", "y", 3}, {"y", "x", 3}, {"x", "s", 3}});
}

inline std::vector<tempo::CostModel> five_models() {
    return {
        tempo::CostModel::foremost(),
        tempo::CostModel::shortest(),
        tempo::CostModel::shortest_fastest(),
        tempo::CostModel::shortest_restless(2),
        tempo::CostModel::prefix_foremost(),
    };
}

}  // namespace fixtures
