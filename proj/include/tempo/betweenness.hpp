#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tempo/bignum.hpp"
#include "tempo/counting.hpp"
#include "tempo/predecessor.hpp"

namespace tempo {

enum class Mode { exact, fast };

struct InfiniteWalkError : std::runtime_error {
    int source;
    InfiniteWalkError(int source_vertex, const std::string& source_name)
        : std::runtime_error("infinite optimal walk set; betweenness undefined for this cost "
                             "model on this graph (source '" +
                             source_name + "')"),
          source(source_vertex) {}
};

// One source's share of the accumulation. dep_by_app holds the cumulative
// dependency of the source on each appearance node; the value reported for
// a re-entered source appearance (source, t>=1) is zero by convention, the
// raw flow through it stays internal to the recursion.
template <typename V>
struct SourceAccumulation {
    int source = -1;
    std::vector<V> dep_by_app;          // raw flow per appearance id
    V dep_start;                        // dependency on the start node (s,0)
    std::vector<V> vertex_cumulative;   // per vertex: sum of reported appearance dependencies
    std::vector<V> vertex_contribution; // per vertex: betweenness share of this source
    std::vector<uint8_t> reach;         // vertices with at least one optimal walk from s
    int reach_count = 0;
    // test hook: flow over each predecessor-graph arc ((from,to) node ids)
    std::vector<std::pair<std::pair<int32_t, int32_t>, V>> arc_flows;

    V reported_dep(const PredecessorGraph& pg, int app) const {
        if (pg.graph->appearance_vertex(app) == source) return V{};
        return dep_by_app[static_cast<size_t>(app)];
    }
};

template <typename V>
SourceAccumulation<V> accumulate_source(const TemporalGraph& graph, const PredecessorGraph& pg,
                                        const WalkCounts& counts, bool record_arc_flows = false);

extern template SourceAccumulation<BigRat> accumulate_source<BigRat>(const TemporalGraph&,
                                                                     const PredecessorGraph&,
                                                                     const WalkCounts&, bool);
extern template SourceAccumulation<double> accumulate_source<double>(const TemporalGraph&,
                                                                     const PredecessorGraph&,
                                                                     const WalkCounts&, bool);

template <typename V>
struct BetweennessValues {
    Mode mode = Mode::exact;
    CostModel model;
    std::vector<V> betweenness;
    std::vector<V> total;
    // reachability bookkeeping, enough to evaluate the total-betweenness
    // relation B(v) = totB(v) - sum_w([s_vw>0] + [s_wv>0]) + [s_vv>0]
    std::vector<int32_t> out_reach;     // |{w : s_vw > 0}|, diagonal included
    std::vector<int32_t> in_reach;      // |{w : s_wv > 0}|, diagonal included
    std::vector<uint8_t> closed_walk;   // s_vv > 0
};

using ExactBetweenness = BetweennessValues<BigRat>;
using FastBetweenness = BetweennessValues<double>;

// threads == 0 means one worker per hardware thread. Results are combined
// in ascending source order, so output is identical for any thread count.
ExactBetweenness betweenness_all_exact(const TemporalGraph& graph, const CostModel& model,
                                       int threads = 0);
FastBetweenness betweenness_all_fast(const TemporalGraph& graph, const CostModel& model,
                                     int threads = 0);

}  // namespace tempo
