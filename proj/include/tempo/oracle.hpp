#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "tempo/betweenness.hpp"
#include "tempo/cost.hpp"
#include "tempo/graph.hpp"

namespace tempo {

// A temporal walk as an explicit transition sequence. Desk-scale ground
// truth; clarity over speed throughout.
struct Walk {
    std::vector<TimeArc> arcs;

    int length() const { return static_cast<int>(arcs.size()); }
    VertexAppearance end_appearance() const { return {arcs.back().head, arcs.back().time}; }
    int start_vertex() const { return arcs.front().tail; }
    // appearances entered by the transitions, in walk order
    std::vector<VertexAppearance> visited() const;
    bool visits(VertexAppearance a) const;

    // nullopt unless the endpoints chain and the junction times are
    // non-decreasing
    static std::optional<Walk> concat(const Walk& a, const Walk& b);
    // splits use the first occurrence of the appearance, so
    // concat(prefix_to(a), suffix_from(a)) == the original walk
    Walk prefix_to(VertexAppearance a) const;
    Walk suffix_from(VertexAppearance a) const;
    // first occurrence of `from` to last occurrence of `to`
    Walk subwalk(VertexAppearance from, VertexAppearance to) const;

    bool operator==(const Walk&) const = default;
};

// Whole-walk cost by folding the model's extension step from the start of
// the walk; nullopt when any step is inadmissible (including time order).
std::optional<CostLabel> fold_cost(const CostModel& model, const Walk& walk, int source);

struct OracleCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exhaustive per-source enumeration of every repetition-free admissible walk,
// with optimality classification and the infinite-set witness.
class OracleWalks {
public:
    OracleWalks(const TemporalGraph& graph, int source, const CostModel& model, int cap = 40);

    const TemporalGraph& graph() const { return *graph_; }
    const CostModel& model() const { return model_; }
    int source() const { return source_; }
    bool infinite() const { return infinite_; }

    int walk_count() const { return static_cast<int>(recs_.size()); }
    Walk walk(int i) const;
    CostLabel walk_label(int i) const { return recs_[static_cast<size_t>(i)].label; }
    int walk_end_app(int i) const { return recs_[static_cast<size_t>(i)].end_app; }
    bool walk_vertex_optimal(int i) const { return recs_[static_cast<size_t>(i)].vertex_optimal; }
    bool walk_appearance_optimal(int i) const;
    std::vector<int> optimal_walks_to_vertex(int v) const;

    // appearance tables, by graph appearance id
    bool labelled(int app) const { return labelled_[static_cast<size_t>(app)]; }
    CostLabel appearance_best(int app) const { return best_[static_cast<size_t>(app)]; }
    bool on_optimal_walk(int app) const { return on_optimal_walk_[static_cast<size_t>(app)]; }
    bool appearance_count_infinite(int app) const {
        return count_infinite_[static_cast<size_t>(app)];
    }
    uint64_t appearance_count(int app) const { return opt_count_[static_cast<size_t>(app)]; }

    // vertex tables
    bool vertex_reachable(int v) const { return vertex_reachable_[static_cast<size_t>(v)]; }
    CostLabel vertex_best(int v) const { return vertex_best_[static_cast<size_t>(v)]; }
    uint64_t vertex_count(int v) const { return vertex_count_[static_cast<size_t>(v)]; }
    bool vertex_count_infinite(int v) const {
        return vertex_count_infinite_[static_cast<size_t>(v)];
    }

    // predecessor sets over optimal walks; meaningful only when finite.
    // Node ids are appearance ids, the start node is appearance_count().
    const std::vector<std::vector<int32_t>>& pred_sets() const { return pred_sets_; }

private:
    struct Rec {
        TimeArc arc;
        int32_t parent;  // -1 for single-transition walks
        int32_t end_app;
        CostLabel label;
        uint64_t mask;           // visited appearances
        uint8_t prefix_optimal;  // every prefix achieves its end appearance's optimum
        uint8_t vertex_optimal;  // achieves the end vertex's optimum
    };
    struct PumpCandidate {
        int32_t walk;
        int32_t head_app;
        CostLabel extended;
    };

    const TemporalGraph* graph_;
    CostModel model_;
    int source_;
    bool infinite_ = false;

    std::vector<Rec> recs_;
    std::vector<PumpCandidate> candidates_;
    std::vector<uint8_t> labelled_;
    std::vector<CostLabel> best_;
    std::vector<uint64_t> opt_count_;
    std::vector<uint8_t> count_infinite_;
    std::vector<uint8_t> on_optimal_walk_;
    std::vector<uint8_t> pumpable_;
    std::vector<uint8_t> vertex_reachable_;
    std::vector<CostLabel> vertex_best_;
    std::vector<uint64_t> vertex_count_;
    std::vector<uint8_t> vertex_count_infinite_;
    std::vector<std::vector<int32_t>> pred_sets_;

    void enumerate(int vertex, int time, CostLabel label, uint64_t mask, int32_t parent);
    void classify();
    std::vector<int32_t> appearance_chain(int walk) const;
};

// Per-source dependency ground truth under the same counting conventions as
// the engine: the source's later re-entries never count, the start node
// accounts for the source itself.
struct OracleDependencies {
    int source = -1;
    std::vector<BigRat> dep_by_app;  // zero at source re-entries
    BigRat dep_start;
    std::vector<BigRat> vertex_cumulative;
    std::vector<BigRat> vertex_contribution;  // betweenness share, zero for the source
    std::vector<uint8_t> reach;
    // flow per predecessor arc ((from,to) node ids), aggregated over targets
    std::vector<std::pair<std::pair<int32_t, int32_t>, BigRat>> arc_flows;
};

OracleDependencies oracle_dependencies(const OracleWalks& walks);

// Direct evaluation of the betweenness definitions over enumerated optimal
// walk sets. Throws InfiniteWalkError naming the first infinite source.
ExactBetweenness oracle_betweenness(const TemporalGraph& graph, const CostModel& model,
                                    int cap = 40);

}  // namespace tempo
