#include "tempo/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace tempo {

std::vector<VertexAppearance> Walk::visited() const {
    std::vector<VertexAppearance> out;
    out.reserve(arcs.size());
    for (const TimeArc& a : arcs) out.push_back({a.head, a.time});
    return out;
}

bool Walk::visits(VertexAppearance x) const {
    for (const TimeArc& a : arcs)
        if (a.head == x.vertex && a.time == x.time) return true;
    return false;
}

std::optional<Walk> Walk::concat(const Walk& a, const Walk& b) {
    if (a.arcs.empty()) return b;
    if (b.arcs.empty()) return a;
    if (a.arcs.back().head != b.arcs.front().tail) return std::nullopt;
    if (b.arcs.front().time < a.arcs.back().time) return std::nullopt;
    Walk r = a;
    r.arcs.insert(r.arcs.end(), b.arcs.begin(), b.arcs.end());
    return r;
}

Walk Walk::prefix_to(VertexAppearance x) const {
    Walk r;
    for (const TimeArc& a : arcs) {
        r.arcs.push_back(a);
        if (a.head == x.vertex && a.time == x.time) return r;
    }
    assert(false && "appearance not on walk");
    return r;
}

Walk Walk::suffix_from(VertexAppearance x) const {
    Walk r;
    bool seen = false;
    for (const TimeArc& a : arcs) {
        if (seen) r.arcs.push_back(a);
        if (!seen && a.head == x.vertex && a.time == x.time) seen = true;
    }
    assert(seen && "appearance not on walk");
    return r;
}

Walk Walk::subwalk(VertexAppearance from, VertexAppearance to) const {
    Walk r;
    bool in = false;
    size_t last_end = 0;
    for (size_t i = 0; i < arcs.size(); ++i) {
        const TimeArc& a = arcs[i];
        if (in) r.arcs.push_back(a);
        if (!in && a.head == from.vertex && a.time == from.time) in = true;
        if (a.head == to.vertex && a.time == to.time) last_end = r.arcs.size();
    }
    r.arcs.resize(last_end);
    return r;
}

std::optional<CostLabel> fold_cost(const CostModel& model, const Walk& walk, int source) {
    CostLabel label = identity_label(model);
    VertexAppearance at{source, 0};
    for (const TimeArc& a : walk.arcs) {
        if (a.tail != at.vertex) return std::nullopt;
        if (model.strict ? a.time <= at.time : a.time < at.time) return std::nullopt;
        auto next = extend(model, label, at, a);
        if (!next) return std::nullopt;
        label = *next;
        at = {a.head, a.time};
    }
    return label;
}

OracleWalks::OracleWalks(const TemporalGraph& graph, int source, const CostModel& model, int cap)
    : graph_(&graph), source_(source) {
    int appearance_count = graph.appearance_count();
    if (cap > 64) cap = 64;
    if (appearance_count > cap)
        throw OracleCapExceeded("graph has " + std::to_string(appearance_count) +
                                " distinct head appearances, above the oracle cap of " +
                                std::to_string(cap));
    model_ = prepare(model, graph, source);
    labelled_.assign(static_cast<size_t>(appearance_count), 0);
    best_.assign(static_cast<size_t>(appearance_count), CostLabel{});
    enumerate(source, 0, identity_label(model_), 0, -1);
    classify();
}

void OracleWalks::enumerate(int vertex, int time, CostLabel label, uint64_t mask, int32_t parent) {
    for (int32_t arc_idx : graph_->arcs_from(vertex)) {
        const TimeArc& arc = graph_->arcs()[static_cast<size_t>(arc_idx)];
        if (model_.strict ? arc.time <= time : arc.time < time) continue;
        auto extended = extend(model_, label, {vertex, time}, arc);
        if (!extended) continue;
        int head_app = graph_->arc_head_app(arc_idx);
        uint64_t bit = uint64_t{1} << head_app;
        if (mask & bit) {
            // one-step return to an already visited appearance: a candidate
            // witness for an infinite optimal walk set
            if (parent >= 0)
                candidates_.push_back({parent, static_cast<int32_t>(head_app), *extended});
            continue;
        }
        int32_t self = static_cast<int32_t>(recs_.size());
        recs_.push_back({arc, parent, static_cast<int32_t>(head_app), *extended, mask | bit, 0, 0});
        enumerate(arc.head, arc.time, *extended, mask | bit, self);
    }
}

std::vector<int32_t> OracleWalks::appearance_chain(int walk) const {
    std::vector<int32_t> chain;
    for (int32_t i = static_cast<int32_t>(walk); i >= 0; i = recs_[static_cast<size_t>(i)].parent)
        chain.push_back(recs_[static_cast<size_t>(i)].end_app);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

Walk OracleWalks::walk(int i) const {
    Walk w;
    for (int32_t j = static_cast<int32_t>(i); j >= 0; j = recs_[static_cast<size_t>(j)].parent)
        w.arcs.push_back(recs_[static_cast<size_t>(j)].arc);
    std::reverse(w.arcs.begin(), w.arcs.end());
    return w;
}

bool OracleWalks::walk_appearance_optimal(int i) const {
    const Rec& r = recs_[static_cast<size_t>(i)];
    return compare(model_, r.label, best_[static_cast<size_t>(r.end_app)]) == Ordering::equal;
}

std::vector<int> OracleWalks::optimal_walks_to_vertex(int v) const {
    std::vector<int> out;
    for (size_t i = 0; i < recs_.size(); ++i) {
        if (recs_[i].vertex_optimal &&
            graph_->appearance_vertex(recs_[i].end_app) == v)
            out.push_back(static_cast<int>(i));
    }
    return out;
}

void OracleWalks::classify() {
    int appearance_count = graph_->appearance_count();
    int n = graph_->vertex_count();

    for (const Rec& r : recs_) {
        size_t e = static_cast<size_t>(r.end_app);
        if (!labelled_[e] || compare(model_, r.label, best_[e]) == Ordering::less) {
            labelled_[e] = 1;
            best_[e] = r.label;
        }
    }
    opt_count_.assign(static_cast<size_t>(appearance_count), 0);
    for (const Rec& r : recs_) {
        if (compare(model_, r.label, best_[static_cast<size_t>(r.end_app)]) == Ordering::equal)
            ++opt_count_[static_cast<size_t>(r.end_app)];
    }

    // a walk is prefix-optimal when every proper prefix already achieves the
    // optimum of its end appearance; parents precede children in recs_
    for (size_t i = 0; i < recs_.size(); ++i) {
        Rec& r = recs_[i];
        bool parent_ok = r.parent < 0 || recs_[static_cast<size_t>(r.parent)].prefix_optimal;
        r.prefix_optimal =
            parent_ok &&
            compare(model_, r.label, best_[static_cast<size_t>(r.end_app)]) == Ordering::equal;
    }

    vertex_reachable_.assign(static_cast<size_t>(n), 0);
    vertex_best_.assign(static_cast<size_t>(n), CostLabel{});
    for (int app = 0; app < appearance_count; ++app) {
        if (!labelled_[static_cast<size_t>(app)]) continue;
        int v = graph_->appearance_vertex(app);
        if (!vertex_reachable_[static_cast<size_t>(v)] ||
            compare(model_, best_[static_cast<size_t>(app)],
                    vertex_best_[static_cast<size_t>(v)]) == Ordering::less) {
            vertex_reachable_[static_cast<size_t>(v)] = 1;
            vertex_best_[static_cast<size_t>(v)] = best_[static_cast<size_t>(app)];
        }
    }
    on_optimal_walk_.assign(static_cast<size_t>(appearance_count), 0);
    for (Rec& r : recs_) {
        int v = graph_->appearance_vertex(r.end_app);
        r.vertex_optimal = vertex_reachable_[static_cast<size_t>(v)] &&
                           compare(model_, r.label, vertex_best_[static_cast<size_t>(v)]) ==
                               Ordering::equal;
        if (r.vertex_optimal) {
            for (int app = 0; app < appearance_count; ++app)
                if (r.mask & (uint64_t{1} << app)) on_optimal_walk_[static_cast<size_t>(app)] = 1;
        }
    }

    // pump witnesses: a prefix-optimal repetition-free walk that can re-enter
    // one of its own appearances at that appearance's optimal value
    pumpable_.assign(static_cast<size_t>(appearance_count), 0);
    for (const PumpCandidate& c : candidates_) {
        if (!recs_[static_cast<size_t>(c.walk)].prefix_optimal) continue;
        if (compare(model_, c.extended, best_[static_cast<size_t>(c.head_app)]) != Ordering::equal)
            continue;
        pumpable_[static_cast<size_t>(c.head_app)] = 1;
    }
    uint64_t pump_mask = 0;
    for (int app = 0; app < appearance_count; ++app)
        if (pumpable_[static_cast<size_t>(app)]) pump_mask |= uint64_t{1} << app;

    infinite_ = false;
    for (int app = 0; app < appearance_count; ++app)
        if (pumpable_[static_cast<size_t>(app)] && on_optimal_walk_[static_cast<size_t>(app)])
            infinite_ = true;

    count_infinite_.assign(static_cast<size_t>(appearance_count), 0);
    for (const Rec& r : recs_) {
        if ((r.mask & pump_mask) == 0) continue;
        if (compare(model_, r.label, best_[static_cast<size_t>(r.end_app)]) == Ordering::equal)
            count_infinite_[static_cast<size_t>(r.end_app)] = 1;
    }

    vertex_count_.assign(static_cast<size_t>(n), 0);
    vertex_count_infinite_.assign(static_cast<size_t>(n), 0);
    for (int app = 0; app < appearance_count; ++app) {
        if (!labelled_[static_cast<size_t>(app)]) continue;
        int v = graph_->appearance_vertex(app);
        if (compare(model_, best_[static_cast<size_t>(app)],
                    vertex_best_[static_cast<size_t>(v)]) != Ordering::equal)
            continue;
        if (count_infinite_[static_cast<size_t>(app)])
            vertex_count_infinite_[static_cast<size_t>(v)] = 1;
        vertex_count_[static_cast<size_t>(v)] += opt_count_[static_cast<size_t>(app)];
    }
    for (int v = 0; v < n; ++v)
        if (vertex_count_infinite_[static_cast<size_t>(v)]) vertex_count_[static_cast<size_t>(v)] = 0;

    // predecessor relation realized by the optimal walks
    pred_sets_.assign(static_cast<size_t>(appearance_count), {});
    if (!infinite_) {
        int32_t start = static_cast<int32_t>(appearance_count);
        for (size_t i = 0; i < recs_.size(); ++i) {
            if (!recs_[i].vertex_optimal) continue;
            std::vector<int32_t> chain = appearance_chain(static_cast<int>(i));
            int32_t prev = start;
            for (int32_t app : chain) {
                auto& set = pred_sets_[static_cast<size_t>(app)];
                if (std::find(set.begin(), set.end(), prev) == set.end()) set.push_back(prev);
                prev = app;
            }
        }
        for (auto& set : pred_sets_) std::sort(set.begin(), set.end());
    }
}

OracleDependencies oracle_dependencies(const OracleWalks& walks) {
    const TemporalGraph& g = walks.graph();
    int n = g.vertex_count();
    int appearance_count = g.appearance_count();
    int source = walks.source();
    int32_t start = static_cast<int32_t>(appearance_count);

    OracleDependencies dep;
    dep.source = source;
    dep.dep_by_app.assign(static_cast<size_t>(appearance_count), BigRat());
    dep.vertex_cumulative.assign(static_cast<size_t>(n), BigRat());
    dep.vertex_contribution.assign(static_cast<size_t>(n), BigRat());
    dep.reach.assign(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        dep.reach[static_cast<size_t>(v)] = walks.vertex_count(v) > 0 ? 1 : 0;

    // through[z][app]: optimal s-z-walks entering app; arc_through[z][(p,x)]:
    // optimal s-z-walks entering x directly from node p
    std::vector<std::vector<uint64_t>> through(
        static_cast<size_t>(n), std::vector<uint64_t>(static_cast<size_t>(appearance_count), 0));
    std::map<std::pair<int32_t, int32_t>, std::vector<uint64_t>> arc_through;
    for (int i = 0; i < walks.walk_count(); ++i) {
        if (!walks.walk_vertex_optimal(i)) continue;
        Walk w = walks.walk(i);
        int z = w.end_appearance().vertex;
        int32_t prev = start;
        for (const TimeArc& a : w.arcs) {
            int app = g.appearance_id(a.head, a.time);
            ++through[static_cast<size_t>(z)][static_cast<size_t>(app)];
            auto& counts = arc_through[{prev, static_cast<int32_t>(app)}];
            if (counts.empty()) counts.assign(static_cast<size_t>(n), 0);
            ++counts[static_cast<size_t>(z)];
            prev = static_cast<int32_t>(app);
        }
    }

    for (int v = 0; v < n; ++v) {
        if (v == source) continue;
        for (int app = g.app_begin(v); app < g.app_end(v); ++app) {
            BigRat total;
            for (int z = 0; z < n; ++z) {
                uint64_t c = through[static_cast<size_t>(z)][static_cast<size_t>(app)];
                if (c == 0) continue;
                total += BigRat::fraction(BigNat(c), BigNat(walks.vertex_count(z)));
            }
            dep.dep_by_app[static_cast<size_t>(app)] = total;
            dep.vertex_cumulative[static_cast<size_t>(v)] += total;
        }
    }
    int reach_count = 0;
    for (int v = 0; v < n; ++v) reach_count += dep.reach[static_cast<size_t>(v)];
    dep.dep_start = BigRat(reach_count);
    dep.vertex_cumulative[static_cast<size_t>(source)] = dep.dep_start;
    for (int v = 0; v < n; ++v) {
        if (v == source) continue;
        dep.vertex_contribution[static_cast<size_t>(v)] =
            dep.vertex_cumulative[static_cast<size_t>(v)];
        if (dep.reach[static_cast<size_t>(v)])
            dep.vertex_contribution[static_cast<size_t>(v)] -= BigRat(1);
    }

    for (const auto& [key, counts] : arc_through) {
        BigRat flow;
        for (int z = 0; z < n; ++z) {
            if (counts[static_cast<size_t>(z)] == 0) continue;
            flow += BigRat::fraction(BigNat(counts[static_cast<size_t>(z)]),
                                     BigNat(walks.vertex_count(z)));
        }
        dep.arc_flows.push_back({key, flow});
    }
    std::sort(dep.arc_flows.begin(), dep.arc_flows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return dep;
}

ExactBetweenness oracle_betweenness(const TemporalGraph& graph, const CostModel& model, int cap) {
    int n = graph.vertex_count();
    ExactBetweenness result;
    result.mode = Mode::exact;
    result.model = model;
    result.betweenness.assign(static_cast<size_t>(n), BigRat());
    result.total.assign(static_cast<size_t>(n), BigRat());
    result.out_reach.assign(static_cast<size_t>(n), 0);
    result.in_reach.assign(static_cast<size_t>(n), 0);
    result.closed_walk.assign(static_cast<size_t>(n), 0);

    for (int s = 0; s < n; ++s) {
        OracleWalks walks(graph, s, model, cap);
        if (walks.infinite()) throw InfiniteWalkError(s, graph.vertex_name(s));

        // sigma_sz(v): optimal s-z-walks through v, later source re-entries
        // never counted, both endpoints counted once
        std::vector<std::vector<uint64_t>> through(
            static_cast<size_t>(n), std::vector<uint64_t>(static_cast<size_t>(n), 0));
        for (int i = 0; i < walks.walk_count(); ++i) {
            if (!walks.walk_vertex_optimal(i)) continue;
            Walk w = walks.walk(i);
            int z = w.end_appearance().vertex;
            for (const TimeArc& a : w.arcs) {
                if (a.head == s) continue;
                // a repetition-free optimal walk can still meet the same
                // vertex at several appearances; each one counts
                ++through[static_cast<size_t>(z)][static_cast<size_t>(a.head)];
            }
        }
        for (int z = 0; z < n; ++z) {
            uint64_t sigma = walks.vertex_count(z);
            if (sigma == 0) continue;
            ++result.out_reach[static_cast<size_t>(s)];
            ++result.in_reach[static_cast<size_t>(z)];
            if (z == s) result.closed_walk[static_cast<size_t>(s)] = 1;
            for (int v = 0; v < n; ++v) {
                uint64_t cnt = v == s ? sigma : through[static_cast<size_t>(z)][static_cast<size_t>(v)];
                if (cnt == 0) continue;
                BigRat d = BigRat::fraction(BigNat(cnt), BigNat(sigma));
                result.total[static_cast<size_t>(v)] += d;
                if (v != s && v != z) result.betweenness[static_cast<size_t>(v)] += d;
            }
        }
    }
    return result;
}

}  // namespace tempo
