#include "tempo/counting.hpp"

#include <algorithm>
#include <cassert>

namespace tempo {

namespace {

// Iterative Tarjan over the predecessor graph's successor lists.
struct TarjanScc {
    const PredecessorGraph& pg;
    std::vector<int32_t> index, lowlink, comp;
    std::vector<uint8_t> on_stack;
    std::vector<int32_t> stack;
    int32_t next_index = 0;
    std::vector<std::vector<int32_t>> components;

    explicit TarjanScc(const PredecessorGraph& g)
        : pg(g),
          index(static_cast<size_t>(g.start_id()) + 1, -1),
          lowlink(static_cast<size_t>(g.start_id()) + 1, 0),
          comp(static_cast<size_t>(g.start_id()) + 1, -1),
          on_stack(static_cast<size_t>(g.start_id()) + 1, 0) {}

    void run(int32_t root) {
        struct Frame {
            int32_t node;
            size_t next_succ;
        };
        std::vector<Frame> frames{{root, 0}};
        index[static_cast<size_t>(root)] = lowlink[static_cast<size_t>(root)] = next_index++;
        stack.push_back(root);
        on_stack[static_cast<size_t>(root)] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& succ = pg.succs[static_cast<size_t>(f.node)];
            if (f.next_succ < succ.size()) {
                int32_t w = succ[f.next_succ++];
                if (index[static_cast<size_t>(w)] < 0) {
                    index[static_cast<size_t>(w)] = lowlink[static_cast<size_t>(w)] = next_index++;
                    stack.push_back(w);
                    on_stack[static_cast<size_t>(w)] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[static_cast<size_t>(w)]) {
                    lowlink[static_cast<size_t>(f.node)] =
                        std::min(lowlink[static_cast<size_t>(f.node)], index[static_cast<size_t>(w)]);
                }
            } else {
                if (lowlink[static_cast<size_t>(f.node)] == index[static_cast<size_t>(f.node)]) {
                    components.emplace_back();
                    int32_t w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<size_t>(w)] = 0;
                        comp[static_cast<size_t>(w)] = static_cast<int32_t>(components.size()) - 1;
                        components.back().push_back(w);
                    } while (w != f.node);
                }
                int32_t done = f.node;
                frames.pop_back();
                if (!frames.empty()) {
                    int32_t parent = frames.back().node;
                    lowlink[static_cast<size_t>(parent)] =
                        std::min(lowlink[static_cast<size_t>(parent)], lowlink[static_cast<size_t>(done)]);
                }
            }
        }
    }
};

}  // namespace

std::vector<std::vector<int32_t>> strongly_connected_components(const PredecessorGraph& pg) {
    TarjanScc scc(pg);
    scc.run(pg.start_id());
    for (int32_t app : pg.nodes) {
        if (scc.index[static_cast<size_t>(app)] < 0) scc.run(app);
    }
    for (auto& c : scc.components) std::sort(c.begin(), c.end());
    return scc.components;
}

bool is_finite(const PredecessorGraph& pg) {
    for (const auto& c : strongly_connected_components(pg))
        if (c.size() > 1) return false;
    return true;
}

WalkCounts count_walks(const PredecessorGraph& pg) {
    WalkCounts wc;
    wc.source = pg.source;
    wc.node_present = pg.present;
    int appearance_count = pg.graph->appearance_count();
    int start = pg.start_id();
    wc.per_appearance.assign(static_cast<size_t>(appearance_count), WalkCount{});
    wc.start_count = WalkCount{false, BigNat(1)};

    // Appearances inside or downstream of a nontrivial SCC have infinitely
    // many optimal walks.
    std::vector<uint8_t> infinite(static_cast<size_t>(appearance_count) + 1, 0);
    std::vector<int32_t> queue;
    for (const auto& c : strongly_connected_components(pg)) {
        if (c.size() > 1) {
            for (int32_t x : c) {
                if (!infinite[static_cast<size_t>(x)]) {
                    infinite[static_cast<size_t>(x)] = 1;
                    queue.push_back(x);
                }
            }
        }
    }
    while (!queue.empty()) {
        int32_t x = queue.back();
        queue.pop_back();
        for (int32_t y : pg.succs[static_cast<size_t>(x)]) {
            if (!infinite[static_cast<size_t>(y)]) {
                infinite[static_cast<size_t>(y)] = 1;
                queue.push_back(y);
            }
        }
    }
    assert(!infinite[static_cast<size_t>(start)]);

    // The finite remainder is a DAG; count walks in topological order. A
    // finite node's predecessors are all finite, so Kahn's queue over the
    // finite part alone is complete.
    std::vector<int32_t> indegree(static_cast<size_t>(appearance_count), 0);
    for (int32_t app : pg.nodes) {
        if (infinite[static_cast<size_t>(app)]) {
            wc.per_appearance[static_cast<size_t>(app)].infinite = true;
            wc.any_infinite = true;
            continue;
        }
        indegree[static_cast<size_t>(app)] =
            static_cast<int32_t>(pg.preds[static_cast<size_t>(app)].size());
    }
    wc.topo.clear();
    wc.topo.push_back(start);
    for (size_t head = 0; head < wc.topo.size(); ++head) {
        int32_t x = wc.topo[head];
        const BigNat& count_x =
            x == start ? wc.start_count.value : wc.per_appearance[static_cast<size_t>(x)].value;
        for (int32_t y : pg.succs[static_cast<size_t>(x)]) {
            if (infinite[static_cast<size_t>(y)]) continue;
            wc.per_appearance[static_cast<size_t>(y)].value += count_x;
            if (--indegree[static_cast<size_t>(y)] == 0) wc.topo.push_back(y);
        }
    }

    int n = pg.graph->vertex_count();
    wc.per_vertex.assign(static_cast<size_t>(n), WalkCount{});
    wc.vertex_reachable.assign(static_cast<size_t>(n), 0);
    for (int32_t app : pg.nodes) {
        if (!pg.app_vertex_optimal[static_cast<size_t>(app)]) continue;
        int v = pg.graph->appearance_vertex(app);
        wc.vertex_reachable[static_cast<size_t>(v)] = 1;
        WalkCount& total = wc.per_vertex[static_cast<size_t>(v)];
        const WalkCount& part = wc.per_appearance[static_cast<size_t>(app)];
        if (part.infinite)
            total.infinite = true;
        else if (!total.infinite)
            total.value += part.value;
    }
    for (int v = 0; v < n; ++v) {
        if (wc.per_vertex[static_cast<size_t>(v)].infinite)
            wc.per_vertex[static_cast<size_t>(v)].value = BigNat();
    }
    return wc;
}

}  // namespace tempo
