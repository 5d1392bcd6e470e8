#include "tempo/betweenness.hpp"

#include <atomic>
#include <cassert>
#include <thread>

namespace tempo {

namespace {

template <typename V>
struct ValueOps;

template <>
struct ValueOps<BigRat> {
    static BigRat ratio(const BigNat& num, const BigNat& den) {
        return BigRat::fraction(num, den);
    }
    static BigRat one() { return BigRat(1); }
};

template <>
struct ValueOps<double> {
    static double ratio(const BigNat& num, const BigNat& den) {
        return BigNat::ratio_as_double(num, den);
    }
    static double one() { return 1.0; }
};

}  // namespace

// Dependencies flow backward through the predecessor DAG:
//   dep(x) = base(x) + sum over successors y of (count(x)/count(y)) * dep(y)
// where base(x) is count(x)/vertex_count for appearances achieving their
// vertex's optimum and zero elsewhere. The start node has no base term; its
// accumulated value equals the number of vertices the source reaches, which
// the reducer uses as the source's own total-betweenness share.
template <typename V>
SourceAccumulation<V> accumulate_source(const TemporalGraph& graph, const PredecessorGraph& pg,
                                        const WalkCounts& counts, bool record_arc_flows) {
    if (counts.any_infinite)
        throw InfiniteWalkError(pg.source, graph.vertex_name(pg.source));

    int n = graph.vertex_count();
    int start = pg.start_id();
    SourceAccumulation<V> acc;
    acc.source = pg.source;
    acc.dep_by_app.assign(static_cast<size_t>(graph.appearance_count()), V{});
    acc.vertex_cumulative.assign(static_cast<size_t>(n), V{});
    acc.vertex_contribution.assign(static_cast<size_t>(n), V{});
    acc.reach = counts.vertex_reachable;
    for (uint8_t r : acc.reach) acc.reach_count += r;

    auto count_of = [&](int32_t node) -> const BigNat& {
        return node == start ? counts.start_count.value
                             : counts.per_appearance[static_cast<size_t>(node)].value;
    };

    // counts.topo covers every node when nothing is infinite
    for (size_t i = counts.topo.size(); i-- > 0;) {
        int32_t x = counts.topo[i];
        V dep = V{};
        if (x != start && pg.app_vertex_optimal[static_cast<size_t>(x)]) {
            int v = graph.appearance_vertex(x);
            dep = ValueOps<V>::ratio(count_of(x), counts.per_vertex[static_cast<size_t>(v)].value);
        }
        for (int32_t y : pg.succs[static_cast<size_t>(x)]) {
            // y is never the start node: (s,0) has no predecessors
            V flow = ValueOps<V>::ratio(count_of(x), count_of(y)) *
                     acc.dep_by_app[static_cast<size_t>(y)];
            dep += flow;
            if (record_arc_flows) acc.arc_flows.push_back({{x, y}, flow});
        }
        if (x == start)
            acc.dep_start = dep;
        else
            acc.dep_by_app[static_cast<size_t>(x)] = dep;
    }

    // Per-vertex aggregates. Later re-entries of the source carry flow in
    // the recursion but are not reported; the source's own account is the
    // start node's value.
    for (int32_t app : pg.nodes) {
        int v = graph.appearance_vertex(app);
        if (v == pg.source) continue;
        acc.vertex_cumulative[static_cast<size_t>(v)] += acc.dep_by_app[static_cast<size_t>(app)];
    }
    acc.vertex_cumulative[static_cast<size_t>(pg.source)] = acc.dep_start;
    for (int v = 0; v < n; ++v) {
        if (v == pg.source) continue;
        acc.vertex_contribution[static_cast<size_t>(v)] = acc.vertex_cumulative[static_cast<size_t>(v)];
        if (acc.reach[static_cast<size_t>(v)])
            acc.vertex_contribution[static_cast<size_t>(v)] -= ValueOps<V>::one();
    }
    return acc;
}

template SourceAccumulation<BigRat> accumulate_source<BigRat>(const TemporalGraph&,
                                                              const PredecessorGraph&,
                                                              const WalkCounts&, bool);
template SourceAccumulation<double> accumulate_source<double>(const TemporalGraph&,
                                                              const PredecessorGraph&,
                                                              const WalkCounts&, bool);

namespace {

template <typename V>
BetweennessValues<V> betweenness_all(const TemporalGraph& graph, const CostModel& model,
                                     Mode mode, int threads) {
    int n = graph.vertex_count();
    BetweennessValues<V> result;
    result.mode = mode;
    result.model = model;
    result.betweenness.assign(static_cast<size_t>(n), V{});
    result.total.assign(static_cast<size_t>(n), V{});
    result.out_reach.assign(static_cast<size_t>(n), 0);
    result.in_reach.assign(static_cast<size_t>(n), 0);
    result.closed_walk.assign(static_cast<size_t>(n), 0);
    if (n == 0) return result;

    struct PerSource {
        SourceAccumulation<V> acc;
        int infinite_source = -1;
    };
    std::vector<PerSource> per_source(static_cast<size_t>(n));

    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min(threads, n);

    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int s = next.fetch_add(1);
            if (s >= n) return;
            CostModel prepared = prepare(model, graph, s);
            PredecessorGraph pg = build_predecessor_graph(graph, s, prepared);
            WalkCounts counts = count_walks(pg);
            if (counts.any_infinite) {
                per_source[static_cast<size_t>(s)].infinite_source = s;
                continue;
            }
            per_source[static_cast<size_t>(s)].acc =
                accumulate_source<V>(graph, pg, counts, false);
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(threads));
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Deterministic reduction in ascending source order.
    for (int s = 0; s < n; ++s) {
        const PerSource& ps = per_source[static_cast<size_t>(s)];
        if (ps.infinite_source >= 0)
            throw InfiniteWalkError(s, graph.vertex_name(s));
        const SourceAccumulation<V>& acc = ps.acc;
        for (int v = 0; v < n; ++v) {
            result.total[static_cast<size_t>(v)] += acc.vertex_cumulative[static_cast<size_t>(v)];
            if (v != s)
                result.betweenness[static_cast<size_t>(v)] +=
                    acc.vertex_contribution[static_cast<size_t>(v)];
            if (acc.reach[static_cast<size_t>(v)]) ++result.in_reach[static_cast<size_t>(v)];
        }
        result.out_reach[static_cast<size_t>(s)] = acc.reach_count;
        result.closed_walk[static_cast<size_t>(s)] = acc.reach[static_cast<size_t>(s)];
    }
    return result;
}

}  // namespace

ExactBetweenness betweenness_all_exact(const TemporalGraph& graph, const CostModel& model,
                                       int threads) {
    return betweenness_all<BigRat>(graph, model, Mode::exact, threads);
}

FastBetweenness betweenness_all_fast(const TemporalGraph& graph, const CostModel& model,
                                     int threads) {
    return betweenness_all<double>(graph, model, Mode::fast, threads);
}

}  // namespace tempo
