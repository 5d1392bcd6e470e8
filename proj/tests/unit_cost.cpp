#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "tempo/cost.hpp"
#include "tempo/oracle.hpp"

using namespace tempo;

TEST_CASE("identity labels") {
    CHECK(identity_label(CostModel::foremost()) == CostLabel{0, 0});
    CHECK(identity_label(CostModel::shortest()) == CostLabel{0, 0});
    CHECK(identity_label(CostModel::shortest_fastest()) == CostLabel{0, 0});
}

TEST_CASE("extend per model") {
    TimeArc arc{0, 1, 7};
    SUBCASE("shortest increments length") {
        auto l = extend(CostModel::shortest(), {2, 0}, {0, 3}, arc);
        REQUIRE(l);
        CHECK(l->primary == 3);
    }
    SUBCASE("foremost takes the arc time") {
        auto l = extend(CostModel::foremost(), {4, 0}, {0, 5}, arc);
        REQUIRE(l);
        CHECK(l->primary == 7);
    }
    SUBCASE("restless rejects waits beyond delta") {
        TimeArc late{0, 1, 9};
        CHECK(!extend(CostModel::shortest_restless(2), {3, 0}, {0, 5}, late));  // gap 4 > 2
        CHECK(extend(CostModel::shortest_restless(2), {3, 0}, {0, 7}, late));
        // the first transition from (s,0) is exempt
        CHECK(extend(CostModel::shortest_restless(2), {0, 0}, {0, 0}, late));
    }
    SUBCASE("shortest-fastest tracks duration from the fixed start") {
        // one arc taken at time 2, now extending via an arc at time 5
        TimeArc at5{0, 1, 5};
        auto l = extend(CostModel::shortest_fastest(), {0, 1}, {0, 2}, at5);
        REQUIRE(l);
        CHECK(l->primary == 3);  // duration 5 - 2
        CHECK(l->secondary == 2);
        auto first = extend(CostModel::shortest_fastest(), {0, 0}, {0, 0}, at5);
        REQUIRE(first);
        CHECK(first->primary == 0);
        CHECK(first->secondary == 1);
    }
}

TEST_CASE("compare per model") {
    CostModel sf = CostModel::shortest_fastest();
    CHECK(compare(sf, {8, 4}, {8, 7}) == Ordering::less);
    CHECK(compare(sf, {8, 4}, {9, 1}) == Ordering::less);
    CHECK(compare(CostModel::foremost(), {10, 0}, {11, 0}) == Ordering::less);
    CHECK(compare(CostModel::shortest(), {3, 0}, {3, 0}) == Ordering::equal);
}

TEST_CASE("prepare computes earliest strict arrivals for prefix-foremost") {
    TemporalGraph g = fixtures::running_example();
    CostModel m = prepare(CostModel::prefix_foremost(), g, g.vertex_index("s"));
    auto ea = [&](const char* v) { return (*m.earliest)[static_cast<size_t>(g.vertex_index(v))]; };
    CHECK(ea("a") == 1);
    CHECK(ea("c") == 1);
    CHECK(ea("d") == 2);
    CHECK(ea("b") == 3);
    CHECK(ea("e") == 4);
    CHECK(ea("v") == 5);
    CHECK(ea("f") == 6);
    CHECK(ea("z") == 10);
    CHECK(ea("s") == 0);

    TemporalGraph one = fixtures::single_arc();
    CostModel m1 = prepare(CostModel::prefix_foremost(), one, one.vertex_index("s"));
    CHECK((*m1.earliest)[static_cast<size_t>(one.vertex_index("z"))] == 3);

    // other kinds pass through untouched
    CostModel fm = prepare(CostModel::foremost(), g, 0);
    CHECK(fm.earliest == nullptr);
}

TEST_CASE("prepared earliest arrivals match strict-walk enumeration") {
    for (const auto& g : generators::random_family(40, 5, 4, 10, 31)) {
        for (int s = 0; s < g.vertex_count(); ++s) {
            CostModel prepared = prepare(CostModel::prefix_foremost(), g, s);
            OracleWalks strict_walks(g, s, CostModel::foremost(true));
            for (int v = 0; v < g.vertex_count(); ++v) {
                int ea = (*prepared.earliest)[static_cast<size_t>(v)];
                if (v == s) {
                    CHECK(ea == 0);
                } else if (strict_walks.vertex_reachable(v)) {
                    CHECK(ea == strict_walks.vertex_best(v).primary);
                } else {
                    CHECK(ea == -1);
                }
            }
        }
    }
}

TEST_CASE("incremental folding equals whole-walk evaluation on the census") {
    // for every enumerated repetition-free walk the stored label is the fold
    // of extend over its transitions; fastest labels additionally match the
    // end-to-end duration arithmetic
    for (const auto& g : generators::random_family(30, 5, 4, 10, 77)) {
        for (const CostModel& model : fixtures::five_models()) {
            for (int s = 0; s < g.vertex_count(); ++s) {
                OracleWalks walks(g, s, model);
                CostModel prepared = prepare(model, g, s);
                for (int i = 0; i < walks.walk_count(); ++i) {
                    Walk w = walks.walk(i);
                    auto folded = fold_cost(prepared, w, s);
                    REQUIRE(folded);
                    CHECK(*folded == walks.walk_label(i));
                    if (model.kind == CostKind::shortest_fastest_path) {
                        CHECK(folded->primary == w.arcs.back().time - w.arcs.front().time);
                        CHECK(folded->secondary == w.length());
                    }
                    if (model.kind == CostKind::shortest_path)
                        CHECK(folded->primary == w.length());
                    if (model.kind == CostKind::foremost_walk)
                        CHECK(folded->primary == w.arcs.back().time);
                }
            }
        }
    }
}

TEST_CASE("lexicographic shortest-fastest order induces the same optima as duration*n + length") {
    for (const auto& g : generators::random_family(40, 5, 4, 10, 123)) {
        CostModel sf = CostModel::shortest_fastest();
        long n = g.vertex_count();
        for (int s = 0; s < g.vertex_count(); ++s) {
            OracleWalks walks(g, s, sf);
            for (int app = 0; app < g.appearance_count(); ++app) {
                if (!walks.labelled(app)) continue;
                long best_encoded = -1;
                CostLabel best_lex = walks.appearance_best(app);
                for (int i = 0; i < walks.walk_count(); ++i) {
                    if (walks.walk_end_app(i) != app) continue;
                    CostLabel l = walks.walk_label(i);
                    long encoded = static_cast<long>(l.primary) * n + l.secondary;
                    if (best_encoded < 0 || encoded < best_encoded) best_encoded = encoded;
                }
                CHECK(best_encoded == static_cast<long>(best_lex.primary) * n + best_lex.secondary);
                // and the argmin walk sets coincide
                for (int i = 0; i < walks.walk_count(); ++i) {
                    if (walks.walk_end_app(i) != app) continue;
                    CostLabel l = walks.walk_label(i);
                    bool lex_opt = compare(sf, l, best_lex) == Ordering::equal;
                    bool enc_opt = static_cast<long>(l.primary) * n + l.secondary == best_encoded;
                    CHECK(lex_opt == enc_opt);
                }
            }
        }
    }
}
