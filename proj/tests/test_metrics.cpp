#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mgh/constructions.hpp"
#include "mgh/metrics.hpp"
#include "mgh/targets.hpp"

using namespace mgh;
using namespace mgh::testing;

TEST_CASE("rational arithmetic normalizes and compares exactly") {
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(2) + Rational(2, 5) == Rational(12, 5));
    CHECK(Rational(7, 3) - Rational(1, 3) == Rational(2));
    CHECK(Rational(1, 3) * Rational(3, 4) == Rational(1, 4));
    CHECK(Rational(9, 4) < Rational(7, 3));
    CHECK(Rational(9, 4).to_string() == "9/4");
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("girth of standard graphs") {
    CHECK(girth(directed_cycle(14)) == 14);
    CHECK(girth(undirected_cycle(5)) == 5);
    CHECK(girth(simple_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == 3);
    // trees have no cycle
    CHECK_FALSE(girth(simple_graph(4, {{0, 1}, {1, 2}, {1, 3}})).has_value());
    CHECK_FALSE(girth(MixedGraph(3, 0, 1)).has_value());
}

TEST_CASE("girth agrees with an independent per-edge oracle") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        MixedGraph g = random_mixed(rng, 3 + trial % 9, 1, 1, 0.4);
        CHECK(girth(g) == naive_girth(g));
    }
    // and on the two mid-size generated assemblies
    MixedGraph rc = generate({"red_cycles", {}});
    CHECK(girth(rc) == 11);
    CHECK(naive_girth(rc) == 11);
    MixedGraph y = generate({"y_graph", {}});
    CHECK(girth(y) == 14);
    CHECK(naive_girth(y) == 14);
}

TEST_CASE("bipartiteness") {
    CHECK(is_bipartite(undirected_cycle(6)));
    CHECK_FALSE(is_bipartite(undirected_cycle(7)));
    CHECK(is_bipartite(MixedGraph(2, 0, 1)));
    CHECK(is_bipartite(generate({"y_graph", {}})));
}

TEST_CASE("mad of cycles and cliques") {
    CHECK(mad_exact(undirected_cycle(5)) == Rational(2));
    CHECK(mad_exact(undirected_cycle(12)) == Rational(2));
    CHECK(mad_exact(simple_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) ==
          Rational(3));
    CHECK(mad_exact(MixedGraph(1, 0, 1)) == Rational(0));
}

TEST_CASE("exhaustive and flow mad agree on their overlap") {
    std::mt19937 rng(88);
    for (int trial = 0; trial < 40; ++trial) {
        MixedGraph g = random_mixed(rng, 4 + trial % 9, 0, 1, 0.45);
        Rational ex = mad_exact_exhaustive(g);
        Rational fl = mad_exact_flow(g);
        CHECK(ex == fl);
        // mad is at least the global average degree
        if (g.num_vertices > 0)
            CHECK(Rational(2 * static_cast<long long>(g.num_links()), g.num_vertices) <= ex);
    }
}

TEST_CASE("mad is exact on a boundary case") {
    // two triangles sharing a vertex: densest subgraph is one triangle
    MixedGraph g = simple_graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
    CHECK(mad_exact(g) == Rational(12, 5));  // the whole graph: 2*6/5
}

TEST_CASE("discharging girth exclusions for k=11 and k=8") {
    std::mt19937 rng(1);
    auto r11 = check_discharging(hypothesis_graph(rng, 11), 11);
    CHECK(r11.girth_exclusion == 28);
    CHECK(r11.mad_lower_bound == Rational(2) + Rational(2, 13));
    auto r8 = check_discharging(hypothesis_graph(rng, 8), 8);
    CHECK(r8.girth_exclusion == 22);
    CHECK(r8.mad_lower_bound == Rational(2) + Rational(2, 10));
}

TEST_CASE("discharging hypothesis failures are reported with reasons") {
    // bare cycle: a component of 2-vertices only
    auto cyc = check_discharging(undirected_cycle(8), 5);
    CHECK_FALSE(cyc.hypothesis_holds);
    CHECK(cyc.reason == "a component consists only of 2-vertices");

    // pendant vertex: minimum degree below 2
    auto pend = check_discharging(simple_graph(3, {{0, 1}, {1, 2}}), 5);
    CHECK_FALSE(pend.hypothesis_holds);
    CHECK(pend.reason == "minimum degree below 2");

    // K4 subdivided heavily on one edge: run too long for small k
    MixedGraph g = simple_graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
                                    {2, 4}, {4, 5}, {5, 6}, {6, 3}});
    auto run = check_discharging(g, 2);
    CHECK_FALSE(run.hypothesis_holds);
}

TEST_CASE("discharging bound holds on generated hypothesis graphs") {
    std::mt19937 rng(1234);
    for (int k : {2, 5, 8, 11}) {
        for (int i = 0; i < 10; ++i) {
            MixedGraph g = hypothesis_graph(rng, k);
            auto rep = check_discharging(g, k);
            REQUIRE(rep.hypothesis_holds);
            REQUIRE(rep.mad_value.has_value());
            CHECK(rep.mad_meets_bound);
            CHECK(*rep.mad_value >= Rational(2) + Rational(2, k + 2));
        }
    }
}

TEST_CASE("universality edge bound") {
    auto r = universality_edge_bound(1, 1, 5);
    CHECK(r.required == 13);
    CHECK(r.planar_max == 9);
    CHECK(r.impossible);

    r = universality_edge_bound(1, 0, 5);
    CHECK(r.required == 9);
    CHECK(r.planar_max == 9);
    CHECK_FALSE(r.impossible);

    for (int k = 5; k <= 40; ++k) CHECK_FALSE(universality_edge_bound(0, 1, k).impossible);

    CHECK(universality_edge_bound(2, 0, 7).required == 26);
    CHECK(universality_edge_bound(2, 0, 7).planar_max == 15);

    // the flag matches the per-k inequality being unavoidable
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n) {
            bool expected = 2 * m + n >= 3;
            CHECK(universality_edge_bound(m, n, 17).impossible == expected);
            if (expected)
                for (int k = 3; k <= 60; ++k) {
                    auto rep = universality_edge_bound(m, n, k);
                    CHECK(rep.required > rep.planar_max);
                }
        }
    CHECK_THROWS_AS(universality_edge_bound(1, 0, 2), std::invalid_argument);
}

TEST_CASE("color class connectivity of the builtin targets") {
    auto t6rep = color_class_connectivity(builtin_target("t6"));
    REQUIRE(t6rep.edge_classes.size() == 2);
    for (const auto& ec : t6rep.edge_classes) {
        CHECK(ec.connected_spanning);
        CHECK(ec.edge_count >= 5);
    }
    CHECK(t6rep.all_pass());

    auto t5rep = color_class_connectivity(builtin_target("t5"));
    REQUIRE(t5rep.arc_classes.size() == 1);
    CHECK(t5rep.arc_classes[0].both_parity_reachable);
    CHECK(t5rep.arc_classes[0].arc_count >= 9);
    CHECK(t5rep.all_pass());
}

TEST_CASE("a single edge on three vertices is not spanning") {
    MixedGraph g(3, 0, 2);
    g.add_edge(0, 1, 0);
    auto rep = color_class_connectivity(g);
    CHECK_FALSE(rep.edge_classes[0].connected_spanning);
    CHECK_FALSE(rep.all_pass());
}

TEST_CASE("generated constructions satisfy the planar mad-girth inequality") {
    // (mad - 2) * (girth - 2) < 4 for the planar constructions
    for (const char* name : {"x14", "p7", "y_graph", "red_cycles"}) {
        MixedGraph g = generate({name, {}});
        auto gv = girth(g);
        if (!gv) continue;  // trees impose nothing
        Rational mad = mad_exact(g);
        Rational lhs = (mad - Rational(2)) * Rational(*gv - 2);
        CHECK(lhs < Rational(4));
    }
    for (int g0 : {3, 5, 7}) {
        MixedGraph g = generate({"cactus", {{"girth", g0}}});
        Rational lhs = (mad_exact(g) - Rational(2)) * Rational(*girth(g) - 2);
        CHECK(lhs < Rational(4));
        MixedGraph h = generate({"outerplanar5", {{"girth", g0}}});
        Rational lhs2 = (mad_exact(h) - Rational(2)) * Rational(*girth(h) - 2);
        CHECK(lhs2 < Rational(4));
    }
}
