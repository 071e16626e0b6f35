#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "mgh/constructions.hpp"
#include "mgh/metrics.hpp"

using namespace mgh;
using namespace mgh::testing;

TEST_CASE("congruence helper") {
    CHECK(next_congruent(3, 4, 6) == 4);
    CHECK(next_congruent(4, 4, 6) == 4);
    CHECK(next_congruent(5, 4, 6) == 10);
    CHECK(next_congruent(3, 2, 4) == 6);
    CHECK(next_congruent(10, 2, 4) == 10);
    CHECK(next_congruent(11, 2, 4) == 14);
}

TEST_CASE("every generator output validates") {
    std::vector<ConstructionSpec> specs = {
        {"cactus", {{"girth", 3}}},        {"cactus", {{"girth", 9}}},
        {"outerplanar5", {{"girth", 3}}},  {"outerplanar5", {{"girth", 7}}},
        {"x14", {}},                       {"p7", {}},
        {"y_graph", {}},                   {"red_cycles", {}},
        {"bip_g10", {}},                   {"bip_g10", {{"swap_parts", 1}}},
    };
    for (const auto& spec : specs) {
        MixedGraph g = generate(spec);
        INFO(spec.name);
        CHECK(validate_graph(g).empty());
    }
}

TEST_CASE("generators are deterministic") {
    for (const char* name : {"cactus", "outerplanar5", "y_graph", "red_cycles"}) {
        ConstructionSpec spec{name, {{"girth", 5}}};
        CHECK(serialize_graph(generate(spec)) == serialize_graph(generate(spec)));
    }
}

TEST_CASE("cactus shape") {
    MixedGraph g = generate({"cactus", {{"girth", 3}}});
    CHECK(g.num_vertices == 16);  // 4 + 4*3
    CHECK(girth(g) == 4);
    CHECK(is_bipartite(g));
    CHECK(g.num_edge_colors == 0);

    for (int want : {3, 5, 11}) {
        MixedGraph h = generate({"cactus", {{"girth", want}}});
        CHECK(*girth(h) >= want);
        CHECK(is_bipartite(h));
    }
}

TEST_CASE("outerplanar5 shape") {
    MixedGraph g = generate({"outerplanar5", {{"girth", 3}}});
    CHECK(g.num_vertices == 22);  // 6 + 4*4
    CHECK(girth(g) == 6);
    CHECK(is_bipartite(g));
    for (int want : {3, 6, 10}) {
        MixedGraph h = generate({"outerplanar5", {{"girth", want}}});
        CHECK(*girth(h) >= want);
        CHECK(is_bipartite(h));
    }
}

TEST_CASE("x14 arc orientation pattern") {
    MixedGraph g = generate({"x14", {}});
    CHECK(g.num_vertices == 14);
    CHECK(girth(g) == 14);
    std::set<std::pair<int, int>> arcs;
    for (const auto& a : g.arcs) arcs.insert({a.tail, a.head});
    CHECK(arcs.count({0, 1}));
    CHECK(arcs.count({2, 1}));
    CHECK(arcs.count({12, 13}));
    CHECK(arcs.count({13, 0}));  // the one arc whose tail has odd index
    CHECK_FALSE(arcs.count({0, 13}));
}

TEST_CASE("p7 arc list is exact") {
    MixedGraph g = generate({"p7", {}});
    std::set<std::pair<int, int>> arcs;
    for (const auto& a : g.arcs) arcs.insert({a.tail, a.head});
    std::set<std::pair<int, int>> expected{{1, 0}, {1, 2}, {3, 2}, {4, 3}, {5, 4}, {5, 6}};
    CHECK(arcs == expected);
    CHECK_FALSE(girth(g).has_value());  // a path is a tree
}

TEST_CASE("y_graph counts, girth, bipartiteness") {
    MixedGraph g = generate({"y_graph", {}});
    CHECK(g.num_vertices == 357);  // 8*14 + 49*5
    CHECK(g.arcs.size() == 8 * 14 + 49 * 6);
    CHECK(girth(g) == 14);
    CHECK(is_bipartite(g));
}

TEST_CASE("red_cycles counts and girth") {
    MixedGraph g = generate({"red_cycles", {}});
    CHECK(g.num_vertices == 616);  // 12*11 + 121*4
    int red = 0, blue = 0;
    for (const auto& e : g.edges) (e.color == 1 ? red : blue)++;
    CHECK(red == 12 * 11);
    CHECK(blue == 121 * 5);
    CHECK(girth(g) == 11);
}

TEST_CASE("bip_g10 counts, girth, bipartiteness, both bipartition choices") {
    for (int swap : {0, 1}) {
        MixedGraph g = generate({"bip_g10", {{"swap_parts", swap}}});
        CHECK(g.num_vertices == 74 + 74 * 74 + 74 * (37 * 4 + 37 * 3));
        CHECK(girth(g) == 10);
        CHECK(is_bipartite(g));
    }
}

TEST_CASE("generator errors") {
    CHECK_THROWS_AS(generate({"nonesuch", {}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({"cactus", {{"girth", 2}}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({"outerplanar5", {{"girth", 0}}}), std::invalid_argument);
}

TEST_CASE("replication gadget on a single edge") {
    MixedGraph g(2, 0, 1);
    g.add_edge(0, 1, 0);
    MixedGraph r = replication_gadget(g, 5);
    CHECK(r.num_vertices == 2 + 3);  // one path of 4 edges
    CHECK(r.edges.size() == 1 + 4);
    CHECK(validate_graph(r).empty());
}

TEST_CASE("replication gadget on a single arc") {
    MixedGraph g(2, 1, 0);
    g.add_arc(0, 1, 0);
    MixedGraph r = replication_gadget(g, 5);
    // two alternating paths of 4 arcs (3 internal) + two of 5 arcs (4 internal)
    CHECK(r.num_vertices == 2 + 2 * 3 + 2 * 4);
    CHECK(r.arcs.size() == 1 + 2 * 4 + 2 * 5);
    CHECK(validate_graph(r).empty());

    // the four paths alternate and start in both directions
    auto deg = degrees(r);
    for (int v = 2; v < r.num_vertices; ++v) CHECK(deg[v] == 2);
}

TEST_CASE("replication gadget thread lengths and girth floor") {
    std::mt19937 rng(5);
    int cases = 0;
    for (int trial = 0; trial < 30 && cases < 10; ++trial) {
        MixedGraph g = random_mixed(rng, 4 + trial % 3, 1, 1, 0.5);
        if (!validate_graph(g).empty() || g.num_links() == 0) continue;
        int gamma = 3 + trial % 4;
        MixedGraph r = replication_gadget(g, gamma);
        CHECK(validate_graph(r).empty());
        auto gr = girth(r);
        REQUIRE(gr.has_value());  // the gadget always closes cycles
        auto gg = girth(g);
        int expected_floor = gg ? std::min(*gg, gamma) : gamma;
        CHECK(*gr >= expected_floor);
        ++cases;
    }
    CHECK(cases == 10);
}

TEST_CASE("alternating paths in the replication gadget alternate") {
    MixedGraph g(2, 1, 0);
    g.add_arc(0, 1, 0);
    MixedGraph r = replication_gadget(g, 4);
    // walk from each added vertex of degree 2: consecutive arcs must flip
    auto adj = underlying_adjacency(r);
    std::map<std::pair<int, int>, int> dir;  // (x,y) -> +1 if arc x->y
    for (const auto& a : r.arcs) {
        dir[{a.tail, a.head}] = 1;
        dir[{a.head, a.tail}] = -1;
    }
    for (int v = 2; v < r.num_vertices; ++v) {
        REQUIRE(adj[v].size() == 2);
        int x = adj[v][0], y = adj[v][1];
        // at an interior vertex the two arcs either both leave or both enter
        CHECK(dir[{v, x}] == dir[{v, y}]);
    }
}
