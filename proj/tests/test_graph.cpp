#include <catch2/catch_amalgamated.hpp>

#include "edim/families.hpp"
#include "edim/graph.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace edim;

TEST_CASE("build_graph normalizes input", "[graph]") {
    SECTION("path") {
        Graph g = Graph::build(3, {{0, 1}, {1, 2}});
        REQUIRE(g.vertex_count() == 3);
        REQUIRE(g.edge_count() == 2);
        REQUIRE(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    }
    SECTION("reversed duplicate collapses to one edge") {
        Graph g = Graph::build(4, {{0, 1}, {1, 0}});
        REQUIRE(g.edge_count() == 1);
        REQUIRE(g.edges().front() == Edge{0, 1});
    }
    SECTION("singleton") {
        Graph g = Graph::build(1, {});
        REQUIRE(g.vertex_count() == 1);
        REQUIRE(g.edge_count() == 0);
    }
    SECTION("self-loop rejected") {
        REQUIRE_THROWS_AS(Graph::build(3, {{1, 1}}), std::invalid_argument);
    }
    SECTION("endpoint out of range rejected") {
        REQUIRE_THROWS_AS(Graph::build(3, {{0, 3}}), std::invalid_argument);
        REQUIRE_THROWS_AS(Graph::build(3, {{-1, 2}}), std::invalid_argument);
    }
}

TEST_CASE("build_graph is idempotent on normalized output", "[graph]") {
    fixtures::RandomGraphs gen(4242);
    for (int i = 0; i < 50; ++i) {
        Graph g = gen.next(1, 12);
        Graph again = Graph::build(g.vertex_count(), g.edges());
        REQUIRE(g == again);
    }
}

TEST_CASE("all_pairs_distances", "[graph]") {
    SECTION("path distance") {
        DistanceMatrix d = all_pairs_distances(Graph::build(3, {{0, 1}, {1, 2}}));
        REQUIRE(d.at(0, 2) == 2);
        REQUIRE(d.at(0, 0) == 0);
        REQUIRE(d.connected());
    }
    SECTION("disconnected pairs are unreachable") {
        DistanceMatrix d = all_pairs_distances(Graph::build(4, {{0, 1}, {2, 3}}));
        REQUIRE(d.at(0, 2) == kUnreachable);
        REQUIRE_FALSE(d.connected());
    }
    SECTION("five-cycle") {
        DistanceMatrix d = all_pairs_distances(cycle_graph(5));
        REQUIRE(d.at(0, 2) == 2);
        REQUIRE(d.at(0, 3) == 2);
    }
}

TEST_CASE("distances agree with an independent BFS", "[graph]") {
    fixtures::RandomGraphs gen(7);
    for (int i = 0; i < 40; ++i) {
        Graph g = gen.next(1, 14);
        DistanceMatrix d = all_pairs_distances(g);
        for (int s = 0; s < g.vertex_count(); ++s) {
            auto row = oracle::bfs(g, s);
            for (int t = 0; t < g.vertex_count(); ++t) {
                int expected = row[static_cast<std::size_t>(t)] == oracle::kInf
                                   ? kUnreachable
                                   : row[static_cast<std::size_t>(t)];
                REQUIRE(d.at(s, t) == expected);
            }
        }
    }
}

TEST_CASE("distance matrix basic symmetry and edge property", "[graph]") {
    fixtures::RandomGraphs gen(99);
    for (int i = 0; i < 25; ++i) {
        Graph g = gen.next(2, 10);
        DistanceMatrix d = all_pairs_distances(g);
        for (int u = 0; u < g.vertex_count(); ++u) {
            REQUIRE(d.at(u, u) == 0);
            for (int v = u + 1; v < g.vertex_count(); ++v) {
                REQUIRE(d.at(u, v) == d.at(v, u));
                REQUIRE((d.at(u, v) == 1) == g.has_edge(u, v));
            }
        }
    }
}

TEST_CASE("vertex_edge_distance", "[graph]") {
    Graph p3 = Graph::build(3, {{0, 1}, {1, 2}});
    DistanceMatrix d = all_pairs_distances(p3);
    REQUIRE(vertex_edge_distance(d, Edge{0, 1}, 2) == 1);
    REQUIRE(vertex_edge_distance(d, Edge{0, 1}, 0) == 0);

    Graph c5 = cycle_graph(5);
    DistanceMatrix dc = all_pairs_distances(c5);
    REQUIRE(vertex_edge_distance(dc, Edge{0, 1}, 3) == 2);
}

TEST_CASE("vertex_edge_distance is zero exactly at endpoints", "[graph]") {
    fixtures::RandomGraphs gen(11);
    for (int i = 0; i < 25; ++i) {
        Graph g = gen.next(2, 10);
        DistanceMatrix d = all_pairs_distances(g);
        for (const Edge& e : g.edges())
            for (int w = 0; w < g.vertex_count(); ++w) {
                bool endpoint = (w == e.u || w == e.v);
                REQUIRE((vertex_edge_distance(d, e, w) == 0) == endpoint);
            }
    }
}

TEST_CASE("components", "[graph]") {
    REQUIRE(components(Graph::build(3, {{0, 1}, {1, 2}})) ==
            std::vector<std::vector<int>>{{0, 1, 2}});
    REQUIRE(components(Graph::build(2, {})) == std::vector<std::vector<int>>{{0}, {1}});
    auto cs = components(Graph::build(5, {{0, 1}, {1, 2}, {3, 4}}));
    REQUIRE(cs.size() == 2);
    REQUIRE(cs[0].size() == 3);
    REQUIRE(cs[1].size() == 2);
}

TEST_CASE("unreachable exactly across components", "[graph]") {
    fixtures::RandomGraphs gen(23);
    for (int i = 0; i < 25; ++i) {
        Graph g = gen.next(2, 12);
        DistanceMatrix d = all_pairs_distances(g);
        auto cs = components(g);
        std::vector<int> comp_of(static_cast<std::size_t>(g.vertex_count()));
        for (std::size_t c = 0; c < cs.size(); ++c)
            for (int v : cs[c]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = 0; v < g.vertex_count(); ++v)
                REQUIRE((d.at(u, v) == kUnreachable) ==
                        (comp_of[static_cast<std::size_t>(u)] != comp_of[static_cast<std::size_t>(v)]));
    }
}

TEST_CASE("induced_subgraph", "[graph]") {
    SECTION("K4 restricted to a triangle") {
        Graph k4 = complete_graph(4);
        auto sub = induced_subgraph(k4, std::vector<int>{0, 1, 2});
        REQUIRE(sub.graph == complete_graph(3));
        REQUIRE(sub.old_of_new == std::vector<int>{0, 1, 2});
    }
    SECTION("P4 endpoints give an edgeless pair") {
        auto sub = induced_subgraph(path_graph(4), std::vector<int>{0, 3});
        REQUIRE(sub.graph.vertex_count() == 2);
        REQUIRE(sub.graph.edge_count() == 0);
    }
    SECTION("three consecutive cycle vertices give a path") {
        auto sub = induced_subgraph(cycle_graph(5), std::vector<int>{0, 1, 2});
        REQUIRE(sub.graph == path_graph(3));
    }
    SECTION("empty set rejected") {
        REQUIRE_THROWS_AS(induced_subgraph(path_graph(3), std::vector<int>{}),
                          std::invalid_argument);
    }
    SECTION("index maps agree") {
        Graph g = fixtures::chorded_six_cycle();
        auto sub = induced_subgraph(g, std::vector<int>{1, 3, 5});
        for (std::size_t i = 0; i < sub.old_of_new.size(); ++i)
            REQUIRE(sub.new_of_old[static_cast<std::size_t>(sub.old_of_new[i])] ==
                    static_cast<int>(i));
    }
}
