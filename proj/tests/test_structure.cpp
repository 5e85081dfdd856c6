#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "edim/families.hpp"
#include "edim/structure.hpp"
#include "support/fixtures.hpp"

using namespace edim;

TEST_CASE("is_total_dominating", "[structure]") {
    REQUIRE(is_total_dominating(cycle_graph(4), std::vector<int>{0, 1}));
    REQUIRE_FALSE(is_total_dominating(cycle_graph(5), std::vector<int>{0, 1}));
    // an isolated vertex can never be dominated
    Graph iso = Graph::build(3, {{0, 1}});
    REQUIRE_FALSE(is_total_dominating(iso, std::vector<int>{0, 1, 2}));
}

TEST_CASE("total_domination_number", "[structure]") {
    REQUIRE(total_domination_number(complete_graph(2)).value == 2);
    REQUIRE(total_domination_number(cycle_graph(5)).value == 3);
    REQUIRE(total_domination_number(empty_graph(3)).status ==
            TotalDomination::Status::Undefined);
    // five disjoint edges need all ten vertices; over the default cap of 8
    Graph m5 = Graph::build(10, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}});
    REQUIRE(total_domination_number(m5).status == TotalDomination::Status::CapExceeded);
    REQUIRE(total_domination_number(m5, 10).value == 10);
}

TEST_CASE("total dominating pair cover", "[structure]") {
    REQUIRE(has_total_dominating_pair_cover(complete_graph(4)));
    REQUIRE(has_total_dominating_pair_cover(complete_multipartite({2, 3})));
    REQUIRE(has_total_dominating_pair_cover(complete_graph(2)));
    REQUIRE(has_total_dominating_pair_cover(path_graph(3)));
    REQUIRE_FALSE(has_total_dominating_pair_cover(Graph::build(1, {})));
    REQUIRE_FALSE(has_total_dominating_pair_cover(path_graph(4)));
    REQUIRE_FALSE(has_total_dominating_pair_cover(cycle_graph(5)));
    REQUIRE_FALSE(has_total_dominating_pair_cover(empty_graph(2)));
}

TEST_CASE("pair cover implies total domination number two", "[structure]") {
    fixtures::RandomGraphs gen(51);
    for (int i = 0; i < 60; ++i) {
        Graph g = gen.next(2, 9);
        if (has_total_dominating_pair_cover(g)) {
            auto gt = total_domination_number(g);
            REQUIRE(gt.status == TotalDomination::Status::Value);
            REQUIRE(gt.value == 2);
        }
    }
}

TEST_CASE("twin partition on the worked families", "[structure]") {
    for (int n = 2; n <= 6; ++n) {
        TwinPartition tp = twin_partition(complete_graph(n));
        REQUIRE(tp.t == n);
        REQUIRE(tp.t_prime == n - 1);
        REQUIRE(tp.f == 0);
        REQUIRE(tp.f_prime == 0);
    }
    for (int m = 2; m <= 3; ++m)
        for (int n = 2; n <= 3; ++n) {
            TwinPartition tp = twin_partition(complete_multipartite({m, n}));
            REQUIRE(tp.f == m + n);
            REQUIRE(tp.f_prime == m + n - 2);
            REQUIRE(tp.t == 0);
        }
    TwinPartition tp = twin_partition(fixtures::chorded_six_cycle());
    REQUIRE(tp.false_classes.empty());
    REQUIRE(tp.true_classes.empty());
}

TEST_CASE("twin relations recomputed pairwise", "[structure]") {
    fixtures::RandomGraphs gen(19);
    for (int i = 0; i < 40; ++i) {
        Graph g = gen.next(2, 10);
        TwinPartition tp = twin_partition(g);
        const int n = g.vertex_count();
        std::vector<int> false_class_of(static_cast<std::size_t>(n), -1);
        std::vector<int> true_class_of(static_cast<std::size_t>(n), -1);
        for (std::size_t c = 0; c < tp.false_classes.size(); ++c)
            for (int v : tp.false_classes[c]) false_class_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
        for (std::size_t c = 0; c < tp.true_classes.size(); ++c)
            for (int v : tp.true_classes[c]) true_class_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                const bool false_twins = g.neighbor_bits(u) == g.neighbor_bits(v);
                const bool true_twins = g.closed_neighbor_bits(u) == g.closed_neighbor_bits(v);
                bool same_false = false_class_of[static_cast<std::size_t>(u)] != -1 &&
                                  false_class_of[static_cast<std::size_t>(u)] ==
                                      false_class_of[static_cast<std::size_t>(v)];
                bool same_true = true_class_of[static_cast<std::size_t>(u)] != -1 &&
                                 true_class_of[static_cast<std::size_t>(u)] ==
                                     true_class_of[static_cast<std::size_t>(v)];
                REQUIRE(same_false == false_twins);
                REQUIRE(same_true == true_twins);
                if (false_twins) REQUIRE_FALSE(g.has_edge(u, v));
                if (true_twins) REQUIRE(g.has_edge(u, v));
            }
        // no vertex sits in nontrivial classes of both relations
        for (int v = 0; v < n; ++v)
            REQUIRE((false_class_of[static_cast<std::size_t>(v)] == -1 ||
                     true_class_of[static_cast<std::size_t>(v)] == -1));
    }
}

TEST_CASE("twin deletion", "[structure]") {
    SECTION("complete graph collapses to a point") {
        TwinDeletion td = twin_deletion(complete_graph(5));
        REQUIRE(td.graph.vertex_count() == 1);
        REQUIRE(td.kept_old_ids == std::vector<int>{0});
    }
    SECTION("path endpoints are false twins") {
        TwinDeletion td = twin_deletion(path_graph(3));
        REQUIRE(td.graph == path_graph(2));
        REQUIRE(td.kept_old_ids == std::vector<int>{0, 1});
    }
    SECTION("clique-independent-clique reduces to a 3-path with twin edges") {
        TwinDeletion td = twin_deletion(fixtures::clique_independent_clique());
        REQUIRE(td.graph == path_graph(3));
        EdgeTwinPartition etp = edge_twin_partition(td.graph);
        REQUIRE(etp.q == 2);
        REQUIRE(etp.q_prime == 1);
    }
}

TEST_CASE("edge twin partition fixtures", "[structure]") {
    SECTION("chorded six-cycle") {
        Graph g = fixtures::chorded_six_cycle();
        REQUIRE(twin_deletion(g).graph == g);  // no twins to delete
        EdgeTwinPartition etp = edge_twin_partition(g);
        REQUIRE(etp.q == 2);
        REQUIRE(etp.q_prime == 1);
        REQUIRE(etp.classes == std::vector<std::vector<Edge>>{{{1, 2}, {4, 5}}});
    }
    SECTION("reduced complete graph has no edges at all") {
        EdgeTwinPartition etp = edge_twin_partition(twin_deletion(complete_graph(6)).graph);
        REQUIRE(etp.q == 0);
        REQUIRE(etp.q_prime == 0);
    }
}

TEST_CASE("twin deletion invariance under representative choice", "[structure]") {
    std::mt19937_64 rng(2026);
    fixtures::RandomGraphs gen(13);
    for (int i = 0; i < 30; ++i) {
        Graph g = gen.next(2, 9);
        TwinPartition tp = twin_partition(g);
        EdgeTwinPartition canon = edge_twin_partition(twin_deletion(g).graph);
        for (int rep = 0; rep < 10; ++rep) {
            std::vector<int> freps, treps;
            for (const auto& c : tp.false_classes) freps.push_back(c[rng() % c.size()]);
            for (const auto& c : tp.true_classes) treps.push_back(c[rng() % c.size()]);
            EdgeTwinPartition etp = edge_twin_partition(twin_deletion(g, freps, treps).graph);
            REQUIRE(etp.q == canon.q);
            REQUIRE(etp.q_prime == canon.q_prime);
        }
    }
}

TEST_CASE("satellites", "[structure]") {
    auto star_sats = satellites(star_graph(3));
    REQUIRE(star_sats == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});
    REQUIRE(satellites(cycle_graph(5)).empty());
    REQUIRE(satellites(complete_graph(4)).empty());
    auto paw_sats = satellites(fixtures::paw());
    REQUIRE(paw_sats == std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {2, 3}});
}

TEST_CASE("tree statistics", "[structure]") {
    SECTION("star") {
        TreeStats ts = tree_stats(star_graph(4));
        REQUIRE(ts.leaf_count == 4);
        REQUIRE(ts.exterior_major_count == 1);
        REQUIRE_FALSE(ts.is_path);
    }
    SECTION("path") {
        TreeStats ts = tree_stats(path_graph(5));
        REQUIRE(ts.is_path);
        REQUIRE(ts.leaf_count == 2);
        REQUIRE(ts.exterior_major_count == 0);
    }
    SECTION("spider with three legs of length two") {
        TreeStats ts = tree_stats(fixtures::spider_3x2());
        REQUIRE(ts.leaf_count == 3);
        REQUIRE(ts.exterior_major_count == 1);
    }
    SECTION("double star") {
        TreeStats ts = tree_stats(fixtures::double_star_2_3());
        REQUIRE(ts.leaf_count == 5);
        REQUIRE(ts.exterior_major_count == 2);
    }
    SECTION("non-trees rejected") {
        REQUIRE_THROWS_AS(tree_stats(cycle_graph(4)), std::invalid_argument);
        REQUIRE_THROWS_AS(tree_stats(Graph::build(4, {{0, 1}, {2, 3}})), std::invalid_argument);
    }
}
