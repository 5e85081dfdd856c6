#pragma once

// Small graphs and seeded random instances shared by the test suites.

#include <cstdint>
#include <random>

#include "edim/families.hpp"
#include "edim/graph.hpp"

namespace fixtures {

inline edim::Graph paw() { return edim::Graph::build(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

inline edim::Graph p3_plus_isolated() { return edim::Graph::build(4, {{0, 1}, {1, 2}}); }

/// Six-cycle u1..u6 with chords u2u6 and u3u5 (0-indexed: 1-5 and 2-4).
inline edim::Graph chorded_six_cycle() {
    return edim::Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {1, 5}, {2, 4}});
}

/// Two cliques Q = {0,1}, Q' = {4,5} and an independent set N = {2,3}, with
/// every edge between Q u Q' and N.
inline edim::Graph clique_independent_clique() {
    return edim::Graph::build(6, {{0, 1},
                                  {4, 5},
                                  {0, 2},
                                  {0, 3},
                                  {1, 2},
                                  {1, 3},
                                  {2, 4},
                                  {2, 5},
                                  {3, 4},
                                  {3, 5}});
}

/// Two adjacent centers, one with two and one with three leaves.
inline edim::Graph double_star_2_3() {
    return edim::Graph::build(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {1, 6}});
}

/// Center 0 with three legs of length two.
inline edim::Graph spider_3x2() {
    return edim::Graph::build(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

/// Deterministic stream of random graphs for property tests.
struct RandomGraphs {
    std::mt19937_64 rng;
    explicit RandomGraphs(std::uint64_t seed) : rng(seed) {}

    edim::Graph next(int min_n, int max_n) {
        const int n = min_n + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - min_n + 1));
        const double p = 0.15 + 0.10 * static_cast<double>(rng() % 8);
        return edim::gnp_graph(n, p, rng());
    }
};

}  // namespace fixtures
