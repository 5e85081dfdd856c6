#pragma once

// Brute-force reference implementations used only by tests. Deliberately
// independent of the solver path: own BFS, own vertex-edge distances, plain
// subset scan in increasing cardinality.

#include <algorithm>
#include <limits>
#include <vector>

#include "edim/graph.hpp"

namespace oracle {

inline constexpr int kInf = std::numeric_limits<int>::max();

inline std::vector<int> bfs(const edim::Graph& g, int src) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), kInf);
    std::vector<int> q{src};
    dist[static_cast<std::size_t>(src)] = 0;
    for (std::size_t h = 0; h < q.size(); ++h)
        for (int w : g.neighbors(q[h]))
            if (dist[static_cast<std::size_t>(w)] == kInf) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(q[h])] + 1;
                q.push_back(w);
            }
    return dist;
}

// distance rows for all vertices
inline std::vector<std::vector<int>> all_dist(const edim::Graph& g) {
    std::vector<std::vector<int>> d;
    for (int v = 0; v < g.vertex_count(); ++v) d.push_back(bfs(g, v));
    return d;
}

inline bool subset_generates(const edim::Graph& g, const std::vector<std::vector<int>>& d,
                             const std::vector<int>& s) {
    const auto& edges = g.edges();
    for (std::size_t a = 0; a < edges.size(); ++a)
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
            bool separated = false;
            for (int w : s) {
                const auto& row = d[static_cast<std::size_t>(w)];
                int da = std::min(row[static_cast<std::size_t>(edges[a].u)],
                                  row[static_cast<std::size_t>(edges[a].v)]);
                int db = std::min(row[static_cast<std::size_t>(edges[b].u)],
                                  row[static_cast<std::size_t>(edges[b].v)]);
                if (da != db) {
                    separated = true;
                    break;
                }
            }
            if (!separated) return false;
        }
    return true;
}

template <typename Visit>
bool each_subset_of_size(int n, int k, Visit&& visit) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    if (k > n) return false;
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (visit(idx)) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

/// Minimum generator size of one connected graph by exhaustive subset scan.
inline int edim_connected(const edim::Graph& g) {
    if (g.edge_count() == 0) return 0;
    if (g.edge_count() == 1) return 1;
    auto d = all_dist(g);
    for (int k = 1; k <= g.vertex_count(); ++k) {
        bool found = each_subset_of_size(g.vertex_count(), k, [&](const std::vector<int>& s) {
            return subset_generates(g, d, s);
        });
        if (found) return k;
    }
    return g.vertex_count();  // unreachable: V - {v} always generates
}

// components via own DFS, then relabel and sum
inline int edim(const edim::Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    int total = 0;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> old_of_new;
        std::vector<int> new_of_old(static_cast<std::size_t>(n), -1);
        for (int v = 0; v < n; ++v)
            if (comp[static_cast<std::size_t>(v)] == c) {
                new_of_old[static_cast<std::size_t>(v)] = static_cast<int>(old_of_new.size());
                old_of_new.push_back(v);
            }
        std::vector<edim::Edge> edges;
        for (const edim::Edge& e : g.edges())
            if (comp[static_cast<std::size_t>(e.u)] == c)
                edges.push_back(edim::Edge{new_of_old[static_cast<std::size_t>(e.u)],
                                           new_of_old[static_cast<std::size_t>(e.v)]});
        total += edim_connected(edim::Graph::build(static_cast<int>(old_of_new.size()), edges));
    }
    return total;
}

/// Lexicographically smallest generator of the known minimum size on a
/// connected graph, by scanning k-subsets in lexicographic order.
inline std::vector<int> lex_min_basis_connected(const edim::Graph& g, int k) {
    if (g.edge_count() == 0) return {};
    if (g.edge_count() == 1) return {0};
    auto d = all_dist(g);
    std::vector<int> result;
    each_subset_of_size(g.vertex_count(), k, [&](const std::vector<int>& s) {
        if (subset_generates(g, d, s)) {
            result = s;
            return true;
        }
        return false;
    });
    return result;
}

/// Every minimum-size generator of a connected graph.
inline std::vector<std::vector<int>> all_min_bases_connected(const edim::Graph& g) {
    std::vector<std::vector<int>> out;
    if (g.edge_count() == 0) {
        out.push_back({});
        return out;
    }
    if (g.edge_count() == 1) {
        for (int v = 0; v < g.vertex_count(); ++v) out.push_back({v});
        return out;
    }
    const int k = edim_connected(g);
    auto d = all_dist(g);
    each_subset_of_size(g.vertex_count(), k, [&](const std::vector<int>& s) {
        if (subset_generates(g, d, s)) out.push_back(s);
        return false;
    });
    return out;
}

}  // namespace oracle
