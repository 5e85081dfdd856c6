#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "edim/graph.hpp"

namespace edim {

// Exhaustive generation of small graphs up to isomorphism. Graphs are grown
// one vertex at a time (every graph on n vertices is some graph on n-1
// vertices plus one vertex attached to a subset), deduplicated by canonical
// form. Trees are grown by leaf attachment and deduplicated by a rooted
// encoding minimized over all roots.

namespace detail {

/// Upper-triangle adjacency bits in pair-lex order, packed MSB-first.
inline std::uint64_t triangle_bits(const Graph& g, const std::vector<int>& perm) {
    std::uint64_t sig = 0;
    const int n = g.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            sig = (sig << 1) | (g.has_edge(perm[static_cast<std::size_t>(i)],
                                           perm[static_cast<std::size_t>(j)])
                                    ? 1u
                                    : 0u);
    return sig;
}

inline Graph graph_of_triangle_bits(int n, std::uint64_t sig) {
    std::vector<Edge> edges;
    int bit = n * (n - 1) / 2;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            --bit;
            if ((sig >> bit) & 1u) edges.push_back(Edge{i, j});
        }
    return Graph::build(n, edges);
}

}  // namespace detail

/// Minimum upper-triangle signature over all vertex permutations. Two graphs
/// on the same number of vertices are isomorphic iff their signatures match.
/// Supported for n <= 8 (factorial scan).
inline std::uint64_t canonical_signature(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 8) throw std::invalid_argument("canonical_signature: supported for n <= 8");
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, detail::triangle_bits(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// All graphs on exactly n vertices up to isomorphism, each in canonical
/// labeling, sorted by signature. n <= 7.
inline std::vector<Graph> all_graphs_up_to_iso(int n, bool connected_only) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("all_graphs_up_to_iso: supported for 1 <= n <= 7");
    std::vector<std::set<std::uint64_t>> level(static_cast<std::size_t>(n + 1));
    level[1].insert(0);
    for (int k = 2; k <= n; ++k) {
        for (std::uint64_t parent_sig : level[static_cast<std::size_t>(k - 1)]) {
            Graph parent = detail::graph_of_triangle_bits(k - 1, parent_sig);
            for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
                std::vector<Edge> edges = parent.edges();
                for (int v = 0; v < k - 1; ++v)
                    if ((mask >> v) & 1u) edges.push_back(Edge{v, k - 1});
                Graph cand = Graph::build(k, edges);
                level[static_cast<std::size_t>(k)].insert(canonical_signature(cand));
            }
        }
    }
    std::vector<Graph> out;
    for (std::uint64_t sig : level[static_cast<std::size_t>(n)]) {
        Graph g = detail::graph_of_triangle_bits(n, sig);
        if (connected_only && components(g).size() != 1) continue;
        out.push_back(std::move(g));
    }
    return out;
}

/// All graphs on 1..max_n vertices up to isomorphism.
inline std::vector<Graph> all_graphs_up_to_iso_max(int max_n, bool connected_only) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n)
        for (Graph& g : all_graphs_up_to_iso(n, connected_only)) out.push_back(std::move(g));
    return out;
}

namespace detail {

inline std::string rooted_encoding(const Graph& g, int v, int parent) {
    std::vector<std::string> child;
    for (int w : g.neighbors(v))
        if (w != parent) child.push_back(rooted_encoding(g, w, v));
    std::sort(child.begin(), child.end());
    std::string out = "(";
    for (const auto& c : child) out += c;
    out += ")";
    return out;
}

/// Free-tree canonical key: rooted encoding minimized over all roots.
inline std::string tree_key(const Graph& g) {
    std::string best;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::string enc = rooted_encoding(g, v, -1);
        if (best.empty() || enc < best) best = std::move(enc);
    }
    return best;
}

}  // namespace detail

/// All trees on exactly n vertices up to isomorphism (paths included),
/// deterministically ordered. n <= 16.
inline std::vector<Graph> all_trees_up_to_iso(int n) {
    if (n < 1 || n > 16)
        throw std::invalid_argument("all_trees_up_to_iso: supported for 1 <= n <= 16");
    std::map<std::string, Graph> cur;
    Graph single = Graph::build(1, {});
    cur.emplace(detail::tree_key(single), single);
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, Graph> next;
        for (const auto& [key, parent] : cur) {
            for (int attach = 0; attach < k - 1; ++attach) {
                std::vector<Edge> edges = parent.edges();
                edges.push_back(Edge{attach, k - 1});
                Graph cand = Graph::build(k, edges);
                next.emplace(detail::tree_key(cand), cand);
            }
        }
        cur = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(cur.size());
    for (auto& [key, g] : cur) out.push_back(std::move(g));
    return out;
}

/// All trees on 2..max_n vertices up to isomorphism.
inline std::vector<Graph> all_trees_up_to_iso_max(int max_n) {
    std::vector<Graph> out;
    for (int n = 2; n <= max_n; ++n)
        for (Graph& g : all_trees_up_to_iso(n)) out.push_back(std::move(g));
    return out;
}

}  // namespace edim
