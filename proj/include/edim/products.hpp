#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "edim/graph.hpp"

namespace edim {

// Index layouts for product graphs are fixed so that outputs are
// reproducible run to run:
//   join(G,H):    0..|G|-1 are G, |G|..|G|+|H|-1 are H
//   G[H]:         (g,h) -> g*|H| + h
//   corona(G,H):  G vertex g -> g; i-th vertex of copy H_g -> |G| + g*|H| + i
//   multipartite: parts occupy consecutive index ranges

/// Vertex (g,h) of a lexicographic product.
struct LexVertex {
    int g = 0;
    int h = 0;
    friend auto operator<=>(const LexVertex&, const LexVertex&) = default;
};

inline int lex_index(LexVertex a, int h_count) { return a.g * h_count + a.h; }
inline LexVertex lex_vertex(int flat, int h_count) { return LexVertex{flat / h_count, flat % h_count}; }

inline int corona_base_index(int g) { return g; }
inline int corona_copy_index(int g_count, int h_count, int g, int i) {
    return g_count + g * h_count + i;
}

namespace detail {
inline void require_nonempty(const Graph& g, const char* which) {
    if (g.vertex_count() == 0) throw std::invalid_argument(std::string(which) + " factor is empty");
}
}  // namespace detail

/// Disjoint union of G and H plus every cross edge.
inline Graph join(const Graph& g1, const Graph& g2) {
    detail::require_nonempty(g1, "first");
    detail::require_nonempty(g2, "second");
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(g1.edges().size() + g2.edges().size() +
                  static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2));
    for (const Edge& e : g1.edges()) edges.push_back(e);
    for (const Edge& e : g2.edges()) edges.push_back(Edge{e.u + n1, e.v + n1});
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b) edges.push_back(Edge{a, n1 + b});
    return Graph::build(n1 + n2, edges);
}

/// Lexicographic product G[H]: (g,h) ~ (g',h') iff gg' in E(G), or g = g'
/// and hh' in E(H).
inline Graph lexicographic(const Graph& g1, const Graph& g2) {
    detail::require_nonempty(g1, "first");
    detail::require_nonempty(g2, "second");
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(g1.edges().size() * static_cast<std::size_t>(n2) * static_cast<std::size_t>(n2) +
                  static_cast<std::size_t>(n1) * g2.edges().size());
    for (const Edge& e : g1.edges())
        for (int h1 = 0; h1 < n2; ++h1)
            for (int h2 = 0; h2 < n2; ++h2)
                edges.push_back(make_edge(e.u * n2 + h1, e.v * n2 + h2));
    for (int g = 0; g < n1; ++g)
        for (const Edge& e : g2.edges())
            edges.push_back(Edge{g * n2 + e.u, g * n2 + e.v});
    return Graph::build(n1 * n2, edges);
}

/// Corona product: one copy of G plus |V(G)| copies of H, the copy H_g fully
/// joined to g.
inline Graph corona(const Graph& g1, const Graph& g2) {
    detail::require_nonempty(g1, "first");
    detail::require_nonempty(g2, "second");
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(g1.edges().size() + static_cast<std::size_t>(n1) * (g2.edges().size() + static_cast<std::size_t>(n2)));
    for (const Edge& e : g1.edges()) edges.push_back(e);
    for (int g = 0; g < n1; ++g) {
        for (const Edge& e : g2.edges())
            edges.push_back(Edge{corona_copy_index(n1, n2, g, e.u), corona_copy_index(n1, n2, g, e.v)});
        for (int i = 0; i < n2; ++i)
            edges.push_back(Edge{g, corona_copy_index(n1, n2, g, i)});
    }
    return Graph::build(n1 + n1 * n2, edges);
}

/// Complete multipartite graph: parts of the given sizes on consecutive
/// index ranges, every cross-part pair adjacent.
inline Graph complete_multipartite(std::span<const int> parts) {
    if (parts.empty()) throw std::invalid_argument("multipartite: need at least one part");
    int n = 0;
    for (int r : parts) {
        if (r < 1) throw std::invalid_argument("multipartite: part sizes must be positive");
        n += r;
    }
    std::vector<int> offset;
    offset.reserve(parts.size() + 1);
    offset.push_back(0);
    for (int r : parts) offset.push_back(offset.back() + r);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (int a = offset[i]; a < offset[i + 1]; ++a)
                for (int b = offset[j]; b < offset[j + 1]; ++b) edges.push_back(Edge{a, b});
    return Graph::build(n, edges);
}

inline Graph complete_multipartite(std::initializer_list<int> parts) {
    return complete_multipartite(std::span<const int>(parts.begin(), parts.size()));
}

/// Closed-form distance in G[H]:
///   d((g,h),(g',h')) = d_G(g,g')        if g != g'
///                      min{2, d_H(h,h')} if g = g'
/// Valid when G is connected with at least two vertices (then every vertex
/// of a layer has a neighbor outside it, so unreachable-in-H collapses to 2).
/// BFS on the constructed product is the ground truth; this is the validated
/// fast path.
inline int lex_distance(const DistanceMatrix& dist_g, const DistanceMatrix& dist_h, LexVertex a,
                        LexVertex b) {
    if (!dist_g.connected() || dist_g.size() < 2)
        throw std::invalid_argument("lex_distance: first factor must be connected with >= 2 vertices");
    if (a.g != b.g) return dist_g.at(a.g, b.g);
    return std::min(2, dist_h.at(a.h, b.h));
}

}  // namespace edim
