#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <limits>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "edim/bitset.hpp"

namespace edim {

/// Sentinel distance between vertices in different components. Strictly
/// greater than any finite hop count under ordinary comparison; two
/// unreachable values compare equal.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

inline bool reachable(int d) { return d != kUnreachable; }

/// Undirected edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// safe to share read-only across threads. The edge list is kept sorted
/// lexicographically and edge indices refer to positions in it. Adjacency is
/// stored both as sorted neighbor lists and as packed bit rows (the latter
/// makes neighborhood-equality tests cheap).
class Graph {
public:
    Graph() = default;

    static Graph build(int n, std::span<const Edge> edge_pairs) {
        if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
        Graph g;
        g.n_ = n;
        g.edges_.reserve(edge_pairs.size());
        for (const Edge& e : edge_pairs) {
            if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
                throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(e.u) +
                                            "," + std::to_string(e.v) + ")");
            if (e.u == e.v)
                throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(e.u));
            g.edges_.push_back(make_edge(e.u, e.v));
        }
        std::sort(g.edges_.begin(), g.edges_.end());
        g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
        g.finish();
        return g;
    }

    static Graph build(int n, std::initializer_list<Edge> edge_pairs) {
        return build(n, std::span<const Edge>(edge_pairs.begin(), edge_pairs.size()));
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int idx) const { return edges_[static_cast<std::size_t>(idx)]; }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    /// Open neighborhood as a bit row.
    const Bitset& neighbor_bits(int v) const { return nbits_[static_cast<std::size_t>(v)]; }
    /// Closed neighborhood as a bit row.
    const Bitset& closed_neighbor_bits(int v) const { return cbits_[static_cast<std::size_t>(v)]; }

    bool has_edge(int u, int v) const {
        return u != v && u >= 0 && v >= 0 && u < n_ && v < n_ && nbits_[static_cast<std::size_t>(u)].test(v);
    }

    /// Position of (u,v) in the sorted edge list, or -1.
    int edge_index(int u, int v) const {
        Edge e = make_edge(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void finish() {
        adj_.assign(static_cast<std::size_t>(n_), {});
        nbits_.assign(static_cast<std::size_t>(n_), Bitset(n_));
        cbits_.assign(static_cast<std::size_t>(n_), Bitset(n_));
        for (const Edge& e : edges_) {
            adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
            adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
            nbits_[static_cast<std::size_t>(e.u)].set(e.v);
            nbits_[static_cast<std::size_t>(e.v)].set(e.u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
        for (int v = 0; v < n_; ++v) {
            cbits_[static_cast<std::size_t>(v)] = nbits_[static_cast<std::size_t>(v)];
            cbits_[static_cast<std::size_t>(v)].set(v);
        }
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<Bitset> nbits_;
    std::vector<Bitset> cbits_;
};

inline Graph build_graph(int n, std::span<const Edge> edge_pairs) { return Graph::build(n, edge_pairs); }

/// All-pairs hop distances; kUnreachable across components.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<int> d) : n_(n), d_(std::move(d)) {
        connected_ = true;
        for (int x : d_)
            if (!reachable(x)) {
                connected_ = false;
                break;
            }
    }

    int size() const { return n_; }
    int at(int u, int v) const { return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)]; }
    bool connected() const { return connected_; }

private:
    int n_ = 0;
    bool connected_ = true;
    std::vector<int> d_;
};

inline DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> d(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kUnreachable);
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        int* row = d.data() + static_cast<std::size_t>(s) * static_cast<std::size_t>(n);
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int w : g.neighbors(u)) {
                if (row[w] == kUnreachable) {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    return DistanceMatrix(n, std::move(d));
}

/// d(e, w) = min over the two endpoints of e of their distance to w.
inline int vertex_edge_distance(const DistanceMatrix& d, Edge e, int w) {
    return std::min(d.at(e.u, w), d.at(e.v, w));
}

/// Connected components as disjoint sorted vertex sets, ordered by smallest member.
inline std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[static_cast<std::size_t>(s)] = id;
        stack.assign(1, s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            out[static_cast<std::size_t>(id)].push_back(u);
            for (int w : g.neighbors(u)) {
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out[static_cast<std::size_t>(id)].begin(), out[static_cast<std::size_t>(id)].end());
    }
    return out;
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_of_new;  // new index -> original vertex
    std::vector<int> new_of_old;  // original vertex -> new index, -1 if absent
};

/// Subgraph induced by the given vertices, relabeled 0..k-1 in ascending
/// order of the original indices.
inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    if (vertices.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
    InducedSubgraph r;
    r.old_of_new.assign(vertices.begin(), vertices.end());
    std::sort(r.old_of_new.begin(), r.old_of_new.end());
    r.old_of_new.erase(std::unique(r.old_of_new.begin(), r.old_of_new.end()), r.old_of_new.end());
    r.new_of_old.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < r.old_of_new.size(); ++i) {
        int v = r.old_of_new[i];
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        r.new_of_old[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    std::vector<Edge> kept;
    for (const Edge& e : g.edges()) {
        int nu = r.new_of_old[static_cast<std::size_t>(e.u)];
        int nv = r.new_of_old[static_cast<std::size_t>(e.v)];
        if (nu != -1 && nv != -1) kept.push_back(make_edge(nu, nv));
    }
    r.graph = Graph::build(static_cast<int>(r.old_of_new.size()), kept);
    return r;
}

}  // namespace edim
