#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "edim/graph.hpp"

namespace edim {

// ---- total domination ----

/// True iff every vertex of g (members of s included) has a neighbor in s.
inline bool is_total_dominating(const Graph& g, std::span<const int> s) {
    Bitset dominated(g.vertex_count());
    for (int v : s) dominated |= g.neighbor_bits(v);
    return dominated == Bitset::full(g.vertex_count());
}

struct TotalDomination {
    enum class Status { Value, Undefined, CapExceeded };
    Status status = Status::Value;
    int value = 0;  // meaningful only when status == Value
};

namespace detail {
template <typename F>
bool for_each_combination(int n, int k, F&& visit) {
    // visit(span) -> bool, true = stop
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (k > n) return false;
    while (true) {
        if (visit(std::span<const int>(idx))) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}
}  // namespace detail

/// Minimum size of a total dominating set, by subset enumeration in
/// increasing cardinality. Undefined when g has an isolated vertex; the
/// search is capped (sets larger than cap report CapExceeded).
inline TotalDomination total_domination_number(const Graph& g, int cap = 8) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) return {TotalDomination::Status::Undefined, 0};
    const Bitset all = Bitset::full(n);
    for (int k = 2; k <= std::min(n, cap); ++k) {
        bool found = detail::for_each_combination(n, k, [&](std::span<const int> s) {
            Bitset dom(n);
            for (int v : s) dom |= g.neighbor_bits(v);
            return dom == all;
        });
        if (found) return {TotalDomination::Status::Value, k};
    }
    if (n <= cap) return {TotalDomination::Status::Value, n};  // V itself always works here
    return {TotalDomination::Status::CapExceeded, 0};
}

/// True iff every vertex u has a neighbor v such that {u,v} is total
/// dominating. Such a pair has size 2, which forces the total domination
/// number to be exactly 2, so no separate gamma_t computation is needed.
inline bool has_total_dominating_pair_cover(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    const Bitset all = Bitset::full(n);
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) == 0) return false;
        bool ok = false;
        for (int v : g.neighbors(u)) {
            Bitset dom = g.neighbor_bits(u);
            dom |= g.neighbor_bits(v);
            if (dom == all) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

// ---- twins ----

/// Nontrivial equivalence classes of the false-twin (equal open
/// neighborhoods) and true-twin (equal closed neighborhoods) relations,
/// with the class-size sums f, t and the reduced counts f' = f - #classes,
/// t' = t - #classes.
struct TwinPartition {
    std::vector<std::vector<int>> false_classes;
    std::vector<std::vector<int>> true_classes;
    int f = 0;
    int f_prime = 0;
    int t = 0;
    int t_prime = 0;
};

namespace detail {
inline std::vector<std::vector<int>> group_by_bits(const std::vector<Bitset>& key) {
    std::vector<int> order(key.size());
    for (std::size_t i = 0; i < key.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Bitset& ka = key[static_cast<std::size_t>(a)];
        const Bitset& kb = key[static_cast<std::size_t>(b)];
        if (ka != kb) return ka < kb;
        return a < b;
    });
    std::vector<std::vector<int>> classes;
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j < order.size() &&
               key[static_cast<std::size_t>(order[j])] == key[static_cast<std::size_t>(order[i])])
            ++j;
        if (j - i >= 2) classes.emplace_back(order.begin() + static_cast<long>(i),
                                             order.begin() + static_cast<long>(j));
        i = j;
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}
}  // namespace detail

inline TwinPartition twin_partition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Bitset> open, closed;
    open.reserve(static_cast<std::size_t>(n));
    closed.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        open.push_back(g.neighbor_bits(v));
        closed.push_back(g.closed_neighbor_bits(v));
    }
    TwinPartition tp;
    tp.false_classes = detail::group_by_bits(open);
    tp.true_classes = detail::group_by_bits(closed);
    for (const auto& c : tp.false_classes) tp.f += static_cast<int>(c.size());
    for (const auto& c : tp.true_classes) tp.t += static_cast<int>(c.size());
    tp.f_prime = tp.f - static_cast<int>(tp.false_classes.size());
    tp.t_prime = tp.t - static_cast<int>(tp.true_classes.size());
    return tp;
}

struct TwinDeletion {
    Graph graph;
    std::vector<int> kept_old_ids;  // new index -> original vertex
    std::vector<int> new_of_old;    // original vertex -> new index, -1 if deleted
};

namespace detail {
inline TwinDeletion delete_twins(const Graph& g, const TwinPartition& tp,
                                 std::span<const int> false_reps, std::span<const int> true_reps) {
    if (false_reps.size() != tp.false_classes.size() || true_reps.size() != tp.true_classes.size())
        throw std::invalid_argument("twin_deletion: one representative per nontrivial class required");
    std::vector<bool> drop(static_cast<std::size_t>(g.vertex_count()), false);
    auto apply = [&](const std::vector<std::vector<int>>& classes, std::span<const int> reps) {
        for (std::size_t i = 0; i < classes.size(); ++i) {
            const auto& cls = classes[i];
            if (std::find(cls.begin(), cls.end(), reps[i]) == cls.end())
                throw std::invalid_argument("twin_deletion: representative not in its class");
            for (int v : cls)
                if (v != reps[i]) drop[static_cast<std::size_t>(v)] = true;
        }
    };
    apply(tp.false_classes, false_reps);
    apply(tp.true_classes, true_reps);
    std::vector<int> kept;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!drop[static_cast<std::size_t>(v)]) kept.push_back(v);
    InducedSubgraph sub = induced_subgraph(g, kept);
    return TwinDeletion{std::move(sub.graph), std::move(sub.old_of_new), std::move(sub.new_of_old)};
}
}  // namespace detail

/// Delete all vertices but one in every nontrivial twin class (both
/// families). Canonical form keeps the minimum-index vertex per class; the
/// resulting edge-twin counts are representative-independent, which the
/// explicit-representative overload exists to exercise.
inline TwinDeletion twin_deletion(const Graph& g) {
    TwinPartition tp = twin_partition(g);
    std::vector<int> freps, treps;
    for (const auto& c : tp.false_classes) freps.push_back(c.front());
    for (const auto& c : tp.true_classes) treps.push_back(c.front());
    return detail::delete_twins(g, tp, freps, treps);
}

inline TwinDeletion twin_deletion(const Graph& g, std::span<const int> false_reps,
                                  std::span<const int> true_reps) {
    return detail::delete_twins(g, twin_partition(g), false_reps, true_reps);
}

// ---- twin edges ----

/// Nontrivial classes of the twin-edge relation: uv ~ xy iff
/// N[u] u N[v] = N[x] u N[y]. q is the sum of class sizes, q' = q - #classes.
struct EdgeTwinPartition {
    std::vector<std::vector<Edge>> classes;
    int q = 0;
    int q_prime = 0;
};

inline EdgeTwinPartition edge_twin_partition(const Graph& g) {
    std::vector<Bitset> key;
    key.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        Bitset b = g.closed_neighbor_bits(e.u);
        b |= g.closed_neighbor_bits(e.v);
        key.push_back(std::move(b));
    }
    EdgeTwinPartition etp;
    for (const auto& idx_class : detail::group_by_bits(key)) {
        std::vector<Edge> cls;
        cls.reserve(idx_class.size());
        for (int ei : idx_class) cls.push_back(g.edge(ei));
        std::sort(cls.begin(), cls.end());
        etp.classes.push_back(std::move(cls));
    }
    std::sort(etp.classes.begin(), etp.classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (const auto& c : etp.classes) etp.q += static_cast<int>(c.size());
    etp.q_prime = etp.q - static_cast<int>(etp.classes.size());
    return etp;
}

// ---- satellites ----

/// All ordered pairs (u, v) with N[v] strictly contained in N[u]
/// (v is then called a satellite of u). Sorted lexicographically.
inline std::vector<std::pair<int, int>> satellites(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u) {
        const Bitset& nu = g.closed_neighbor_bits(u);
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            const Bitset& nv = g.closed_neighbor_bits(v);
            if (nu.contains_all(nv) && nu != nv) out.emplace_back(u, v);
        }
    }
    return out;
}

// ---- tree statistics ----

struct TreeStats {
    int leaf_count = 0;            // n1
    int exterior_major_count = 0;  // majors (degree >= 3) with >= 1 terminal leaf
    bool is_path = false;
};

inline bool is_tree(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    if (g.edge_count() != g.vertex_count() - 1) return false;
    return components(g).size() == 1;
}

/// Leaf count, exterior-major-vertex count and path flag of a tree. A major
/// vertex (degree >= 3) is exterior when some leaf is strictly closer to it
/// than to every other major vertex; in a tree that leaf's unique chain walk
/// reaches exactly one nearest major, so no tie-break is needed.
inline TreeStats tree_stats(const Graph& g) {
    if (!is_tree(g)) throw std::invalid_argument("tree_stats: input is not a tree");
    const int n = g.vertex_count();
    TreeStats ts;
    std::vector<int> terminal_degree(static_cast<std::size_t>(n), 0);
    bool has_major = false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 3) has_major = true;
    for (int leaf = 0; leaf < n; ++leaf) {
        if (g.degree(leaf) != 1) continue;
        ++ts.leaf_count;
        if (!has_major) continue;
        int prev = leaf, cur = g.neighbors(leaf)[0];
        while (g.degree(cur) == 2) {
            int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
            prev = cur;
            cur = nxt;
        }
        // a tree containing a major vertex cannot end this walk at a leaf
        ++terminal_degree[static_cast<std::size_t>(cur)];
    }
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 3 && terminal_degree[static_cast<std::size_t>(v)] > 0)
            ++ts.exterior_major_count;
    ts.is_path = !has_major;
    return ts;
}

}  // namespace edim
