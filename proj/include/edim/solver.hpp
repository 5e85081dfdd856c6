#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "edim/graph.hpp"

namespace edim {

// ---- vertex-to-edge distance table ----

/// |V| x |E| table of vertex-edge distances (min over the edge endpoints).
class EdgeDistanceTable {
public:
    EdgeDistanceTable() = default;

    static EdgeDistanceTable build(const Graph& g) { return build(g, all_pairs_distances(g)); }

    static EdgeDistanceTable build(const Graph& g, const DistanceMatrix& dm) {
        EdgeDistanceTable t;
        t.n_ = g.vertex_count();
        t.m_ = g.edge_count();
        t.d_.resize(static_cast<std::size_t>(t.n_) * static_cast<std::size_t>(t.m_));
        for (int w = 0; w < t.n_; ++w)
            for (int e = 0; e < t.m_; ++e)
                t.d_[static_cast<std::size_t>(w) * static_cast<std::size_t>(t.m_) +
                     static_cast<std::size_t>(e)] = vertex_edge_distance(dm, g.edge(e), w);
        return t;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int at(int w, int e) const {
        return d_[static_cast<std::size_t>(w) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(e)];
    }

private:
    int n_ = 0, m_ = 0;
    std::vector<int> d_;
};

/// w tells the two edges apart iff its distances to them differ
/// (unreachable compares equal to unreachable).
inline bool distinguishes(const EdgeDistanceTable& t, int w, int e1, int e2) {
    return t.at(w, e1) != t.at(w, e2);
}

// ---- generator check ----

struct GeneratorCheck {
    bool ok = false;
    std::optional<std::pair<Edge, Edge>> failing_pair;  // first pair (in edge-index order) no member of s separates
    explicit operator bool() const { return ok; }
};

/// True iff every unordered pair of edges is distinguished by some member
/// of s. s must be nonempty.
inline GeneratorCheck is_edge_metric_generator(const Graph& g, std::span<const int> s) {
    if (s.empty()) throw std::invalid_argument("is_edge_metric_generator: empty set");
    for (int v : s)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("is_edge_metric_generator: vertex out of range");
    EdgeDistanceTable t = EdgeDistanceTable::build(g);
    const int m = g.edge_count();
    for (int e1 = 0; e1 < m; ++e1)
        for (int e2 = e1 + 1; e2 < m; ++e2) {
            bool separated = false;
            for (int w : s)
                if (distinguishes(t, w, e1, e2)) {
                    separated = true;
                    break;
                }
            if (!separated) return {false, std::make_pair(g.edge(e1), g.edge(e2))};
        }
    return {true, std::nullopt};
}

// ---- exact solver ----

struct SolveOptions {
    std::int64_t time_budget_ms = 0;  // 0 = unlimited
};

struct EdimResult {
    int value = 0;
    std::vector<int> basis;  // sorted; lexicographically smallest minimum basis when exact
    long long pairs_total = 0;
    enum class Method { Exact, GreedyUpper } method = Method::Exact;
    std::optional<std::vector<std::vector<int>>> all_bases;
    bool all_bases_capped = false;
};

struct AllBases {
    int value = 0;
    std::vector<std::vector<int>> bases;
    bool capped = false;
};

namespace detail {

struct Deadline {
    std::chrono::steady_clock::time_point at{};
    bool enabled = false;
    mutable int tick = 0;

    static Deadline from_budget(std::int64_t ms) {
        Deadline d;
        if (ms > 0) {
            d.enabled = true;
            d.at = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
        }
        return d;
    }
    bool expired_now() const { return enabled && std::chrono::steady_clock::now() >= at; }
    // cheap periodic check
    bool expired() const {
        if (!enabled) return false;
        if ((++tick & 1023) != 0) return false;
        return expired_now();
    }
};

struct BudgetExceeded {};

/// Hitting-set view of one connected component with >= 2 edges: one
/// constraint per unordered edge pair, candidate set = vertices whose two
/// table entries differ. Constraints are deduplicated; multiplicity is kept
/// so greedy tie counts match per-pair counting.
struct PairCoverProblem {
    int n = 0;
    std::vector<Bitset> constraints;
    std::vector<long long> multiplicity;
    std::vector<std::vector<int>> hitters;             // constraint -> candidate vertices
    std::vector<std::vector<int>> constraints_of;      // vertex -> constraint indices

    static PairCoverProblem build(const Graph& g, const Deadline& dl) {
        PairCoverProblem p;
        p.n = g.vertex_count();
        EdgeDistanceTable t = EdgeDistanceTable::build(g);
        const int m = g.edge_count();
        std::vector<Bitset> raw;
        raw.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m - 1) / 2);
        for (int e1 = 0; e1 < m; ++e1)
            for (int e2 = e1 + 1; e2 < m; ++e2) {
                if (dl.expired()) throw BudgetExceeded{};
                Bitset cand(p.n);
                for (int w = 0; w < p.n; ++w)
                    if (distinguishes(t, w, e1, e2)) cand.set(w);
                raw.push_back(std::move(cand));
            }
        std::sort(raw.begin(), raw.end());
        for (std::size_t i = 0; i < raw.size();) {
            std::size_t j = i;
            while (j < raw.size() && raw[j] == raw[i]) ++j;
            p.constraints.push_back(raw[i]);
            p.multiplicity.push_back(static_cast<long long>(j - i));
            i = j;
        }
        p.hitters.resize(p.constraints.size());
        p.constraints_of.resize(static_cast<std::size_t>(p.n));
        for (std::size_t c = 0; c < p.constraints.size(); ++c) {
            p.constraints[c].for_each_set([&](int w) {
                p.hitters[c].push_back(w);
                p.constraints_of[static_cast<std::size_t>(w)].push_back(static_cast<int>(c));
            });
        }
        return p;
    }
};

/// Greedy cover: repeatedly take the vertex separating the most not-yet
/// separated pairs, ties to the lowest index.
inline std::vector<int> greedy_cover(const PairCoverProblem& p) {
    const std::size_t nc = p.constraints.size();
    std::vector<bool> covered(nc, false);
    std::size_t remaining = nc;
    std::vector<int> picked;
    std::vector<long long> gain(static_cast<std::size_t>(p.n));
    while (remaining > 0) {
        std::fill(gain.begin(), gain.end(), 0);
        for (std::size_t c = 0; c < nc; ++c) {
            if (covered[c]) continue;
            for (int w : p.hitters[c]) gain[static_cast<std::size_t>(w)] += p.multiplicity[c];
        }
        int best = 0;
        for (int w = 1; w < p.n; ++w)
            if (gain[static_cast<std::size_t>(w)] > gain[static_cast<std::size_t>(best)]) best = w;
        picked.push_back(best);
        for (int c : p.constraints_of[static_cast<std::size_t>(best)]) {
            if (!covered[static_cast<std::size_t>(c)]) {
                covered[static_cast<std::size_t>(c)] = true;
                --remaining;
            }
        }
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

/// Branch and bound for the minimum hitting set size. Branches on an
/// uncovered constraint with the fewest available candidates; candidates
/// tried in ascending order and excluded from later siblings. Lower bound:
/// greedy packing of disjoint uncovered candidate sets.
class MinCoverSearch {
public:
    MinCoverSearch(const PairCoverProblem& p, const Deadline& dl) : p_(p), dl_(dl) {}

    int solve(int upper_bound_hint) {
        best_ = upper_bound_hint;
        hit_count_.assign(p_.constraints.size(), 0);
        excluded_ = Bitset(p_.n);
        chosen_count_ = 0;
        descend();
        return best_;
    }

private:
    const PairCoverProblem& p_;
    const Deadline& dl_;
    int best_ = 0;
    std::vector<int> hit_count_;
    Bitset excluded_{};
    int chosen_count_ = 0;

    int lower_bound() const {
        Bitset used(p_.n);
        int lb = 0;
        for (std::size_t c = 0; c < p_.constraints.size(); ++c) {
            if (hit_count_[c] > 0) continue;
            bool disjoint = true;
            for (int w : p_.hitters[c])
                if (!excluded_.test(w) && used.test(w)) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            bool viable = false;
            for (int w : p_.hitters[c])
                if (!excluded_.test(w)) {
                    used.set(w);
                    viable = true;
                }
            if (viable) ++lb;
        }
        return lb;
    }

    void descend() {
        if (dl_.expired()) throw BudgetExceeded{};
        int branch_c = -1, branch_width = 0;
        for (std::size_t c = 0; c < p_.constraints.size(); ++c) {
            if (hit_count_[c] > 0) continue;
            int width = 0;
            for (int w : p_.hitters[c])
                if (!excluded_.test(w)) ++width;
            if (width == 0) return;  // infeasible under exclusions
            if (branch_c == -1 || width < branch_width) {
                branch_c = static_cast<int>(c);
                branch_width = width;
                if (width == 1) break;
            }
        }
        if (branch_c == -1) {  // everything covered
            best_ = std::min(best_, chosen_count_);
            return;
        }
        if (chosen_count_ + 1 >= best_) return;
        if (chosen_count_ + lower_bound() >= best_) return;

        std::vector<int> local_excluded;
        for (int w : p_.hitters[static_cast<std::size_t>(branch_c)]) {
            if (excluded_.test(w)) continue;
            // take w
            ++chosen_count_;
            for (int c : p_.constraints_of[static_cast<std::size_t>(w)]) ++hit_count_[static_cast<std::size_t>(c)];
            excluded_.set(w);  // also bars w below this node; re-taking is pointless
            descend();
            for (int c : p_.constraints_of[static_cast<std::size_t>(w)]) --hit_count_[static_cast<std::size_t>(c)];
            --chosen_count_;
            // leave w excluded for the remaining siblings
            local_excluded.push_back(w);
            if (chosen_count_ + 1 >= best_) break;
        }
        for (int w : local_excluded) excluded_.reset(w);
    }
};

/// Depth-first enumeration of all hitting sets of exactly the target size,
/// in lexicographic order of the sorted vertex sequences. Minimality of the
/// target guarantees every such set is irredundant, so a choice that covers
/// nothing new can be skipped. With stop_after_first, the first set found is
/// the lexicographically smallest.
class FixedSizeCoverEnum {
public:
    FixedSizeCoverEnum(const PairCoverProblem& p, int target, const Deadline& dl)
        : p_(p), target_(target), dl_(dl) {}

    // returns true if the cap was hit
    bool run(std::vector<std::vector<int>>& out, long long cap, bool stop_after_first) {
        out_ = &out;
        cap_ = cap;
        stop_after_first_ = stop_after_first;
        capped_ = false;
        hit_count_.assign(p_.constraints.size(), 0);
        uncovered_ = static_cast<long long>(p_.constraints.size());
        acc_.clear();
        dfs(0);
        return capped_;
    }

private:
    const PairCoverProblem& p_;
    int target_;
    const Deadline& dl_;
    std::vector<std::vector<int>>* out_ = nullptr;
    long long cap_ = 0;
    bool stop_after_first_ = false;
    bool capped_ = false;
    std::vector<int> hit_count_;
    long long uncovered_ = 0;
    std::vector<int> acc_;

    bool done() const {
        return capped_ || (stop_after_first_ && !out_->empty());
    }

    bool feasible_from(int next) const {
        // every uncovered constraint needs a candidate >= next
        Bitset used(p_.n);
        int packing = 0;
        for (std::size_t c = 0; c < p_.constraints.size(); ++c) {
            if (hit_count_[c] > 0) continue;
            bool has = false, disjoint = true;
            for (int w : p_.hitters[c]) {
                if (w < next) continue;
                has = true;
                if (used.test(w)) disjoint = false;
            }
            if (!has) return false;
            if (disjoint) {
                for (int w : p_.hitters[c])
                    if (w >= next) used.set(w);
                ++packing;
            }
            if (packing > target_ - static_cast<int>(acc_.size())) return false;
        }
        return true;
    }

    void dfs(int next) {
        if (done()) return;
        if (dl_.expired()) throw BudgetExceeded{};
        if (uncovered_ == 0) {
            // target minimality means we land here with exactly target_ picks
            if (static_cast<int>(acc_.size()) == target_) {
                if (static_cast<long long>(out_->size()) >= cap_) {
                    capped_ = true;
                    return;
                }
                out_->push_back(acc_);
            }
            return;
        }
        const int remaining = target_ - static_cast<int>(acc_.size());
        if (remaining <= 0) return;
        if (!feasible_from(next)) return;
        for (int w = next; w <= p_.n - remaining; ++w) {
            int newly = 0;
            for (int c : p_.constraints_of[static_cast<std::size_t>(w)])
                if (hit_count_[static_cast<std::size_t>(c)] == 0) ++newly;
            if (newly == 0) continue;  // irredundancy: w must separate something new
            acc_.push_back(w);
            for (int c : p_.constraints_of[static_cast<std::size_t>(w)])
                if (hit_count_[static_cast<std::size_t>(c)]++ == 0) --uncovered_;
            dfs(w + 1);
            for (int c : p_.constraints_of[static_cast<std::size_t>(w)])
                if (--hit_count_[static_cast<std::size_t>(c)] == 0) ++uncovered_;
            acc_.pop_back();
            if (done()) return;
        }
    }
};

struct ComponentSolution {
    int value = 0;
    std::vector<int> basis;  // component-local labels
};

/// Exact solve of one connected component (already relabeled 0..k-1).
inline ComponentSolution solve_component(const Graph& g, const Deadline& dl) {
    const int m = g.edge_count();
    if (m == 0) return {0, {}};
    if (m == 1) return {1, {0}};  // no pairs; any single vertex generates
    PairCoverProblem p = PairCoverProblem::build(g, dl);
    std::vector<int> greedy = greedy_cover(p);
    MinCoverSearch search(p, dl);
    const int opt = search.solve(static_cast<int>(greedy.size()));
    std::vector<std::vector<int>> first;
    FixedSizeCoverEnum en(p, opt, dl);
    en.run(first, 1, /*stop_after_first=*/true);
    return {opt, first.at(0)};
}

inline std::vector<int> map_to_parent(std::span<const int> local, std::span<const int> old_of_new) {
    std::vector<int> out;
    out.reserve(local.size());
    for (int v : local) out.push_back(old_of_new[static_cast<std::size_t>(v)]);
    return out;
}

inline long long pair_count(const Graph& g) {
    const long long m = g.edge_count();
    return m * (m - 1) / 2;
}

inline EdimResult greedy_only(const Graph& g) {
    EdimResult r;
    r.method = EdimResult::Method::GreedyUpper;
    r.pairs_total = pair_count(g);
    Deadline none;
    for (const auto& comp : components(g)) {
        InducedSubgraph sub = induced_subgraph(g, comp);
        const int m = sub.graph.edge_count();
        std::vector<int> local;
        if (m == 1) {
            local = {0};
        } else if (m > 1) {
            PairCoverProblem p = PairCoverProblem::build(sub.graph, none);
            local = greedy_cover(p);
        }
        for (int v : map_to_parent(local, sub.old_of_new)) r.basis.push_back(v);
    }
    std::sort(r.basis.begin(), r.basis.end());
    r.value = static_cast<int>(r.basis.size());
    return r;
}

}  // namespace detail

/// Exact edge metric dimension. Disconnected graphs are solved per component
/// and summed, with the basis the union of per-component bases; an edgeless
/// graph has value 0 by convention. The returned basis is the
/// lexicographically smallest minimum basis, making repeated runs
/// byte-identical. If the time budget expires the greedy upper bound is
/// returned instead, flagged GreedyUpper.
inline EdimResult edim_exact(const Graph& g, const SolveOptions& opts = {}) {
    detail::Deadline dl = detail::Deadline::from_budget(opts.time_budget_ms);
    try {
        EdimResult r;
        r.method = EdimResult::Method::Exact;
        r.pairs_total = detail::pair_count(g);
        for (const auto& comp : components(g)) {
            InducedSubgraph sub = induced_subgraph(g, comp);
            detail::ComponentSolution sol = detail::solve_component(sub.graph, dl);
            r.value += sol.value;
            for (int v : detail::map_to_parent(sol.basis, sub.old_of_new)) r.basis.push_back(v);
        }
        std::sort(r.basis.begin(), r.basis.end());
        return r;
    } catch (const detail::BudgetExceeded&) {
        return detail::greedy_only(g);
    }
}

/// Greedy upper bound (valid generator, not necessarily minimum), applied
/// per component like the exact solver.
inline EdimResult edim_greedy_upper(const Graph& g) { return detail::greedy_only(g); }

/// All minimum-size generators, lexicographic within each component and
/// combined across components in product order, up to cap sets.
inline AllBases enumerate_all_minimum_bases(const Graph& g, long long cap) {
    if (cap < 1) throw std::invalid_argument("enumerate_all_minimum_bases: cap must be positive");
    detail::Deadline none;
    AllBases result;
    std::vector<std::vector<std::vector<int>>> per_comp;  // already in parent labels
    for (const auto& comp : components(g)) {
        InducedSubgraph sub = induced_subgraph(g, comp);
        const int m = sub.graph.edge_count();
        std::vector<std::vector<int>> local;
        if (m == 0) {
            local = {{}};
        } else if (m == 1) {
            for (int v = 0; v < sub.graph.vertex_count(); ++v) local.push_back({v});
            result.value += 1;
        } else {
            detail::PairCoverProblem p = detail::PairCoverProblem::build(sub.graph, none);
            std::vector<int> greedy = detail::greedy_cover(p);
            detail::MinCoverSearch search(p, none);
            const int opt = search.solve(static_cast<int>(greedy.size()));
            result.value += opt;
            detail::FixedSizeCoverEnum en(p, opt, none);
            result.capped |= en.run(local, cap, false);
        }
        for (auto& b : local) b = detail::map_to_parent(b, sub.old_of_new);
        per_comp.push_back(std::move(local));
    }
    // cartesian combination across components
    std::vector<std::vector<int>> acc{{}};
    for (const auto& options : per_comp) {
        std::vector<std::vector<int>> next;
        for (const auto& prefix : acc) {
            for (const auto& choice : options) {
                if (static_cast<long long>(next.size()) >= cap) {
                    result.capped = true;
                    break;
                }
                std::vector<int> merged = prefix;
                merged.insert(merged.end(), choice.begin(), choice.end());
                next.push_back(std::move(merged));
            }
            if (result.capped && static_cast<long long>(next.size()) >= cap) break;
        }
        acc = std::move(next);
    }
    for (auto& b : acc) std::sort(b.begin(), b.end());
    std::sort(acc.begin(), acc.end());
    result.bases = std::move(acc);
    return result;
}

}  // namespace edim
