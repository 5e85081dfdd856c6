#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "edim/graph.hpp"
#include "edim/products.hpp"
#include "edim/solver.hpp"
#include "edim/structure.hpp"

namespace edim {

/// Closed-form result: either an exact value or only a lower bound; the two
/// kinds are never silently coerced into each other.
struct FormulaValue {
    int value = 0;
    bool lower_bound_only = false;
};

// ---- closed forms ----

/// Join: n1 + n2 - 1 when either factor has a total dominating pair at every
/// vertex, n1 + n2 - 2 otherwise. Both factors must be nontrivial.
inline int edim_join_formula(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() < 2 || g2.vertex_count() < 2)
        throw std::invalid_argument("join formula: both factors need >= 2 vertices");
    const int total = g1.vertex_count() + g2.vertex_count();
    return (has_total_dominating_pair_cover(g1) || has_total_dominating_pair_cover(g2))
               ? total - 1
               : total - 2;
}

/// Complete multipartite: r1 + r2 - 2 for two parts, (sum r_i) - 1 otherwise.
inline int edim_multipartite_formula(std::span<const int> parts) {
    if (parts.size() < 2) throw std::invalid_argument("multipartite formula: need t >= 2 parts");
    int sum = 0;
    for (int r : parts) {
        if (r < 1) throw std::invalid_argument("multipartite formula: part sizes must be positive");
        sum += r;
    }
    return parts.size() == 2 ? sum - 2 : sum - 1;
}

namespace detail {
inline std::optional<std::string> lex_precondition_failure(const Graph& g, const Graph& h) {
    for (const auto& comp : components(g))
        if (comp.size() < 3) return "a component of the first factor has fewer than 3 vertices";
    if (h.vertex_count() < 2) return "second factor must have >= 2 vertices";
    return std::nullopt;
}
}  // namespace detail

/// Lexicographic product: |V(G)|(|V(H)|-1) + f'(G) + t'(G) + q'(G'), where
/// G' is the twin deletion of G. The value is exact when H has no total
/// dominating pair cover, and only a lower bound otherwise.
inline FormulaValue edim_lex_formula(const Graph& g, const Graph& h) {
    if (auto why = detail::lex_precondition_failure(g, h))
        throw std::invalid_argument("lex formula: " + *why);
    TwinPartition tp = twin_partition(g);
    EdgeTwinPartition etp = edge_twin_partition(twin_deletion(g).graph);
    const int value =
        g.vertex_count() * (h.vertex_count() - 1) + tp.f_prime + tp.t_prime + etp.q_prime;
    return {value, has_total_dominating_pair_cover(h)};
}

/// Corona with a nontrivial second factor: |V(G)| * (|V(H)| - 1). Requires
/// connected G.
inline int edim_corona_formula(const Graph& g, const Graph& h) {
    if (g.vertex_count() == 0 || components(g).size() != 1)
        throw std::invalid_argument("corona formula: first factor must be connected");
    if (h.vertex_count() < 2)
        throw std::invalid_argument("corona formula: second factor needs >= 2 vertices");
    return g.vertex_count() * (h.vertex_count() - 1);
}

/// Pendant corona lower bound: edim(G corona K1) >= edim(G).
inline FormulaValue edim_corona_k1_bound(const Graph& g, const SolveOptions& opts = {}) {
    return {edim_exact(g, opts).value, true};
}

/// Trees: 1 for paths, leaf count minus exterior-major count otherwise.
inline int edim_tree_formula(const Graph& g) {
    if (!is_tree(g) || g.vertex_count() < 2)
        throw std::invalid_argument("tree formula: input must be a tree with >= 2 vertices");
    TreeStats ts = tree_stats(g);
    return ts.is_path ? 1 : ts.leaf_count - ts.exterior_major_count;
}

// ---- satellite layer containment ----

enum class SatelliteVerdict { Holds, Violated, CapExceeded, Skipped };

struct SatelliteReport {
    SatelliteVerdict verdict = SatelliteVerdict::Skipped;
    std::string reason;
    long long bases_checked = 0;
    std::vector<std::pair<int, int>> satellite_pairs;  // (owner, satellite) in G
    std::optional<std::vector<int>> violating_basis;
    std::optional<std::pair<int, int>> violating_pair;
};

/// For every satellite pair (u, v) of G and every minimum basis S of G[H]
/// (H with a total dominating pair cover), checks that the layer over u or
/// the layer over v lies entirely inside S. Enumeration is capped; hitting
/// the cap yields CapExceeded, never a partial claim.
inline SatelliteReport check_satellite_layer_containment(const Graph& g, const Graph& h,
                                                         long long cap = 100000,
                                                         const SolveOptions& opts = {}) {
    SatelliteReport rep;
    if (auto why = detail::lex_precondition_failure(g, h)) {
        rep.reason = *why;
        return rep;
    }
    if (!has_total_dominating_pair_cover(h)) {
        rep.reason = "second factor has no total dominating pair cover";
        return rep;
    }
    rep.satellite_pairs = satellites(g);
    const Graph product = lexicographic(g, h);
    (void)opts;
    AllBases all = enumerate_all_minimum_bases(product, cap);
    if (all.capped) {
        rep.verdict = SatelliteVerdict::CapExceeded;
        rep.reason = "minimum-basis enumeration hit the cap";
        rep.bases_checked = static_cast<long long>(all.bases.size());
        return rep;
    }
    const int nh = h.vertex_count();
    auto layer_inside = [&](const Bitset& in_basis, int gv) {
        for (int j = 0; j < nh; ++j)
            if (!in_basis.test(lex_index(LexVertex{gv, j}, nh))) return false;
        return true;
    };
    for (const auto& basis : all.bases) {
        Bitset in_basis(product.vertex_count());
        for (int v : basis) in_basis.set(v);
        for (const auto& [owner, sat] : rep.satellite_pairs) {
            if (!layer_inside(in_basis, owner) && !layer_inside(in_basis, sat)) {
                rep.verdict = SatelliteVerdict::Violated;
                rep.violating_basis = basis;
                rep.violating_pair = std::make_pair(owner, sat);
                rep.bases_checked = static_cast<long long>(all.bases.size());
                return rep;
            }
        }
    }
    rep.verdict = SatelliteVerdict::Holds;
    rep.bases_checked = static_cast<long long>(all.bases.size());
    return rep;
}

// ---- verification harness ----

enum class TheoremId { Join, Multipartite, Lex, Corona, CoronaK1, Tree, Satellite };

inline std::string to_string(TheoremId id) {
    switch (id) {
        case TheoremId::Join: return "join";
        case TheoremId::Multipartite: return "multipartite";
        case TheoremId::Lex: return "lex";
        case TheoremId::Corona: return "corona";
        case TheoremId::CoronaK1: return "corona-k1";
        case TheoremId::Tree: return "tree";
        case TheoremId::Satellite: return "satellite";
    }
    throw std::logic_error("unknown theorem id");
}

inline TheoremId theorem_id_from_string(std::string_view s) {
    if (s == "join") return TheoremId::Join;
    if (s == "multipartite") return TheoremId::Multipartite;
    if (s == "lex") return TheoremId::Lex;
    if (s == "corona") return TheoremId::Corona;
    if (s == "corona-k1") return TheoremId::CoronaK1;
    if (s == "tree") return TheoremId::Tree;
    if (s == "satellite") return TheoremId::Satellite;
    throw std::invalid_argument("unknown theorem: " + std::string(s));
}

enum class Verdict { Match, BoundHolds, Mismatch, Skipped };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Match: return "MATCH";
        case Verdict::BoundHolds: return "BOUND_HOLDS";
        case Verdict::Mismatch: return "MISMATCH";
        case Verdict::Skipped: return "SKIPPED";
    }
    throw std::logic_error("unknown verdict");
}

struct TheoremInstance {
    std::string description;
    std::vector<Graph> factors;  // graphs involved, order matters
    std::vector<int> parts;      // multipartite part sizes
};

struct TheoremReport {
    std::string theorem;
    std::string instance;
    bool preconditions_met = false;
    std::string reason;  // populated when skipped
    std::optional<FormulaValue> formula;
    std::optional<int> solver_value;
    Verdict verdict = Verdict::Skipped;
    std::uint64_t seed = 0;
};

struct VerifyOptions {
    SolveOptions solve;
    long long bases_cap = 100000;
    int threads = 1;
    std::uint64_t seed = 0;
};

namespace detail {

inline TheoremReport skip(TheoremReport rep, std::string reason) {
    rep.preconditions_met = false;
    rep.reason = std::move(reason);
    rep.verdict = Verdict::Skipped;
    return rep;
}

/// Solve, treating a budget-degraded (greedy) answer as not comparable.
/// On failure marks the report skipped with the reason recorded.
inline std::optional<int> exact_or_nothing(const Graph& g, const SolveOptions& opts,
                                           TheoremReport& rep) {
    EdimResult r = edim_exact(g, opts);
    if (r.method != EdimResult::Method::Exact) {
        rep.reason = "solver time budget exceeded; only a greedy upper bound of " +
                     std::to_string(r.value) + " is available";
        rep.verdict = Verdict::Skipped;
        return std::nullopt;
    }
    return r.value;
}

inline TheoremReport evaluate_instance(TheoremId id, const TheoremInstance& inst,
                                       const VerifyOptions& opts) {
    TheoremReport rep;
    rep.theorem = to_string(id);
    rep.instance = inst.description;
    rep.seed = opts.seed;
    auto need_factors = [&](std::size_t k) {
        if (inst.factors.size() != k)
            throw std::invalid_argument("expected " + std::to_string(k) + " factor graphs");
    };
    try {
        switch (id) {
            case TheoremId::Join: {
                need_factors(2);
                const Graph &a = inst.factors[0], &b = inst.factors[1];
                if (a.vertex_count() < 2 || b.vertex_count() < 2)
                    return skip(std::move(rep), "both join factors must have >= 2 vertices");
                rep.preconditions_met = true;
                rep.formula = FormulaValue{edim_join_formula(a, b), false};
                auto solved = exact_or_nothing(join(a, b), opts.solve, rep);
                if (!solved) return rep;  // budget skip; reason already recorded
                rep.solver_value = *solved;
                rep.verdict = (*solved == rep.formula->value) ? Verdict::Match : Verdict::Mismatch;
                return rep;
            }
            case TheoremId::Multipartite: {
                if (inst.parts.size() < 2)
                    return skip(std::move(rep), "need at least two part sizes");
                rep.preconditions_met = true;
                rep.formula = FormulaValue{edim_multipartite_formula(inst.parts), false};
                auto solved = exact_or_nothing(complete_multipartite(inst.parts), opts.solve, rep);
                if (!solved) return rep;
                rep.solver_value = *solved;
                rep.verdict = (*solved == rep.formula->value) ? Verdict::Match : Verdict::Mismatch;
                return rep;
            }
            case TheoremId::Lex: {
                need_factors(2);
                const Graph &a = inst.factors[0], &b = inst.factors[1];
                if (auto why = lex_precondition_failure(a, b)) return skip(std::move(rep), *why);
                rep.preconditions_met = true;
                rep.formula = edim_lex_formula(a, b);
                auto solved = exact_or_nothing(lexicographic(a, b), opts.solve, rep);
                if (!solved) return rep;
                rep.solver_value = *solved;
                if (rep.formula->lower_bound_only)
                    rep.verdict = (*solved >= rep.formula->value) ? Verdict::BoundHolds : Verdict::Mismatch;
                else
                    rep.verdict = (*solved == rep.formula->value) ? Verdict::Match : Verdict::Mismatch;
                return rep;
            }
            case TheoremId::Corona: {
                need_factors(2);
                const Graph &a = inst.factors[0], &b = inst.factors[1];
                if (a.vertex_count() == 0 || components(a).size() != 1)
                    return skip(std::move(rep), "first corona factor must be connected");
                if (b.vertex_count() < 2)
                    return skip(std::move(rep), "second corona factor must have >= 2 vertices");
                rep.preconditions_met = true;
                rep.formula = FormulaValue{edim_corona_formula(a, b), false};
                auto solved = exact_or_nothing(corona(a, b), opts.solve, rep);
                if (!solved) return rep;
                rep.solver_value = *solved;
                rep.verdict = (*solved == rep.formula->value) ? Verdict::Match : Verdict::Mismatch;
                return rep;
            }
            case TheoremId::CoronaK1: {
                need_factors(1);
                const Graph& a = inst.factors[0];
                if (a.vertex_count() == 0) return skip(std::move(rep), "empty graph");
                rep.preconditions_met = true;
                rep.formula = edim_corona_k1_bound(a, opts.solve);
                const Graph k1 = Graph::build(1, {});
                auto solved = exact_or_nothing(corona(a, k1), opts.solve, rep);
                if (!solved) return rep;
                rep.solver_value = *solved;
                rep.verdict = (*solved >= rep.formula->value) ? Verdict::BoundHolds : Verdict::Mismatch;
                return rep;
            }
            case TheoremId::Tree: {
                need_factors(1);
                const Graph& a = inst.factors[0];
                if (!is_tree(a) || a.vertex_count() < 2)
                    return skip(std::move(rep), "instance is not a tree with >= 2 vertices");
                rep.preconditions_met = true;
                rep.formula = FormulaValue{edim_tree_formula(a), false};
                auto solved = exact_or_nothing(a, opts.solve, rep);
                if (!solved) return rep;
                rep.solver_value = *solved;
                rep.verdict = (*solved == rep.formula->value) ? Verdict::Match : Verdict::Mismatch;
                return rep;
            }
            case TheoremId::Satellite: {
                need_factors(2);
                SatelliteReport sr = check_satellite_layer_containment(
                    inst.factors[0], inst.factors[1], opts.bases_cap, opts.solve);
                switch (sr.verdict) {
                    case SatelliteVerdict::Holds:
                        rep.preconditions_met = true;
                        rep.verdict = Verdict::Match;
                        return rep;
                    case SatelliteVerdict::Violated:
                        rep.preconditions_met = true;
                        rep.verdict = Verdict::Mismatch;
                        rep.reason = "layer containment violated";
                        return rep;
                    case SatelliteVerdict::CapExceeded:
                        rep.preconditions_met = true;
                        rep.verdict = Verdict::Skipped;
                        rep.reason = sr.reason;
                        return rep;
                    case SatelliteVerdict::Skipped: return skip(std::move(rep), sr.reason);
                }
                return rep;
            }
        }
    } catch (const std::exception& e) {
        return skip(std::move(rep), std::string("instance not evaluable: ") + e.what());
    }
    return rep;
}

}  // namespace detail

/// Evaluate one closed form against the exact solver on each instance.
/// Instances are independent; with threads > 1 they are processed in
/// parallel and reported in input order.
inline std::vector<TheoremReport> verify(TheoremId id, std::span<const TheoremInstance> instances,
                                         const VerifyOptions& opts = {}) {
    std::vector<TheoremReport> reports(instances.size());
    const int threads = std::max(1, opts.threads);
    if (threads == 1 || instances.size() <= 1) {
        for (std::size_t i = 0; i < instances.size(); ++i)
            reports[i] = detail::evaluate_instance(id, instances[i], opts);
        return reports;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= instances.size()) return;
            reports[i] = detail::evaluate_instance(id, instances[i], opts);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min<std::size_t>(static_cast<std::size_t>(threads), instances.size()); ++t)
        pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return reports;
}

}  // namespace edim
