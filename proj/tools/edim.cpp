// Command-line front end: graph ingestion, product construction, structural
// analysis, exact edge metric dimension, closed-form verification and family
// generation. Machine-readable output is JSON lines; exit status is 0 on
// success, 1 on I/O or input parse errors, 2 when a verification run found a
// mismatch.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "edim/edim.hpp"

namespace {

using nlohmann::ordered_json;

struct CommonOpts {
    std::string input = "-";
    std::string format = "edgelist";
    bool json = false;
    std::uint64_t seed = 0;
};

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_all(const std::string& path, const std::string& data) {
    if (path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << data;
}

edim::Graph load_graph(const CommonOpts& o) {
    return edim::parse_graph(read_all(o.input), edim::graph_format_from_string(o.format));
}

// A factor argument is either a family spec ("P4", "gnp(6,0.5,seed=7)") or a
// path to a graph file (.g6 taken as graph6, anything else as edge list).
edim::Graph resolve_factor(const std::string& arg) {
    try {
        return edim::expand_family(arg);
    } catch (const std::invalid_argument&) {
        if (!std::filesystem::exists(arg))
            throw std::runtime_error("not a family spec and not a file: " + arg);
        auto fmt = arg.size() >= 3 && arg.substr(arg.size() - 3) == ".g6"
                       ? edim::GraphFormat::Graph6
                       : edim::GraphFormat::EdgeList;
        return edim::parse_graph(read_all(arg), fmt);
    }
}

int env_threads() {
    const char* v = std::getenv("EDIM_THREADS");
    if (!v) return 1;
    int t = std::atoi(v);
    return t >= 1 ? t : 1;
}

// ---- compute ----

int run_compute(const CommonOpts& o, std::int64_t budget_ms, bool greedy_only,
                std::optional<long long> all_bases_cap) {
    edim::Graph g = load_graph(o);
    const auto t0 = std::chrono::steady_clock::now();
    edim::EdimResult r = greedy_only
                             ? edim::edim_greedy_upper(g)
                             : edim::edim_exact(g, edim::SolveOptions{budget_ms});
    if (all_bases_cap) {
        edim::AllBases all = edim::enumerate_all_minimum_bases(g, *all_bases_cap);
        r.all_bases = std::move(all.bases);
        r.all_bases_capped = all.capped;
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    const char* method = r.method == edim::EdimResult::Method::Exact ? "EXACT" : "GREEDY_UPPER";
    if (o.json) {
        ordered_json j;
        j["n"] = g.vertex_count();
        j["m"] = g.edge_count();
        j["edim"] = r.value;
        j["basis"] = r.basis;
        j["method"] = method;
        j["pairs_total"] = r.pairs_total;
        j["elapsed_ms"] = elapsed;
        j["seed"] = o.seed;
        if (r.all_bases) {
            j["all_bases"] = *r.all_bases;
            j["all_bases_capped"] = r.all_bases_capped;
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count() << " edim=" << r.value
                  << " method=" << method << " basis=[";
        for (std::size_t i = 0; i < r.basis.size(); ++i)
            std::cout << (i ? "," : "") << r.basis[i];
        std::cout << "] pairs=" << r.pairs_total << " elapsed_ms=" << elapsed << "\n";
        if (r.all_bases) {
            std::cout << "all minimum bases (" << r.all_bases->size()
                      << (r.all_bases_capped ? ", capped" : "") << "):\n";
            for (const auto& b : *r.all_bases) {
                std::cout << "  [";
                for (std::size_t i = 0; i < b.size(); ++i) std::cout << (i ? "," : "") << b[i];
                std::cout << "]\n";
            }
        }
    }
    return 0;
}

// ---- analyze ----

int run_analyze(const CommonOpts& o, int gamma_cap) {
    edim::Graph g = load_graph(o);
    edim::TwinPartition tp = edim::twin_partition(g);
    edim::TwinDeletion td = edim::twin_deletion(g);
    edim::EdgeTwinPartition etp = edim::edge_twin_partition(td.graph);
    edim::TotalDomination gt = edim::total_domination_number(g, gamma_cap);
    const bool pair_cover = edim::has_total_dominating_pair_cover(g);
    auto sat = edim::satellites(g);

    ordered_json j;
    j["f"] = tp.f;
    j["f_prime"] = tp.f_prime;
    j["t"] = tp.t;
    j["t_prime"] = tp.t_prime;
    j["q"] = etp.q;
    j["q_prime"] = etp.q_prime;
    switch (gt.status) {
        case edim::TotalDomination::Status::Value: j["gamma_t"] = gt.value; break;
        case edim::TotalDomination::Status::Undefined: j["gamma_t"] = "UNDEFINED"; break;
        case edim::TotalDomination::Status::CapExceeded: j["gamma_t"] = "CAP_EXCEEDED"; break;
    }
    j["in_class_G"] = pair_cover;
    ordered_json sj = ordered_json::array();
    for (const auto& [u, v] : sat) sj.push_back({u, v});
    j["satellites"] = sj;
    if (edim::is_tree(g)) {
        edim::TreeStats ts = edim::tree_stats(g);
        j["tree_stats"] = {{"n1", ts.leaf_count}, {"ex", ts.exterior_major_count}, {"is_path", ts.is_path}};
    }
    j["seed"] = o.seed;
    if (o.json) {
        std::cout << j.dump() << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return 0;
}

// ---- product / generate ----

int run_product(const std::string& kind, const std::vector<std::string>& args,
                const std::string& out, const std::string& format) {
    edim::Graph result;
    if (kind == "multipartite") {
        std::vector<int> parts;
        for (const auto& a : args) parts.push_back(std::stoi(a));
        result = edim::complete_multipartite(parts);
    } else {
        if (args.size() != 2)
            throw std::runtime_error("product " + kind + ": expected exactly two factors");
        edim::Graph a = resolve_factor(args[0]);
        edim::Graph b = resolve_factor(args[1]);
        if (kind == "join")
            result = edim::join(a, b);
        else if (kind == "lex")
            result = edim::lexicographic(a, b);
        else if (kind == "corona")
            result = edim::corona(a, b);
        else
            throw std::runtime_error("unknown product kind: " + kind);
    }
    write_all(out, edim::serialize_graph(result, edim::graph_format_from_string(format)));
    return 0;
}

int run_generate(const std::string& spec, const std::string& out, const std::string& format) {
    edim::Graph g = edim::expand_family(spec);
    write_all(out, edim::serialize_graph(g, edim::graph_format_from_string(format)));
    return 0;
}

// ---- verify ----

struct Corpus {
    static std::vector<edim::Graph> lex_first_factors() {
        return {edim::path_graph(3), edim::cycle_graph(3), edim::path_graph(4),
                edim::Graph::build(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}})};  // paw
    }
    static std::vector<std::string> lex_first_names() { return {"P3", "C3", "P4", "paw"}; }
    static std::vector<edim::Graph> lex_second_factors(bool pair_cover) {
        if (pair_cover)
            return {edim::complete_graph(2), edim::path_graph(3), edim::complete_graph(3)};
        edim::Graph p3iso = edim::Graph::build(4, {{0, 1}, {1, 2}});
        return {edim::empty_graph(2), edim::empty_graph(3), p3iso};
    }
    static std::vector<std::string> lex_second_names(bool pair_cover) {
        if (pair_cover) return {"K2", "P3", "K3"};
        return {"N2", "N3", "P3+K1"};
    }
};

std::vector<edim::TheoremInstance> make_instances(edim::TheoremId id, int max_n, int random_count,
                                                  std::uint64_t seed) {
    using edim::TheoremId;
    std::vector<edim::TheoremInstance> out;
    std::mt19937_64 rng(seed);
    auto pick_p = [&]() { return 0.15 + 0.10 * static_cast<double>(rng() % 8); };
    switch (id) {
        case TheoremId::Join: {
            for (int i = 0; i < random_count; ++i) {
                const int ng = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, max_n - 4 + 1)));
                const int nh = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, max_n - ng - 2 + 1)));
                const double pg = pick_p(), ph = pick_p();
                const std::uint64_t sg = rng(), sh = rng();
                std::ostringstream d;
                d << "join(gnp(" << ng << "," << pg << ",seed=" << sg << "), gnp(" << nh << ","
                  << ph << ",seed=" << sh << "))";
                out.push_back({d.str(),
                               {edim::gnp_graph(ng, pg, sg), edim::gnp_graph(nh, ph, sh)},
                               {}});
            }
            break;
        }
        case TheoremId::Multipartite: {
            // all part multisets (non-decreasing vectors) with t >= 2, sum <= max_n
            std::vector<int> parts;
            auto emit = [&]() {
                std::ostringstream d;
                d << "K(";
                for (std::size_t i = 0; i < parts.size(); ++i) d << (i ? "," : "") << parts[i];
                d << ")";
                edim::TheoremInstance inst{d.str(), {}, parts};
                out.push_back(std::move(inst));
            };
            auto rec = [&](auto&& self, int remaining, int minimum) -> void {
                if (parts.size() >= 2) emit();
                for (int r = minimum; r <= remaining; ++r) {
                    parts.push_back(r);
                    self(self, remaining - r, r);
                    parts.pop_back();
                }
            };
            rec(rec, max_n, 1);
            break;
        }
        case TheoremId::Lex:
        case TheoremId::Satellite: {
            auto firsts = Corpus::lex_first_factors();
            auto first_names = Corpus::lex_first_names();
            for (bool cover : {false, true}) {
                if (id == TheoremId::Satellite && !cover) continue;
                auto seconds = Corpus::lex_second_factors(cover);
                auto second_names = Corpus::lex_second_names(cover);
                for (std::size_t i = 0; i < firsts.size(); ++i)
                    for (std::size_t j = 0; j < seconds.size(); ++j) {
                        if (firsts[i].vertex_count() * seconds[j].vertex_count() > max_n) continue;
                        out.push_back({first_names[i] + "[" + second_names[j] + "]",
                                       {firsts[i], seconds[j]},
                                       {}});
                    }
            }
            if (id == TheoremId::Lex) {
                for (int i = 0; i < random_count; ++i) {
                    const int ng = 3 + static_cast<int>(rng() % 2);
                    const int max_nh = std::max(2, max_n / ng);
                    const int nh = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_nh - 1));
                    if (ng * nh > max_n) continue;
                    const double pg = pick_p(), ph = pick_p();
                    const std::uint64_t sg = rng(), sh = rng();
                    std::ostringstream d;
                    d << "lex(connected-gnp(" << ng << "," << pg << ",seed=" << sg << "), gnp("
                      << nh << "," << ph << ",seed=" << sh << "))";
                    out.push_back({d.str(),
                                   {edim::random_connected_gnp(ng, pg, sg),
                                    edim::gnp_graph(nh, ph, sh)},
                                   {}});
                }
            }
            break;
        }
        case TheoremId::Corona: {
            for (int i = 0; i < random_count; ++i) {
                const int ng = 1 + static_cast<int>(rng() % 4);
                const int max_nh = max_n / ng - 1;
                if (max_nh < 2) continue;
                const int nh = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_nh - 1));
                const double pg = pick_p(), ph = pick_p();
                const std::uint64_t sg = rng(), sh = rng();
                std::ostringstream d;
                d << "corona(connected-gnp(" << ng << "," << pg << ",seed=" << sg << "), gnp("
                  << nh << "," << ph << ",seed=" << sh << "))";
                out.push_back({d.str(),
                               {edim::random_connected_gnp(ng, pg, sg), edim::gnp_graph(nh, ph, sh)},
                               {}});
            }
            break;
        }
        case TheoremId::CoronaK1: {
            for (const edim::Graph& g : edim::all_graphs_up_to_iso_max(std::min(max_n, 7), true))
                out.push_back({"connected(g6=" + edim::to_graph6(g) + ")", {g}, {}});
            break;
        }
        case TheoremId::Tree: {
            for (const edim::Graph& t : edim::all_trees_up_to_iso_max(std::min(max_n, 16)))
                out.push_back({"tree(g6=" + edim::to_graph6(t) + ")", {t}, {}});
            break;
        }
    }
    return out;
}

int default_max_n(edim::TheoremId id) {
    switch (id) {
        case edim::TheoremId::Join: return 9;
        case edim::TheoremId::Multipartite: return 9;
        case edim::TheoremId::Lex: return 12;
        case edim::TheoremId::Corona: return 14;
        case edim::TheoremId::CoronaK1: return 6;
        case edim::TheoremId::Tree: return 9;
        case edim::TheoremId::Satellite: return 12;
    }
    return 9;
}

int default_random(edim::TheoremId id) {
    switch (id) {
        case edim::TheoremId::Join: return 200;
        case edim::TheoremId::Corona: return 100;
        default: return 0;
    }
}

int run_verify(const std::string& theorem, int max_n, int random_count, std::uint64_t seed,
               bool json, long long cap, std::int64_t budget_ms) {
    edim::TheoremId id = edim::theorem_id_from_string(theorem);
    if (max_n <= 0) max_n = default_max_n(id);
    if (random_count < 0) random_count = default_random(id);
    std::vector<edim::TheoremInstance> instances = make_instances(id, max_n, random_count, seed);
    edim::VerifyOptions opts;
    opts.solve.time_budget_ms = budget_ms;
    opts.bases_cap = cap;
    opts.threads = env_threads();
    opts.seed = seed;
    std::vector<edim::TheoremReport> reports = edim::verify(id, instances, opts);
    bool failed = false;
    for (const auto& r : reports) {
        if (r.verdict == edim::Verdict::Mismatch) failed = true;
        if (json) {
            ordered_json j;
            j["theorem"] = r.theorem;
            j["instance"] = r.instance;
            j["preconditions_met"] = r.preconditions_met;
            if (!r.reason.empty()) j["reason"] = r.reason;
            if (r.formula) {
                j["formula"] = r.formula->value;
                j["formula_kind"] = r.formula->lower_bound_only ? "LOWER_BOUND" : "EXACT";
            }
            if (r.solver_value) j["solver"] = *r.solver_value;
            j["verdict"] = edim::to_string(r.verdict);
            j["seed"] = r.seed;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << edim::to_string(r.verdict) << " " << r.theorem << " " << r.instance;
            if (r.formula)
                std::cout << " formula=" << (r.formula->lower_bound_only ? ">=" : "")
                          << r.formula->value;
            if (r.solver_value) std::cout << " solver=" << *r.solver_value;
            if (!r.reason.empty()) std::cout << " (" << r.reason << ")";
            std::cout << "\n";
        }
    }
    return failed ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact edge metric dimension toolkit"};
    app.require_subcommand(1);

    // compute
    CommonOpts c_opts;
    std::int64_t c_budget = 60000;
    bool c_greedy = false;
    long long c_all_bases = -1;
    auto* compute = app.add_subcommand("compute", "exact edge metric dimension of a graph");
    compute->add_option("--input", c_opts.input, "input path, or - for stdin")->capture_default_str();
    compute->add_option("--format", c_opts.format, "edgelist|graph6")->capture_default_str();
    compute->add_flag("--json", c_opts.json, "JSON output");
    compute->add_option("--seed", c_opts.seed, "seed recorded in the report")->capture_default_str();
    compute->add_option("--time-budget-ms", c_budget, "exact-search budget; greedy fallback after")
        ->capture_default_str();
    compute->add_flag("--greedy-only", c_greedy, "skip the exact search");
    compute->add_option("--all-bases", c_all_bases, "also enumerate all minimum bases, up to CAP");

    // analyze
    CommonOpts a_opts;
    int a_gamma_cap = 8;
    auto* analyze = app.add_subcommand("analyze", "structural statistics of a graph");
    analyze->add_option("--input", a_opts.input, "input path, or - for stdin")->capture_default_str();
    analyze->add_option("--format", a_opts.format, "edgelist|graph6")->capture_default_str();
    analyze->add_flag("--json", a_opts.json, "single-line JSON output");
    analyze->add_option("--seed", a_opts.seed, "seed recorded in the report")->capture_default_str();
    analyze->add_option("--gamma-cap", a_gamma_cap, "total domination search cap")
        ->capture_default_str();

    // product
    std::string p_kind;
    std::vector<std::string> p_args;
    std::string p_out = "-", p_format = "edgelist";
    auto* product = app.add_subcommand("product", "construct join/lex/corona/multipartite graphs");
    product->add_option("kind", p_kind, "join|lex|corona|multipartite")->required();
    product
        ->add_option("factors", p_args,
                     "two factor specs (family string or file), or part sizes for multipartite")
        ->required()
        ->expected(-1);
    product->add_option("--out", p_out, "output path, or -")->capture_default_str();
    product->add_option("--format", p_format, "edgelist|graph6")->capture_default_str();

    // generate
    std::string g_spec, g_out = "-", g_format = "edgelist";
    auto* generate = app.add_subcommand("generate", "expand a graph family spec");
    generate->add_option("family", g_spec, "e.g. P4, C5, K(2,3), star(4), gnp(6,0.5,seed=7)")
        ->required();
    generate->add_option("--out", g_out, "output path, or -")->capture_default_str();
    generate->add_option("--format", g_format, "edgelist|graph6")->capture_default_str();

    // verify
    std::string v_theorem;
    int v_max_n = 0, v_random = -1;
    std::uint64_t v_seed = 0;
    bool v_json = false;
    long long v_cap = 100000;
    std::int64_t v_budget = 60000;
    auto* verify = app.add_subcommand("verify", "check a closed form against the exact solver");
    verify->add_option("--theorem", v_theorem, "join|multipartite|lex|corona|corona-k1|tree|satellite")
        ->required();
    verify->add_option("--max-n", v_max_n, "instance size bound (theorem-specific default)");
    verify->add_option("--random", v_random, "random instance count where applicable");
    verify->add_option("--seed", v_seed, "seed for random instance generation")->capture_default_str();
    verify->add_flag("--json", v_json, "JSON-lines output, one report per line");
    verify->add_option("--cap", v_cap, "cap for minimum-basis enumeration")->capture_default_str();
    verify->add_option("--time-budget-ms", v_budget, "per-solve budget")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed())
            return run_compute(c_opts, c_budget, c_greedy,
                               c_all_bases >= 0 ? std::optional<long long>(c_all_bases)
                                                : std::nullopt);
        if (analyze->parsed()) return run_analyze(a_opts, a_gamma_cap);
        if (product->parsed()) return run_product(p_kind, p_args, p_out, p_format);
        if (generate->parsed()) return run_generate(g_spec, g_out, g_format);
        if (verify->parsed())
            return run_verify(v_theorem, v_max_n, v_random, v_seed, v_json, v_cap, v_budget);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
