#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "edim/graph.hpp"
#include "edim/products.hpp"

namespace edim {

// ---- named graph families ----

inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back(Edge{i, i + 1});
    return Graph::build(n, e);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back(Edge{i, i + 1});
    e.push_back(Edge{0, n - 1});
    return Graph::build(n, e);
}

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete: need n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back(Edge{i, j});
    return Graph::build(n, e);
}

inline Graph empty_graph(int n) {
    if (n < 1) throw std::invalid_argument("empty: need n >= 1");
    return Graph::build(n, {});
}

/// Star with the given leaf count: vertex 0 is the center.
inline Graph star_graph(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star: need >= 1 leaf");
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.push_back(Edge{0, i});
    return Graph::build(leaves + 1, e);
}

/// Seeded G(n,p). Pairs are drawn in lexicographic order from one mt19937
/// stream, so the result is identical across platforms and runs.
inline Graph gnp_graph(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gnp: need n >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp: p must be in [0,1]");
    std::mt19937 rng(static_cast<std::uint32_t>(seed ^ (seed >> 32)));
    const auto threshold =
        static_cast<std::uint64_t>(p * 4294967296.0);  // draw < threshold => edge
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<std::uint64_t>(rng()) < threshold) e.push_back(Edge{u, v});
    return Graph::build(n, e);
}

/// Random labeled tree from a seeded Pruefer sequence.
inline Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_tree: need n >= 1");
    if (n == 1) return Graph::build(1, {});
    if (n == 2) return Graph::build(2, {Edge{0, 1}});
    std::mt19937 rng(static_cast<std::uint32_t>(seed ^ (seed >> 32)));
    std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
    for (int& x : pruefer) x = static_cast<int>(rng() % static_cast<std::uint32_t>(n));
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int x : pruefer) ++deg[static_cast<std::size_t>(x)];
    std::vector<Edge> e;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int x : pruefer) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (deg[static_cast<std::size_t>(v)] == 1 && !used[static_cast<std::size_t>(v)]) {
                leaf = v;
                break;
            }
        e.push_back(make_edge(leaf, x));
        used[static_cast<std::size_t>(leaf)] = true;
        --deg[static_cast<std::size_t>(x)];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (!used[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] == 1) {
            if (a == -1)
                a = v;
            else
                b = v;
        }
    e.push_back(make_edge(a, b));
    return Graph::build(n, e);
}

/// Seeded G(n,p) redrawn (with derived seeds) until connected.
inline Graph random_connected_gnp(int n, double p, std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        Graph g = gnp_graph(n, p, seed + attempt * 0x9e3779b97f4a7c15ull);
        if (components(g).size() <= 1) return g;
    }
}

// ---- family spec grammar ----
//
//   spec     := name [digits] [ '(' arg (',' arg)* ')' ]
//   arg      := number | 'seed' '=' integer
//   name     := letters and dashes (P, C, K, N, S, path, cycle, complete,
//               empty, star, multipartite, gnp, random-gnp)
//
// Examples: "P4", "K(2,3)", "star(5)", "gnp(6,0.5,seed=7)".
// A single-letter K with one argument is a complete graph; with two or more
// it is complete multipartite.

struct FamilySpec {
    std::string name;              // canonical lowercase family name
    std::vector<double> args;      // numeric arguments in written order
    std::optional<std::uint64_t> seed;
};

namespace detail {

class SpecParser {
public:
    explicit SpecParser(std::string_view s) : s_(s) {}

    FamilySpec parse() {
        skip_ws();
        FamilySpec spec;
        spec.name = ident();
        if (spec.name.empty()) fail("expected a family name");
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            spec.args.push_back(number());
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '(') {
            ++pos_;
            while (true) {
                skip_ws();
                if (starts_with("seed")) {
                    pos_ += 4;
                    skip_ws();
                    expect('=');
                    skip_ws();
                    spec.seed = static_cast<std::uint64_t>(number());
                } else {
                    spec.args.push_back(number());
                }
                skip_ws();
                if (pos_ < s_.size() && s_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                expect(')');
                break;
            }
        }
        skip_ws();
        if (pos_ != s_.size()) fail("trailing characters");
        return spec;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("family spec \"" + std::string(s_) + "\": " + why);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool starts_with(std::string_view w) { return s_.substr(pos_, w.size()) == w; }
    void expect(char c) {
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    std::string ident() {
        std::string out;
        while (pos_ < s_.size() &&
               (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-'))
            out.push_back(s_[pos_++]);
        return out;
    }
    double number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) ||
                                    s_[pos_] == '.' || s_[pos_] == '-' || s_[pos_] == '+'))
            ++pos_;
        if (start == pos_) fail("expected a number");
        try {
            return std::stod(std::string(s_.substr(start, pos_ - start)));
        } catch (...) {
            fail("bad number \"" + std::string(s_.substr(start, pos_ - start)) + "\"");
        }
    }
};

inline int int_arg(const FamilySpec& spec, std::size_t i) {
    double x = spec.args.at(i);
    int v = static_cast<int>(x);
    if (static_cast<double>(v) != x)
        throw std::invalid_argument("family " + spec.name + ": argument " + std::to_string(i + 1) +
                                    " must be an integer");
    return v;
}

inline void need_args(const FamilySpec& spec, std::size_t k) {
    if (spec.args.size() != k)
        throw std::invalid_argument("family " + spec.name + ": expected " + std::to_string(k) +
                                    " argument(s), got " + std::to_string(spec.args.size()));
}

}  // namespace detail

inline FamilySpec parse_family_spec(std::string_view text) {
    return detail::SpecParser(text).parse();
}

inline Graph expand_family(const FamilySpec& spec) {
    const std::string& f = spec.name;
    if (f == "P" || f == "p" || f == "path") {
        detail::need_args(spec, 1);
        return path_graph(detail::int_arg(spec, 0));
    }
    if (f == "C" || f == "c" || f == "cycle") {
        detail::need_args(spec, 1);
        return cycle_graph(detail::int_arg(spec, 0));
    }
    if (f == "N" || f == "n" || f == "empty") {
        detail::need_args(spec, 1);
        return empty_graph(detail::int_arg(spec, 0));
    }
    if (f == "S" || f == "s" || f == "star") {
        detail::need_args(spec, 1);
        return star_graph(detail::int_arg(spec, 0));
    }
    if (f == "K" || f == "k" || f == "complete" || f == "multipartite") {
        if (spec.args.empty())
            throw std::invalid_argument("family " + f + ": needs at least one size");
        if (spec.args.size() == 1 && f != "multipartite")
            return complete_graph(detail::int_arg(spec, 0));
        std::vector<int> parts;
        for (std::size_t i = 0; i < spec.args.size(); ++i) parts.push_back(detail::int_arg(spec, i));
        return complete_multipartite(parts);
    }
    if (f == "gnp" || f == "random-gnp") {
        if (spec.args.size() != 2)
            throw std::invalid_argument("gnp: expected gnp(n, p, seed=s)");
        return gnp_graph(detail::int_arg(spec, 0), spec.args[1], spec.seed.value_or(0));
    }
    throw std::invalid_argument("unknown graph family: " + f);
}

inline Graph expand_family(std::string_view text) { return expand_family(parse_family_spec(text)); }

}  // namespace edim
