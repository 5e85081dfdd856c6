#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "edim/graph.hpp"

namespace edim {

enum class GraphFormat { EdgeList, Graph6 };

inline GraphFormat graph_format_from_string(std::string_view s) {
    if (s == "edgelist") return GraphFormat::EdgeList;
    if (s == "graph6") return GraphFormat::Graph6;
    throw std::invalid_argument("unknown graph format: " + std::string(s));
}

// ---- edge list: "n m" header line, then m lines "u v" (0-based) ----

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

inline Graph from_edge_list(std::string_view text) {
    std::istringstream is{std::string(text)};
    long long n = 0, m = 0;
    if (!(is >> n >> m)) throw std::runtime_error("edge list: missing \"n m\" header");
    if (n < 0 || m < 0) throw std::runtime_error("edge list: negative header values");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(is >> u >> v))
            throw std::runtime_error("edge list: expected " + std::to_string(m) + " edges, got " +
                                     std::to_string(i));
        edges.push_back(Edge{u, v});
    }
    std::string trailing;
    if (is >> trailing) throw std::runtime_error("edge list: trailing content after edges");
    try {
        return Graph::build(static_cast<int>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("edge list: ") + e.what());
    }
}

// ---- graph6: standard bit-packing, 6-bit groups offset by 63, ----
// ---- upper-triangle bits in column order ----

namespace detail {

inline void g6_append_size(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::runtime_error("graph6: vertex count too large to encode");
    }
}

inline int g6_parse_size(std::string_view s, std::size_t& pos) {
    auto take = [&]() -> int {
        if (pos >= s.size()) throw std::runtime_error("graph6: truncated header");
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw std::runtime_error("graph6: invalid byte in header");
        return c - 63;
    };
    int c0 = take();
    if (c0 != 63) return c0;
    // '~' introducer: 18-bit (or 36-bit, rejected) size
    if (pos < s.size() && s[pos] == 126)
        throw std::runtime_error("graph6: sizes beyond 258047 vertices are not supported");
    int v = 0;
    for (int i = 0; i < 3; ++i) v = (v << 6) | take();
    return v;
}

}  // namespace detail

inline std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    detail::g6_append_size(out, n);
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph from_graph6(std::string_view line) {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw std::runtime_error("graph6: empty input");

    std::size_t pos = 0;
    const int n = detail::g6_parse_size(line, pos);
    const long long nbits = static_cast<long long>(n) * (n - 1) / 2;
    const std::size_t ngroups = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() - pos != ngroups)
        throw std::runtime_error("graph6: body length mismatch (expected " +
                                 std::to_string(ngroups) + " groups, got " +
                                 std::to_string(line.size() - pos) + ")");
    std::vector<Edge> edges;
    int acc = 0, avail = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (avail == 0) {
                int c = static_cast<unsigned char>(line[pos++]);
                if (c < 63 || c > 126) throw std::runtime_error("graph6: invalid body byte");
                acc = c - 63;
                avail = 6;
            }
            if ((acc >> (avail - 1)) & 1) edges.push_back(Edge{i, j});
            --avail;
        }
    }
    return Graph::build(n, edges);
}

// ---- dispatch helpers ----

inline std::string serialize_graph(const Graph& g, GraphFormat f) {
    switch (f) {
        case GraphFormat::EdgeList: return to_edge_list(g);
        case GraphFormat::Graph6: return to_graph6(g) + "\n";
    }
    throw std::logic_error("unknown format");
}

inline Graph parse_graph(std::string_view text, GraphFormat f) {
    switch (f) {
        case GraphFormat::EdgeList: return from_edge_list(text);
        case GraphFormat::Graph6: {
            // one graph per line; take the first non-empty line
            std::size_t start = 0;
            while (start < text.size() && (text[start] == '\n' || text[start] == '\r')) ++start;
            std::size_t end = text.find('\n', start);
            return from_graph6(text.substr(start, end == std::string_view::npos ? end : end - start));
        }
    }
    throw std::logic_error("unknown format");
}

inline Graph read_graph(std::istream& in, GraphFormat f) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str(), f);
}

inline void write_graph(std::ostream& out, const Graph& g, GraphFormat f) {
    out << serialize_graph(g, f);
}

}  // namespace edim
