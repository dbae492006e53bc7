// edgelist.hpp — plain-text edge-list interchange format.
//
// Document layout: a header line with the vertex count, then one edge per
// line as two whitespace-separated 0-based vertex ids. parse_edgelist
// validates the full tree invariants; parse_graph accepts any simple graph
// (used by the brute-force Roman solver).
#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "abctree/tree.hpp"

namespace abctree {

enum class ParseErrorCode {
    MalformedInteger,
    VertexOutOfRange,
    SelfLoop,
    DuplicateEdge,
    WrongEdgeCount,
    Disconnected,
};

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    ParseErrorCode code() const { return code_; }

private:
    ParseErrorCode code_;
};

namespace detail {

inline std::vector<long> parse_integers(const std::string& text) {
    std::vector<long> values;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (text[i] == '-' || text[i] == '+')
            ++i;
        std::size_t digits = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (i == digits ||
            (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))))
            throw ParseError(ParseErrorCode::MalformedInteger,
                             "malformed integer at offset " + std::to_string(start));
        try {
            values.push_back(std::stol(text.substr(start, i - start)));
        } catch (const std::out_of_range&) {
            throw ParseError(ParseErrorCode::MalformedInteger,
                             "integer out of range at offset " + std::to_string(start));
        }
    }
    return values;
}

inline std::vector<Edge> tokens_to_edges(const std::vector<long>& tokens, int n) {
    std::vector<Edge> edges;
    edges.reserve((tokens.size() - 1) / 2);
    for (std::size_t i = 1; i + 1 < tokens.size(); i += 2) {
        long u = tokens[i], v = tokens[i + 1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(ParseErrorCode::VertexOutOfRange,
                             "vertex id " + std::to_string(u < 0 || u >= n ? u : v) +
                                 " outside [0, " + std::to_string(n) + ")");
        if (u == v)
            throw ParseError(ParseErrorCode::SelfLoop,
                             "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<int>(std::min(u, v)),
                           static_cast<int>(std::max(u, v)));
    }
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end())
        throw ParseError(ParseErrorCode::DuplicateEdge,
                         "duplicate edge " + std::to_string(dup->first) + " " +
                             std::to_string(dup->second));
    return edges;
}

} // namespace detail

// Any simple graph: header plus an even run of endpoint tokens.
inline SimpleGraph parse_graph(const std::string& text) {
    std::vector<long> tokens = detail::parse_integers(text);
    if (tokens.empty() || tokens[0] < 1)
        throw ParseError(ParseErrorCode::MalformedInteger,
                         "header must be a positive vertex count");
    if ((tokens.size() - 1) % 2 != 0)
        throw ParseError(ParseErrorCode::WrongEdgeCount,
                         "dangling edge endpoint");
    int n = static_cast<int>(tokens[0]);
    return SimpleGraph(n, detail::tokens_to_edges(tokens, n));
}

inline LabeledTree parse_edgelist(const std::string& text) {
    std::vector<long> tokens = detail::parse_integers(text);
    if (tokens.empty() || tokens[0] < 1)
        throw ParseError(ParseErrorCode::MalformedInteger,
                         "header must be a positive vertex count");
    int n = static_cast<int>(tokens[0]);
    if (static_cast<long>(tokens.size()) - 1 != 2L * (n - 1))
        throw ParseError(ParseErrorCode::WrongEdgeCount,
                         "a tree on " + std::to_string(n) + " vertices needs " +
                             std::to_string(n - 1) + " edges");
    std::vector<Edge> edges = detail::tokens_to_edges(tokens, n);
    SimpleGraph probe(n, edges);
    if (!probe.connected())
        throw ParseError(ParseErrorCode::Disconnected, "edge set is not connected");
    return LabeledTree(n, std::move(edges));
}

// Inverse of parse: header line, then normalized sorted edges, one per line.
inline std::string write_edgelist(const SimpleGraph& g) {
    std::string out = std::to_string(g.order());
    out.push_back('\n');
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.first);
        out.push_back(' ');
        out += std::to_string(e.second);
        out.push_back('\n');
    }
    return out;
}

} // namespace abctree
