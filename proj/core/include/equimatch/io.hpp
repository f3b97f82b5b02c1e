#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "equimatch/graph.hpp"

namespace equimatch {

/// Input rejected by a parser; `offset` is the byte position of the fault.
struct ParseError : std::runtime_error {
    size_t offset;
    ParseError(const std::string& msg, size_t at)
        : std::runtime_error(msg + " (byte " + std::to_string(at) + ")"), offset(at) {}
};

/// Largest vertex count parse_graph6 will accept.
inline constexpr long long kGraph6VertexCeiling = 4'000'000;

/// Decode one graph6 line (McKay's format, optional ">>graph6<<" header).
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Plain text format: first line "n m", then one "u v" line per edge.
Graph parse_edge_list(std::string_view text);

/// Undirected DOT with one node per vertex and edges in ascending order.
std::string to_dot(const Graph& g);

enum class GraphFormat { Graph6, EdgeList };

/// A line opening with "<digits> <digits>" is an edge-list header; no valid
/// graph6 line starts with a digit (bytes below 63 cannot encode n).
GraphFormat detect_format(std::string_view text);

}  // namespace equimatch
