#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace equimatch {

/// Simple undirected graph on vertices 0..n-1. Neighbor lists are kept
/// sorted and loop-free, and adjacency is symmetric; every operation in
/// this library treats Graph values as immutable.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int vertex_count) : n(vertex_count), adj(vertex_count) {
        if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    long long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;
};

/// Thrown when an operation with a size guard (oracle ceiling,
/// isomorphism ceiling, ...) is called on an oversized input.
struct CeilingExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Two color classes with every edge crossing. `left` holds the class of
/// the smallest vertex of each component.
struct Bipartition {
    std::vector<int> left;
    std::vector<int> right;
};
std::optional<Bipartition> is_bipartite(const Graph& g);

/// First triangle in scan order (u ascending, then v in adj[u], then the
/// smallest common neighbor), or nullopt if the graph is triangle-free.
std::optional<std::array<int, 3>> find_triangle(const Graph& g);
inline bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertices;  // new id -> original id, ascending
};
InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> s);

}  // namespace equimatch
