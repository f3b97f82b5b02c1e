#include "equimatch/graph.hpp"

#include <algorithm>
#include <queue>

namespace equimatch {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) +
                                        " " + std::to_string(v));
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& list : g.adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& list = adj[u];
    return std::binary_search(list.begin(), list.end(), v);
}

long long Graph::edge_count() const {
    long long deg_sum = 0;
    for (const auto& list : adj) deg_sum += static_cast<long long>(list.size());
    return deg_sum / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edge_count()));
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack;
    for (int start = 0; start < g.n; ++start) {
        if (seen[start]) continue;
        std::vector<int> comp;
        stack.push_back(start);
        seen[start] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : g.adj[v]) {
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.adj[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == g.n;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
    std::vector<int> color(g.n, -1);
    std::vector<int> queue;
    for (int start = 0; start < g.n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        queue.assign(1, start);
        for (size_t i = 0; i < queue.size(); ++i) {
            int v = queue[i];
            for (int u : g.adj[v]) {
                if (color[u] == -1) {
                    color[u] = color[v] ^ 1;
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition b;
    for (int v = 0; v < g.n; ++v) (color[v] == 0 ? b.left : b.right).push_back(v);
    return b;
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
    for (int u = 0; u < g.n; ++u) {
        for (int v : g.adj[u]) {
            if (v <= u) continue;
            // smallest common neighbor of u and v
            const auto& a = g.adj[u];
            const auto& b = g.adj[v];
            size_t i = 0, j = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] == b[j]) return std::array<int, 3>{u, v, a[i]};
                if (a[i] < b[j]) ++i;
                else ++j;
            }
        }
    }
    return std::nullopt;
}

std::optional<int> girth(const Graph& g) {
    int best = -1;
    std::vector<int> dist(g.n), parent(g.n);
    std::vector<int> queue;
    for (int root = 0; root < g.n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        parent[root] = -1;
        queue.assign(1, root);
        for (size_t i = 0; i < queue.size(); ++i) {
            int v = queue[i];
            if (best != -1 && 2 * dist[v] >= best) break;
            for (int u : g.adj[v]) {
                if (dist[u] == -1) {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else if (u != parent[v]) {
                    int len = dist[u] + dist[v] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s)
        if (v < 0 || v >= g.n)
            throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(v) +
                                        " out of range");
    std::vector<int> new_id(g.n, -1);
    for (size_t i = 0; i < s.size(); ++i) new_id[s[i]] = static_cast<int>(i);
    Graph h(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i) {
        for (int u : g.adj[s[i]])
            if (new_id[u] != -1) h.adj[i].push_back(new_id[u]);
        // g's lists are sorted and new ids are order-preserving
    }
    return {std::move(h), std::move(s)};
}

}  // namespace equimatch
