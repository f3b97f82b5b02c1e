#include "equimatch/matching.hpp"

#include <algorithm>

namespace equimatch {

bool is_valid_matching(const Graph& g, const Matching& m) {
    std::vector<char> hit(g.n, 0);
    for (auto [u, v] : m) {
        if (u < 0 || v < 0 || u >= g.n || v >= g.n || !g.has_edge(u, v)) return false;
        if (hit[u] || hit[v]) return false;
        hit[u] = hit[v] = 1;
    }
    return true;
}

bool is_maximal_matching(const Graph& g, const Matching& m) {
    if (!is_valid_matching(g, m)) return false;
    std::vector<char> hit(g.n, 0);
    for (auto [u, v] : m) hit[u] = hit[v] = 1;
    for (int u = 0; u < g.n; ++u) {
        if (hit[u]) continue;
        for (int v : g.adj[u])
            if (!hit[v]) return false;
    }
    return true;
}

namespace {

// Edmonds' blossom algorithm. mate[v] is v's partner or -1. A BFS forest
// of alternating paths is grown from each exposed vertex; odd cycles are
// contracted by remapping `base`.
struct BlossomSolver {
    const Graph& g;
    std::vector<int> mate, parent, base, queue;
    std::vector<char> used, blossom;

    explicit BlossomSolver(const Graph& graph)
        : g(graph),
          mate(graph.n, -1),
          parent(graph.n, -1),
          base(graph.n),
          used(graph.n, 0),
          blossom(graph.n, 0) {}

    int lowest_common_base(int a, int b) {
        std::vector<char> mark(g.n, 0);
        for (;;) {
            a = base[a];
            mark[a] = 1;
            if (mate[a] == -1) break;
            a = parent[mate[a]];
        }
        for (;;) {
            b = base[b];
            if (mark[b]) return b;
            b = parent[mate[b]];
        }
    }

    void mark_path(int v, int stem, int child) {
        while (base[v] != stem) {
            blossom[base[v]] = 1;
            blossom[base[mate[v]]] = 1;
            parent[v] = child;
            child = mate[v];
            v = parent[mate[v]];
        }
    }

    // grows the forest from root; returns the exposed vertex reached, or -1
    int find_augmenting_path(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        for (int v = 0; v < g.n; ++v) base[v] = v;
        used[root] = 1;
        queue.assign(1, root);
        for (size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int to : g.adj[v]) {
                if (base[v] == base[to] || mate[v] == to) continue;
                if (to == root || (mate[to] != -1 && parent[mate[to]] != -1)) {
                    // odd cycle: contract the blossom
                    int stem = lowest_common_base(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, stem, to);
                    mark_path(to, stem, v);
                    for (int i = 0; i < g.n; ++i) {
                        if (blossom[base[i]]) {
                            base[i] = stem;
                            if (!used[i]) {
                                used[i] = 1;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (mate[to] == -1) return to;
                    used[mate[to]] = 1;
                    queue.push_back(mate[to]);
                }
            }
        }
        return -1;
    }

    void augment(int exposed) {
        int v = exposed;
        while (v != -1) {
            int pv = parent[v];
            int next = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = next;
        }
    }

    void solve() {
        // greedy seed matching
        for (int v = 0; v < g.n; ++v) {
            if (mate[v] != -1) continue;
            for (int u : g.adj[v]) {
                if (mate[u] == -1) {
                    mate[v] = u;
                    mate[u] = v;
                    break;
                }
            }
        }
        for (int v = 0; v < g.n; ++v) {
            if (mate[v] != -1) continue;
            int exposed = find_augmenting_path(v);
            if (exposed != -1) augment(exposed);
        }
    }
};

}  // namespace

Matching maximum_matching(const Graph& g) {
    BlossomSolver solver(g);
    solver.solve();
    Matching m;
    for (int v = 0; v < g.n; ++v)
        if (solver.mate[v] > v) m.emplace_back(v, solver.mate[v]);
    return m;
}

int maximum_matching_size(const Graph& g) {
    BlossomSolver solver(g);
    solver.solve();
    int matched = 0;
    for (int v = 0; v < g.n; ++v)
        if (solver.mate[v] != -1) ++matched;
    return matched / 2;
}

bool has_perfect_matching(const Graph& g) {
    if (g.n % 2 != 0) return false;
    return maximum_matching_size(g) * 2 == g.n;
}

bool is_factor_critical(const Graph& g) {
    if (g.n % 2 == 0) return false;
    if (g.n == 1) return true;
    if (maximum_matching_size(g) * 2 != g.n - 1) return false;
    std::vector<int> keep(g.n - 1);
    for (int drop = 0; drop < g.n; ++drop) {
        int idx = 0;
        for (int v = 0; v < g.n; ++v)
            if (v != drop) keep[idx++] = v;
        if (!has_perfect_matching(induced_subgraph(g, keep).graph)) return false;
    }
    return true;
}

}  // namespace equimatch
