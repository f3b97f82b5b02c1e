#include "equimatch/oracle.hpp"

#include <algorithm>
#include <string>

namespace equimatch {

namespace {

enum class VertexState : char { Undecided, Matched, Exposed };

struct MinMaximalSearch {
    const Graph& g;
    std::vector<VertexState> state;
    std::vector<std::pair<int, int>> picked;
    int best;
    Matching best_matching;

    explicit MinMaximalSearch(const Graph& graph)
        : g(graph), state(graph.n, VertexState::Undecided), best(graph.n) {}

    void run() {
        best = g.n + 1;  // any maximal matching has at most n/2 edges
        descend(0, 0);
    }

    void descend(int from, int size) {
        if (size >= best) return;
        int v = from;
        while (v < g.n && (state[v] != VertexState::Undecided || g.adj[v].empty())) ++v;
        if (v == g.n) {
            if (size < best) {
                best = size;
                best_matching = Matching(picked.begin(), picked.end());
            }
            return;
        }
        // match v to each still-undecided neighbor
        for (int u : g.adj[v]) {
            if (state[u] != VertexState::Undecided) continue;
            state[v] = state[u] = VertexState::Matched;
            picked.emplace_back(std::min(v, u), std::max(v, u));
            descend(v + 1, size + 1);
            picked.pop_back();
            state[v] = state[u] = VertexState::Undecided;
        }
        // or expose v; illegal next to an exposed neighbor (the edge would
        // extend the matching), and every undecided neighbor must later be
        // matched
        bool can_expose = true;
        for (int u : g.adj[v]) {
            if (state[u] == VertexState::Exposed) {
                can_expose = false;
                break;
            }
        }
        if (can_expose) {
            // prune: an undecided neighbor with no remaining partner kills
            // the branch
            state[v] = VertexState::Exposed;
            bool feasible = true;
            for (int u : g.adj[v]) {
                if (state[u] != VertexState::Undecided) continue;
                bool partner = false;
                for (int w : g.adj[u]) {
                    if (state[w] == VertexState::Undecided) {
                        partner = true;
                        break;
                    }
                }
                if (!partner) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) descend(v + 1, size);
            state[v] = VertexState::Undecided;
        }
    }
};

void check_ceiling(const Graph& g, int ceiling, const char* op) {
    if (g.n > ceiling)
        throw CeilingExceeded(std::string(op) + ": " + std::to_string(g.n) +
                              " vertices above oracle ceiling " + std::to_string(ceiling));
}

}  // namespace

int min_maximal_matching_size(const Graph& g, int ceiling) {
    check_ceiling(g, ceiling, "min_maximal_matching_size");
    MinMaximalSearch search(g);
    search.run();
    return search.best;
}

EquimatchabilityReport is_equimatchable_oracle(const Graph& g, int ceiling) {
    check_ceiling(g, ceiling, "is_equimatchable_oracle");
    MinMaximalSearch search(g);
    search.run();
    EquimatchabilityReport report;
    report.max_size = maximum_matching_size(g);
    report.min_maximal_size = search.best;
    report.verdict = report.max_size == report.min_maximal_size;
    if (!report.verdict) {
        std::sort(search.best_matching.begin(), search.best_matching.end());
        report.witness_small = std::move(search.best_matching);
    }
    return report;
}

bool is_randomly_matchable(const Graph& g) {
    if (!is_connected(g) || g.n == 0)
        throw std::invalid_argument("is_randomly_matchable: input must be connected");
    if (g.n % 2 != 0) return false;
    long long m = g.edge_count();
    // complete graph K_{2n}
    if (m == static_cast<long long>(g.n) * (g.n - 1) / 2) return true;
    // balanced complete bipartite K_{n,n}
    auto sides = is_bipartite(g);
    if (!sides) return false;
    if (sides->left.size() != sides->right.size()) return false;
    long long half = static_cast<long long>(g.n) / 2;
    if (m != half * half) return false;
    for (int v : sides->left)
        if (g.degree(v) != half) return false;
    return true;
}

std::optional<std::array<int, 3>> independent_triple_criterion(const Graph& g, int ceiling) {
    check_ceiling(g, ceiling, "independent_triple_criterion");
    if (!is_factor_critical(g))
        throw std::invalid_argument("independent_triple_criterion: input not factor-critical");
    std::vector<int> keep(std::max(0, g.n - 3));
    for (int a = 0; a < g.n; ++a) {
        for (int b = a + 1; b < g.n; ++b) {
            if (g.has_edge(a, b)) continue;
            for (int c = b + 1; c < g.n; ++c) {
                if (g.has_edge(a, c) || g.has_edge(b, c)) continue;
                int idx = 0;
                for (int v = 0; v < g.n; ++v)
                    if (v != a && v != b && v != c) keep[idx++] = v;
                if (has_perfect_matching(induced_subgraph(g, keep).graph))
                    return std::array<int, 3>{a, b, c};
            }
        }
    }
    return std::nullopt;
}

bool bipartite_equimatchable_lesk(const Graph& g, int degree_guard) {
    if (!is_connected(g))
        throw std::invalid_argument("bipartite_equimatchable_lesk: input must be connected");
    auto sides = is_bipartite(g);
    if (!sides) throw std::invalid_argument("bipartite_equimatchable_lesk: input not bipartite");
    const std::vector<int>& small_side =
        sides->left.size() <= sides->right.size() ? sides->left : sides->right;

    for (int u : small_side)
        if (g.degree(u) > degree_guard)
            throw CeilingExceeded("bipartite_equimatchable_lesk: degree " +
                                  std::to_string(g.degree(u)) + " above subset guard " +
                                  std::to_string(degree_guard));

    std::vector<int> cover_count(g.n, 0);
    for (int u : small_side) {
        const auto& nbrs = g.adj[u];
        int d = static_cast<int>(nbrs.size());
        // X = N(u) first: |N(X)| <= |X| holds often (e.g. complete
        // bipartite), avoiding the exponential scan
        bool found = false;
        long long full_mask = (1LL << d) - 1;
        auto neighborhood_size = [&](long long mask) {
            int count = 0;
            for (int i = 0; i < d; ++i) {
                if (!((mask >> i) & 1)) continue;
                for (int w : g.adj[nbrs[i]])
                    if (cover_count[w]++ == 0) ++count;
            }
            for (int i = 0; i < d; ++i) {
                if (!((mask >> i) & 1)) continue;
                for (int w : g.adj[nbrs[i]]) cover_count[w] = 0;
            }
            return count;
        };
        if (neighborhood_size(full_mask) <= d) found = true;
        for (long long mask = 1; !found && mask < full_mask; ++mask) {
            if (neighborhood_size(mask) <= __builtin_popcountll(mask)) found = true;
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace equimatch
