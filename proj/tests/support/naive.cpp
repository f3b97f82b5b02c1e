#include "naive.hpp"

#include <algorithm>
#include <stdexcept>

namespace testsupport {

namespace {

void collect_matchings(const std::vector<std::pair<int, int>>& edges, size_t from,
                       std::vector<char>& used, Matching& current,
                       std::vector<Matching>& out) {
    out.push_back(current);
    for (size_t i = from; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (used[u] || used[v]) continue;
        used[u] = used[v] = 1;
        current.push_back(edges[i]);
        collect_matchings(edges, i + 1, used, current, out);
        current.pop_back();
        used[u] = used[v] = 0;
    }
}

}  // namespace

std::vector<Matching> all_matchings(const Graph& g) {
    auto edges = g.edges();
    std::vector<char> used(g.n, 0);
    Matching current;
    std::vector<Matching> out;
    collect_matchings(edges, 0, used, current, out);
    return out;
}

std::vector<Matching> all_maximal_matchings(const Graph& g) {
    auto edges = g.edges();
    std::vector<Matching> out;
    for (auto& m : all_matchings(g)) {
        std::vector<char> used(g.n, 0);
        for (auto [u, v] : m) used[u] = used[v] = 1;
        bool extendable = false;
        for (auto [u, v] : edges) {
            if (!used[u] && !used[v]) {
                extendable = true;
                break;
            }
        }
        if (!extendable) out.push_back(m);
    }
    return out;
}

int naive_maximum_matching_size(const Graph& g) {
    size_t best = 0;
    for (auto& m : all_matchings(g)) best = std::max(best, m.size());
    return static_cast<int>(best);
}

int naive_min_maximal_matching_size(const Graph& g) {
    size_t best = static_cast<size_t>(g.n) + 1;
    for (auto& m : all_maximal_matchings(g)) best = std::min(best, m.size());
    return static_cast<int>(best);
}

bool naive_equimatchable(const Graph& g) {
    auto maximal = all_maximal_matchings(g);
    for (auto& m : maximal)
        if (m.size() != maximal.front().size()) return false;
    return true;
}

bool naive_has_perfect_matching(const Graph& g) {
    if (g.n % 2 != 0) return false;
    return naive_maximum_matching_size(g) * 2 == g.n;
}

bool naive_factor_critical(const Graph& g) {
    if (g.n % 2 == 0) return false;
    for (int drop = 0; drop < g.n; ++drop) {
        std::vector<int> keep;
        for (int v = 0; v < g.n; ++v)
            if (v != drop) keep.push_back(v);
        if (!naive_has_perfect_matching(equimatch::induced_subgraph(g, keep).graph))
            return false;
    }
    return true;
}

std::vector<std::vector<int>> naive_induced_odd_cycles(const Graph& g) {
    std::vector<std::vector<int>> found;
    for (int len = 5; len <= g.n; len += 2) {
        std::vector<int> pick(len);
        for (int i = 0; i < len; ++i) pick[i] = i;
        for (;;) {
            // chordless C_len: every vertex has exactly two subset
            // neighbors and one traversal visits everything
            bool ok = true;
            for (int i = 0; i < len && ok; ++i) {
                int d = 0;
                for (int j = 0; j < len; ++j)
                    if (i != j && g.has_edge(pick[i], pick[j])) ++d;
                if (d != 2) ok = false;
            }
            if (ok) {
                int prev = -1, cur = pick[0], steps = 0;
                while (steps < len) {
                    int next = -1;
                    for (int j = 0; j < len; ++j) {
                        int w = pick[j];
                        if (w != cur && w != prev && g.has_edge(cur, w)) {
                            next = w;
                            break;
                        }
                    }
                    prev = cur;
                    cur = next;
                    ++steps;
                }
                if (cur == pick[0]) found.emplace_back(pick.begin(), pick.end());
            }
            int i = len - 1;
            while (i >= 0 && pick[i] == g.n - len + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < len; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return found;
}

std::string ref_graph6_encode(const Graph& g) {
    // adjacency matrix, upper triangle read column by column
    std::vector<char> bits;
    for (int col = 1; col < g.n; ++col)
        for (int row = 0; row < col; ++row) {
            bool edge = false;
            for (int w : g.adj[row])
                if (w == col) edge = true;
            bits.push_back(edge ? 1 : 0);
        }
    while (bits.size() % 6 != 0) bits.push_back(0);

    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(g.n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((g.n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((g.n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((g.n & 63) + 63));
    }
    for (size_t i = 0; i < bits.size(); i += 6) {
        int value = 0;
        for (int j = 0; j < 6; ++j) value = value * 2 + bits[i + j];
        out.push_back(static_cast<char>(value + 63));
    }
    return out;
}

Graph ref_graph6_decode(const std::string& line) {
    size_t pos = 0;
    long long n;
    if (static_cast<unsigned char>(line.at(pos)) == 126) {
        ++pos;
        n = 0;
        for (int i = 0; i < 3; ++i, ++pos)
            n = n * 64 + (static_cast<unsigned char>(line.at(pos)) - 63);
    } else {
        n = static_cast<unsigned char>(line.at(pos)) - 63;
        ++pos;
    }
    std::vector<char> bits;
    for (; pos < line.size(); ++pos) {
        int value = static_cast<unsigned char>(line[pos]) - 63;
        if (value < 0 || value > 63) throw std::runtime_error("ref decoder: bad byte");
        for (int j = 5; j >= 0; --j) bits.push_back((value >> j) & 1);
    }
    if (static_cast<long long>(bits.size()) < n * (n - 1) / 2)
        throw std::runtime_error("ref decoder: payload too short");
    std::vector<std::pair<int, int>> edges;
    size_t at = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++at)
            if (bits[at]) edges.emplace_back(row, col);
    return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace testsupport
