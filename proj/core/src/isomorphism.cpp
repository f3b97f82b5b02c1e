#include "equimatch/isomorphism.hpp"

#include <algorithm>
#include <string>

namespace equimatch {

namespace {

bool extend_mapping(const Graph& a, const Graph& b, std::vector<int>& map,
                    std::vector<char>& used, int next) {
    if (next == a.n) return true;
    for (int cand = 0; cand < b.n; ++cand) {
        if (used[cand] || b.degree(cand) != a.degree(next)) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev)
            if (a.has_edge(prev, next) != b.has_edge(map[prev], cand)) ok = false;
        if (!ok) continue;
        map[next] = cand;
        used[cand] = 1;
        if (extend_mapping(a, b, map, used, next + 1)) return true;
        used[cand] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> is_isomorphic_small(const Graph& a, const Graph& b) {
    if (a.n > kIsomorphismCeiling || b.n > kIsomorphismCeiling)
        throw CeilingExceeded("is_isomorphic_small: graph larger than " +
                              std::to_string(kIsomorphismCeiling) + " vertices");
    if (a.n != b.n || a.edge_count() != b.edge_count()) return std::nullopt;
    std::vector<int> deg_a(a.n), deg_b(b.n);
    for (int v = 0; v < a.n; ++v) deg_a[v] = a.degree(v);
    for (int v = 0; v < b.n; ++v) deg_b[v] = b.degree(v);
    std::sort(deg_a.begin(), deg_a.end());
    std::sort(deg_b.begin(), deg_b.end());
    if (deg_a != deg_b) return std::nullopt;

    std::vector<int> map(a.n, -1);
    std::vector<char> used(b.n, 0);
    if (extend_mapping(a, b, map, used, 0)) return map;
    return std::nullopt;
}

std::optional<std::vector<int>> find_induced_odd_cycle(const Graph& g, int length) {
    if (length != 5 && length != 7)
        throw std::invalid_argument("find_induced_odd_cycle: length must be 5 or 7");
    if (g.n > kInducedCycleCeiling)
        throw CeilingExceeded("find_induced_odd_cycle: graph larger than " +
                              std::to_string(kInducedCycleCeiling) + " vertices");
    if (g.n < length) return std::nullopt;

    std::vector<int> pick(length);
    // lexicographic k-subset enumeration
    for (int i = 0; i < length; ++i) pick[i] = i;
    auto advance = [&]() -> bool {
        int i = length - 1;
        while (i >= 0 && pick[i] == g.n - length + i) --i;
        if (i < 0) return false;
        ++pick[i];
        for (int j = i + 1; j < length; ++j) pick[j] = pick[j - 1] + 1;
        return true;
    };
    do {
        // every vertex must have degree 2 inside the subset
        bool degrees_ok = true;
        for (int i = 0; i < length && degrees_ok; ++i) {
            int d = 0;
            for (int j = 0; j < length; ++j)
                if (i != j && g.has_edge(pick[i], pick[j])) ++d;
            if (d != 2) degrees_ok = false;
        }
        if (!degrees_ok) continue;
        // A 2-regular subset is a union of cycles; walking exactly
        // `length` steps closes at the start iff the subset is a single
        // C_length (the other 2-regular splits of 5 and 7 have component
        // sizes that do not divide the total). Direction: smaller neighbor
        // of the smallest vertex first.
        std::vector<int> cycle;
        int prev = -1, cur = pick[0];
        for (int step = 0; step < length; ++step) {
            cycle.push_back(cur);
            int next = -1;
            for (int j = 0; j < length; ++j) {
                int w = pick[j];
                if (w != cur && w != prev && g.has_edge(cur, w)) {
                    next = w;
                    break;
                }
            }
            prev = cur;
            cur = next;
        }
        if (cur == pick[0]) return cycle;
    } while (advance());
    return std::nullopt;
}

}  // namespace equimatch
