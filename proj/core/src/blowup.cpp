#include "equimatch/blowup.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace equimatch {

Graph blow_up(const Graph& h, const MultiplicityVector& mults) {
    if (static_cast<int>(mults.size()) != h.n)
        throw std::invalid_argument("blow_up: multiplicity vector length " +
                                    std::to_string(mults.size()) + " != template order " +
                                    std::to_string(h.n));
    long long total = 0;
    for (int m : mults) {
        if (m < 0) throw std::invalid_argument("blow_up: negative multiplicity");
        total += m;
    }
    if (total == 0) throw std::invalid_argument("blow_up: all multiplicities zero");
    if (total > (1LL << 26))
        throw std::invalid_argument("blow_up: " + std::to_string(total) +
                                    " vertices exceeds the supported size");

    std::vector<int> offset(h.n + 1, 0);
    for (int i = 0; i < h.n; ++i) offset[i + 1] = offset[i] + mults[i];

    Graph g(static_cast<int>(total));
    for (int i = 0; i < h.n; ++i) {
        if (mults[i] == 0) continue;
        long long deg = 0;
        for (int j : h.adj[i]) deg += mults[j];
        for (int v = offset[i]; v < offset[i + 1]; ++v)
            g.adj[v].reserve(static_cast<size_t>(deg));
    }
    for (int i = 0; i < h.n; ++i) {
        for (int v = offset[i]; v < offset[i + 1]; ++v) {
            for (int j : h.adj[i])  // ascending j keeps the list sorted
                for (int w = offset[j]; w < offset[j + 1]; ++w) g.adj[v].push_back(w);
        }
    }
    return g;
}

namespace {

uint64_t hash_neighbors(const std::vector<int>& list) {
    uint64_t h = 0x9e3779b97f4a7c15ULL ^ (uint64_t(list.size()) << 32);
    for (int v : list) {
        uint64_t x = static_cast<uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        h ^= x ^ (x >> 31);
        h *= 0x2545f4914f6cdd1dULL;
    }
    return h;
}

}  // namespace

TwinContraction twin_contract(const Graph& g) {
    // Bucket vertices by neighborhood hash, then split buckets on exact
    // list equality. Twins have equal open neighborhoods, hence are
    // nonadjacent, so each class is an independent set.
    std::unordered_map<uint64_t, std::vector<int>> buckets;
    buckets.reserve(static_cast<size_t>(g.n) * 2);
    for (int v = 0; v < g.n; ++v) buckets[hash_neighbors(g.adj[v])].push_back(v);

    std::vector<int> class_of(g.n, -1);
    std::vector<int> representative;  // class -> smallest original vertex
    std::vector<int> sizes;
    for (auto& [h, verts] : buckets) {
        (void)h;
        for (size_t i = 0; i < verts.size(); ++i) {
            int v = verts[i];
            if (class_of[v] != -1) continue;
            int c = static_cast<int>(representative.size());
            class_of[v] = c;
            representative.push_back(v);
            sizes.push_back(1);
            for (size_t j = i + 1; j < verts.size(); ++j) {
                int u = verts[j];
                if (class_of[u] == -1 && g.adj[u] == g.adj[v]) {
                    class_of[u] = c;
                    representative[c] = std::min(representative[c], u);
                    ++sizes[c];
                }
            }
        }
    }

    // reorder classes by smallest original member
    int k = static_cast<int>(representative.size());
    std::vector<int> order(k);
    for (int c = 0; c < k; ++c) order[c] = c;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return representative[a] < representative[b]; });
    std::vector<int> rank(k);
    for (int i = 0; i < k; ++i) rank[order[i]] = i;

    TwinContraction out;
    out.class_of.resize(g.n);
    out.mults.resize(k);
    for (int v = 0; v < g.n; ++v) out.class_of[v] = rank[class_of[v]];
    for (int c = 0; c < k; ++c) out.mults[rank[c]] = sizes[c];

    out.quotient = Graph(k);
    for (int i = 0; i < k; ++i) {
        int rep = representative[order[i]];
        auto& list = out.quotient.adj[i];
        list.reserve(g.adj[rep].size());
        for (int u : g.adj[rep]) list.push_back(out.class_of[u]);
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return out;
}

}  // namespace equimatch
