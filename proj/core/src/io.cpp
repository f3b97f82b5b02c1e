#include "equimatch/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace equimatch {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

bool printable(unsigned char c) { return c >= 63 && c <= 126; }

struct BitReader {
    std::string_view data;
    size_t byte_pos;     // next byte to consume
    int bits_left = 0;   // unread bits in `current`
    unsigned current = 0;

    int next_bit() {
        if (bits_left == 0) {
            if (byte_pos >= data.size())
                throw ParseError("graph6 bit payload shorter than n(n-1)/2 bits", byte_pos);
            unsigned char c = static_cast<unsigned char>(data[byte_pos]);
            if (!printable(c))
                throw ParseError("non-printable character in graph6 payload", byte_pos);
            ++byte_pos;
            current = c - 63;
            bits_left = 6;
        }
        --bits_left;
        return (current >> bits_left) & 1;
    }
};

}  // namespace

Graph parse_graph6(std::string_view text) {
    size_t pos = 0;
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
    if (pos >= text.size()) throw ParseError("empty graph6 input", pos);

    auto take = [&](const char* what) -> unsigned char {
        if (pos >= text.size()) throw ParseError(std::string("truncated ") + what, pos);
        unsigned char c = static_cast<unsigned char>(text[pos]);
        if (!printable(c))
            throw ParseError(std::string("non-printable character in ") + what, pos);
        ++pos;
        return c;
    };

    long long n = 0;
    unsigned char first = take("length prefix");
    if (first < 126) {
        n = first - 63;
    } else {
        int groups = 3;
        if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126) {
            ++pos;
            groups = 6;
        }
        for (int i = 0; i < groups; ++i) n = (n << 6) | (take("length prefix") - 63);
    }
    if (n > kGraph6VertexCeiling)
        throw ParseError("graph6 vertex count " + std::to_string(n) + " above ceiling " +
                             std::to_string(kGraph6VertexCeiling),
                         0);

    Graph g(static_cast<int>(n));
    BitReader bits{text, pos};
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (bits.next_bit()) {
                g.adj[row].push_back(col);
                g.adj[col].push_back(row);
            }
        }
    }
    // drain the padding of the final byte, then require end of line
    size_t end = bits.byte_pos;
    if (end != text.size())
        throw ParseError("trailing characters after graph6 payload", end);
    for (auto& list : g.adj) std::sort(list.begin(), list.end());
    return g;
}

std::string to_graph6(const Graph& g) {
    std::string out;
    long long n = g.n;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0, filled = 0;
    for (int col = 1; col < g.n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = -1, m = -1;
    if (!(in >> n >> m)) throw ParseError("edge list must start with \"n m\"", 0);
    if (n < 0 || m < 0) throw ParseError("negative count in edge-list header", 0);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v))
            throw ParseError("edge list ends after " + std::to_string(i) + " of " +
                                 std::to_string(m) + " edges",
                             static_cast<size_t>(in.tellg() == -1 ? text.size()
                                                                  : size_t(in.tellg())));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge endpoint out of range: " + std::to_string(u) + " " +
                                 std::to_string(v),
                             static_cast<size_t>(in.tellg() == -1 ? text.size()
                                                                  : size_t(in.tellg())));
        if (u == v)
            throw ParseError("loop at vertex " + std::to_string(u),
                             static_cast<size_t>(in.tellg() == -1 ? text.size()
                                                                  : size_t(in.tellg())));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string rest;
    if (in >> rest) throw ParseError("trailing tokens after edge list", text.size());
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_dot(const Graph& g) {
    std::string out = "graph G {\n";
    for (int v = 0; v < g.n; ++v) out += "  " + std::to_string(v) + ";\n";
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

GraphFormat detect_format(std::string_view text) {
    size_t i = 0;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    size_t d0 = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i > d0 && i < text.size() && (text[i] == ' ' || text[i] == '\t')) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            return GraphFormat::EdgeList;
    }
    return GraphFormat::Graph6;
}

}  // namespace equimatch
