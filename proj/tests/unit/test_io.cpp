#include <doctest.h>

#include "../support/builders.hpp"
#include "../support/naive.hpp"
#include "equimatch/io.hpp"

using namespace equimatch;
using namespace testsupport;

TEST_CASE("graph6 frozen values cross-checked with the reference codec") {
    Graph k2 = complete(2);
    CHECK(ref_graph6_encode(k2) == "A_");  // oracle agrees with the frozen string
    CHECK(to_graph6(k2) == "A_");
    CHECK(parse_graph6("A_") == k2);

    Graph e2(2);
    CHECK(ref_graph6_encode(e2) == "A?");
    CHECK(to_graph6(e2) == "A?");
    CHECK(parse_graph6("A?") == e2);

    Graph c5 = cycle(5);
    CHECK(to_graph6(c5) == ref_graph6_encode(c5));
    CHECK(parse_graph6(ref_graph6_encode(c5)) == c5);
}

TEST_CASE("graph6 accepts header and trailing newline") {
    CHECK(parse_graph6(">>graph6<<A_") == complete(2));
    CHECK(parse_graph6("A_\n") == complete(2));
    CHECK(parse_graph6("A_\r\n") == complete(2));
}

TEST_CASE("graph6 long length prefix") {
    Graph g = cycle(63);
    std::string enc = to_graph6(g);
    CHECK(static_cast<unsigned char>(enc[0]) == 126);
    CHECK(enc == ref_graph6_encode(g));
    CHECK(parse_graph6(enc) == g);

    Graph g100(100);
    g100.adj[0].push_back(99);
    g100.adj[99].push_back(0);
    CHECK(parse_graph6(to_graph6(g100)) == g100);
}

TEST_CASE("graph6 errors carry byte offsets") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("\x1f"), ParseError);          // below printable range
    CHECK_THROWS_AS(parse_graph6("B"), ParseError);             // 3 vertices, no payload
    CHECK_THROWS_AS(parse_graph6("D?"), ParseError);            // payload too short
    CHECK_THROWS_AS(parse_graph6("A_ "), ParseError);           // trailing junk
    CHECK_THROWS_AS(parse_graph6("A\x08"), ParseError);         // non-printable payload
    CHECK_THROWS_AS(parse_graph6(">>graph6<<"), ParseError);

    try {
        parse_graph6("D?");
    } catch (const ParseError& e) {
        CHECK(e.offset == 2);
        CHECK(std::string(e.what()).find("byte 2") != std::string::npos);
    }

    // length prefix that decodes above the vertex ceiling: ~~ + 36-bit value
    std::string huge = "~~";
    long long n = 5'000'000;
    for (int shift = 30; shift >= 0; shift -= 6)
        huge.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    CHECK_THROWS_AS(parse_graph6(huge), ParseError);
}

TEST_CASE("graph6 round trip on random graphs, both codec directions") {
    Rng rng(20240817);
    for (int iter = 0; iter < 300; ++iter) {
        int n = rng.below(12);
        Graph g = random_graph(rng, n, 10 + rng.below(80));
        std::string mine = to_graph6(g);
        CHECK(mine == ref_graph6_encode(g));
        CHECK(parse_graph6(mine) == g);
        CHECK(ref_graph6_decode(mine) == g);
    }
}

TEST_CASE("edge list parsing") {
    Graph p4 = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
    CHECK(p4 == path(4));
    CHECK(parse_edge_list("1 0") == Graph(1));
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 2\n0 1"), ParseError);      // fewer edges than declared
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 5"), ParseError);      // endpoint out of range
    CHECK_THROWS_AS(parse_edge_list("2 1\n1 1"), ParseError);      // loop
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 1\nx"), ParseError);   // trailing tokens
}

TEST_CASE("format detection") {
    CHECK(detect_format("4 3\n0 1\n...") == GraphFormat::EdgeList);
    CHECK(detect_format("  10 0") == GraphFormat::EdgeList);
    CHECK(detect_format("A_") == GraphFormat::Graph6);
    CHECK(detect_format("Dhc") == GraphFormat::Graph6);
    CHECK(detect_format(">>graph6<<A_") == GraphFormat::Graph6);
}

TEST_CASE("dot emission") {
    CHECK(to_dot(complete(2)) == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
    CHECK(to_dot(Graph(1)) == "graph G {\n  0;\n}\n");
    std::string c5 = to_dot(cycle(5));
    CHECK(c5.find("0 -- 4") != std::string::npos);
    CHECK(c5.find("3 -- 4") != std::string::npos);
}
