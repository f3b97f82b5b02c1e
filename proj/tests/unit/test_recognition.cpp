#include <doctest.h>

#include "../support/builders.hpp"
#include "../support/naive.hpp"
#include "equimatch/isomorphism.hpp"
#include "equimatch/oracle.hpp"
#include "equimatch/recognition.hpp"

using namespace equimatch;
using namespace testsupport;

TEST_CASE("recognize_nonbipartite on hand graphs") {
    auto c5 = recognize_nonbipartite(cycle(5));
    CHECK(c5.verdict);
    CHECK(c5.branch == Branch::NonbipartiteFamily);
    REQUIRE(c5.family.has_value());
    CHECK(c5.family->family == FamilyId::C5);

    auto c7 = recognize_nonbipartite(cycle(7));
    CHECK(c7.verdict);
    REQUIRE(c7.family.has_value());
    CHECK(c7.family->family == FamilyId::C7);

    auto c9 = recognize_nonbipartite(cycle(9));
    CHECK(!c9.verdict);

    auto pet = recognize_nonbipartite(petersen());
    CHECK(!pet.verdict);
    CHECK(pet.reject_reason == RejectReason::NoTemplateIsomorphism);

    CHECK_THROWS_AS(recognize_nonbipartite(complete_bipartite(3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(recognize_nonbipartite(Graph::from_edges(10, {{0, 1}, {2, 3}})),
                    std::invalid_argument);
}

TEST_CASE("classify covers every branch") {
    auto k4 = classify(complete(4));
    CHECK(!k4.verdict);
    CHECK(k4.branch == Branch::Rejected);
    CHECK(k4.reject_reason == RejectReason::HasTriangle);

    auto k33 = classify(complete_bipartite(3, 3));
    CHECK(k33.verdict);
    CHECK(k33.branch == Branch::BipartiteLeskChecked);

    auto p4 = classify(path(4));
    CHECK(!p4.verdict);
    CHECK(p4.branch == Branch::BipartiteLeskChecked);
    CHECK(p4.reject_reason == RejectReason::OracleNegative);

    // two disjoint 5-cycles
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 1) % 5);
    }
    auto two_c5 = classify(Graph::from_edges(10, edges));
    CHECK(!two_c5.verdict);
    CHECK(two_c5.branch == Branch::Disconnected);
    CHECK(two_c5.reject_reason == RejectReason::NotConnected);

    auto star = classify(complete_bipartite(1, 25));
    CHECK(!star.verdict);
    CHECK(star.branch == Branch::BipartiteOutOfScope);
    CHECK(star.reject_reason == RejectReason::BipartiteGuardExceeded);

    auto c5 = classify(cycle(5));
    CHECK(c5.verdict);
    CHECK(c5.branch == Branch::NonbipartiteFamily);

    // non-bipartite with a triangle, big twin classes: quotient path
    Graph tri_blown = blow_up(complete(3), {4, 4, 4});
    auto tri = classify(tri_blown);
    CHECK(!tri.verdict);
    CHECK(tri.reject_reason == RejectReason::HasTriangle);
}

TEST_CASE("every rejection reason is reachable") {
    // C13 is twin-free, so its quotient exceeds the 11-vertex bound
    auto c13 = recognize_nonbipartite(cycle(13));
    CHECK(!c13.verdict);
    CHECK(c13.reject_reason == RejectReason::QuotientTooLarge);
    CHECK(classify(cycle(13)).reject_reason == RejectReason::QuotientTooLarge);

    // C9 contracts to itself; no pattern row has nine surviving vertices
    auto c9 = recognize_nonbipartite(cycle(9));
    CHECK(c9.reject_reason == RejectReason::NoTemplateIsomorphism);

    // a 5-cycle blow-up whose multiplicities fit no pattern: admissible
    // maps onto the quotient exist, but every linear system is infeasible
    auto lopsided = classify(blow_up(cycle(5), {1, 1, 1, 2, 3}));
    CHECK(!lopsided.verdict);
    CHECK(lopsided.reject_reason == RejectReason::NoMultiplicityMatch);
    CHECK(!is_equimatchable_oracle(blow_up(cycle(5), {1, 1, 1, 2, 3})).verdict);
}

TEST_CASE("token spellings") {
    CHECK(branch_token(Branch::NonbipartiteFamily) == "nonbipartite_family");
    CHECK(branch_token(Branch::Disconnected) == "disconnected");
    CHECK(reject_reason_token(RejectReason::HasTriangle) == "has_triangle");
    CHECK(reject_reason_token(RejectReason::QuotientTooLarge) == "quotient_too_large");
    CHECK(reject_reason_token(RejectReason::BipartiteGuardExceeded) == "bipartite_guard_exceeded");
}

TEST_CASE("accepted graphs carry a certificate that re-instantiates the input") {
    for (int fi = 0; fi < kFamilyCount; ++fi) {
        for (auto& [params, g] : enumerate_members(static_cast<FamilyId>(fi), 11)) {
            auto result = recognize_nonbipartite(g);
            CAPTURE(family_token(static_cast<FamilyId>(fi)));
            REQUIRE(result.verdict);
            REQUIRE(result.family.has_value());
            Graph rebuilt = instantiate(*result.family);
            REQUIRE(rebuilt.n == g.n);
            REQUIRE(is_isomorphic_small(rebuilt, g).has_value());
        }
    }
}

TEST_CASE("recognition agrees with the oracle on all graphs up to 5 vertices") {
    for (int n = 1; n <= 5; ++n) {
        uint64_t masks = uint64_t(1) << (n * (n - 1) / 2);
        for (uint64_t mask = 0; mask < masks; ++mask) {
            Graph g = graph_from_mask(n, mask);
            if (!is_connected(g) || is_bipartite(g)) continue;
            bool expected = is_equimatchable_oracle(g).verdict && is_triangle_free(g);
            auto got = recognize_nonbipartite(g);
            CAPTURE(mask);
            REQUIRE(got.verdict == expected);
        }
    }
}

TEST_CASE("family membership is stable under parameter inflation") {
    // growing one parameter inside its constraints keeps the verdict
    auto grow = [](FamilyParams p, int param, int delta) {
        p.values[param] += delta;
        return p;
    };
    std::vector<FamilyParams> seeds;
    seeds.push_back({FamilyId::F11, {}});
    seeds.back().values[ParamN] = 1;
    seeds.push_back({FamilyId::F3, {}});
    seeds.back().values[ParamN] = 2;
    seeds.back().values[ParamR] = 1;
    seeds.back().values[ParamS] = 2;
    seeds.push_back({FamilyId::G11, {}});
    seeds.back().values[ParamN] = 2;
    seeds.back().values[ParamM] = 2;

    for (const auto& seed : seeds) {
        for (int delta : {1, 3, 10}) {
            FamilyParams p = grow(seed, ParamN, delta);
            auto result = recognize_nonbipartite(instantiate(p));
            CAPTURE(family_token(seed.family));
            REQUIRE(result.verdict);
        }
    }
}

TEST_CASE("recognize handles a G21 member and returns matching parameters") {
    FamilyParams p{FamilyId::G21, {}};
    p.values[ParamN] = 2;
    p.values[ParamM] = 3;
    Graph g = instantiate(p);
    CHECK(is_equimatchable_oracle(g).verdict);
    auto result = recognize_nonbipartite(g);
    REQUIRE(result.verdict);
    Graph rebuilt = instantiate(*result.family);
    CHECK(is_isomorphic_small(rebuilt, g).has_value());
}
