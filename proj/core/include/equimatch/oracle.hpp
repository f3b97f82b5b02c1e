#pragma once

#include <array>
#include <optional>

#include "equimatch/graph.hpp"
#include "equimatch/matching.hpp"

namespace equimatch {

/// Exact minimum maximal matching is NP-hard in general; these operations
/// are desk-scale ground truth and refuse inputs above the ceiling.
inline constexpr int kDefaultOracleCeiling = 20;

/// Smallest cardinality over all maximal matchings, by branch and bound on
/// the lowest-indexed undecided vertex (match it to each available
/// neighbor, or expose it).
int min_maximal_matching_size(const Graph& g, int ceiling = kDefaultOracleCeiling);

struct EquimatchabilityReport {
    bool verdict;           // max_size == min_maximal_size
    int max_size;           // nu(g)
    int min_maximal_size;
    std::optional<Matching> witness_small;  // maximal, sub-maximum; set iff !verdict
};

EquimatchabilityReport is_equimatchable_oracle(const Graph& g,
                                               int ceiling = kDefaultOracleCeiling);

/// Structural test for K_{2n} / K_{n,n} (the connected randomly matchable
/// graphs). Fast path, no search. Throws on disconnected input.
bool is_randomly_matchable(const Graph& g);

/// For a factor-critical graph: the first independent 3-set whose removal
/// leaves a perfect matching, or nullopt. Absence is equivalent to
/// equimatchability for factor-critical inputs.
std::optional<std::array<int, 3>> independent_triple_criterion(
    const Graph& g, int ceiling = kDefaultOracleCeiling);

inline constexpr int kLeskDegreeGuard = 20;

/// Connected bipartite equimatchability: with sides (U, V), |U| <= |V|,
/// every u in U must admit a nonempty X inside N(u) with |N(X)| <= |X|.
bool bipartite_equimatchable_lesk(const Graph& g, int degree_guard = kLeskDegreeGuard);

}  // namespace equimatch
