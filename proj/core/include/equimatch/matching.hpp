#pragma once

#include <utility>
#include <vector>

#include "equimatch/graph.hpp"

namespace equimatch {

/// Pairwise vertex-disjoint edges of a host graph; normalized u < v and
/// sorted.
using Matching = std::vector<std::pair<int, int>>;

bool is_valid_matching(const Graph& g, const Matching& m);
bool is_maximal_matching(const Graph& g, const Matching& m);

/// Maximum-cardinality matching via Edmonds' blossom algorithm, O(V^3).
Matching maximum_matching(const Graph& g);

/// nu(g), without materializing the edge set.
int maximum_matching_size(const Graph& g);

bool has_perfect_matching(const Graph& g);

/// n odd and g - v has a perfect matching for every vertex v.
bool is_factor_critical(const Graph& g);

}  // namespace equimatch
