#pragma once

#include <optional>
#include <vector>

#include "equimatch/graph.hpp"

namespace equimatch {

/// Guard for is_isomorphic_small; recognition only ever compares graphs
/// of at most 11 vertices.
inline constexpr int kIsomorphismCeiling = 16;

/// Adjacency-preserving bijection a -> b, or nullopt. Deterministic: the
/// first mapping in lexicographic backtracking order (a's vertices in
/// order, candidates ascending).
std::optional<std::vector<int>> is_isomorphic_small(const Graph& a, const Graph& b);

inline constexpr int kInducedCycleCeiling = 32;

/// First (in lexicographic subset order) chordless cycle of the requested
/// length, returned in traversal order starting at its smallest vertex.
/// `length` must be 5 or 7.
std::optional<std::vector<int>> find_induced_odd_cycle(const Graph& g, int length);

}  // namespace equimatch
