#pragma once

#include <vector>

#include "equimatch/graph.hpp"

namespace equimatch {

/// Per-template-vertex block sizes for a blow-up. All entries nonnegative,
/// at least one positive, length equal to the template's vertex count.
using MultiplicityVector = std::vector<int>;

/// Replace each vertex v_i of `h` by an independent set of mults[i]
/// vertices with v_i's outside neighborhood; zero-multiplicity vertices
/// vanish. Output vertices are grouped by template vertex, in template
/// order.
Graph blow_up(const Graph& h, const MultiplicityVector& mults);

/// Twin-free quotient of a graph under the "same open neighborhood"
/// relation, together with class sizes and the class map. Quotient classes
/// are ordered by their smallest original vertex, and
/// blow_up(quotient, mults) is isomorphic to the input.
struct TwinContraction {
    Graph quotient;
    MultiplicityVector mults;
    std::vector<int> class_of;  // original vertex -> quotient vertex
};

TwinContraction twin_contract(const Graph& g);

}  // namespace equimatch
