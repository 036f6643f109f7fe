#pragma once

#include <optional>
#include <vector>

#include "tdc/graph.hpp"

namespace tdc {

/// Per-vertex refinement key: degree followed by the sorted degrees of its neighbors.
using VertexInvariant = std::vector<int>;

std::vector<VertexInvariant> vertex_invariants(const Graph &g);

/// Sorted multiset of vertex invariants; equal for isomorphic graphs.
std::vector<VertexInvariant> graph_invariant(const Graph &g);

/// An adjacency-preserving bijection g -> h (mapping[v] is the image of v), if any.
///
/// Backtracking over candidate images restricted to equal vertex invariants.
/// Intended for order <= 12; larger inputs work but may be slow.
std::optional<std::vector<int>> find_isomorphism(const Graph &g, const Graph &h);

bool is_isomorphic(const Graph &g, const Graph &h);

} // namespace tdc
