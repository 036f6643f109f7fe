#pragma once

#include <vector>

#include "tdc/graph.hpp"

namespace tdc {

// All operations return a new graph. Whenever a vertex disappears, the
// survivors keep their relative order and are relabeled 0..n-2.

/// Disjoint union plus every edge between the two vertex sets; g comes first.
Graph join(const Graph &g, const Graph &h);

/// g followed by |V(g)| copies of h; copy i occupies ids n + i*|V(h)| onward
/// and is fully joined to vertex i of g.
Graph corona(const Graph &g, const Graph &h);

/// Disjoint union, g first.
Graph disjoint_union(const Graph &g, const Graph &h);

Graph remove_vertex(const Graph &g, int v);

/// Throws InvalidEdge if {u, w} is not an edge.
Graph remove_edge(const Graph &g, int u, int w);

/// Adds {u, w}; throws InvalidEdge for loops or existing edges.
Graph add_edge(const Graph &g, int u, int w);

/// Merges u and w into one vertex at min(u, w); loops and parallel edges vanish.
Graph contract_edge(const Graph &g, int u, int w);

/// Deletes v and makes its open neighborhood a clique.
Graph contract_vertex(const Graph &g, int v);

/// Removes every edge between two neighbors of v; v itself stays.
Graph odot(const Graph &g, int v);

/// Applies a permutation: vertex v of g becomes perm[v].
Graph relabel(const Graph &g, const std::vector<int> &perm);

} // namespace tdc
