#pragma once

#include <vector>

#include "tdc/graph.hpp"

namespace tdc {

struct StructuralReport {
  bool is_connected = false;
  std::vector<Edge> bridges;     // normalized, sorted
  std::vector<int> cut_vertices; // sorted
  std::vector<int> degrees;
  bool has_isolated = false;
};

/// Vertices reachable from `start` inside the vertex set `within`.
VertexSet reachable(const Graph &g, int start, VertexSet within);

int component_count(const Graph &g, VertexSet within);
int component_count(const Graph &g);

/// The empty graph counts as connected.
bool is_connected(const Graph &g);
bool has_isolated_vertex(const Graph &g);

bool is_bridge(const Graph &g, Edge e);
bool is_cut_vertex(const Graph &g, int v);

/// Bridges and cut vertices by definition: deletion increases the component count.
StructuralReport structural_predicates(const Graph &g);

} // namespace tdc
