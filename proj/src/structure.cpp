#include "tdc/structure.hpp"

#include "tdc/operations.hpp"

namespace tdc {

VertexSet reachable(const Graph &g, int start, VertexSet within) {
  VertexSet seen = singleton(start) & within;
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

int component_count(const Graph &g, VertexSet within) {
  int count = 0;
  VertexSet left = within & g.vertices();
  while (left != 0) {
    left &= ~reachable(g, std::countr_zero(left), left);
    ++count;
  }
  return count;
}

int component_count(const Graph &g) { return component_count(g, g.vertices()); }

bool is_connected(const Graph &g) { return component_count(g) <= 1; }

bool has_isolated_vertex(const Graph &g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.neighbors(v) == 0)
      return true;
  return false;
}

bool is_bridge(const Graph &g, Edge e) {
  return component_count(remove_edge(g, e.u, e.w)) > component_count(g);
}

bool is_cut_vertex(const Graph &g, int v) {
  return component_count(g, g.vertices() & ~singleton(v)) > component_count(g);
}

StructuralReport structural_predicates(const Graph &g) {
  StructuralReport report;
  report.is_connected = is_connected(g);
  for (const Edge &e : g.edges())
    if (is_bridge(g, e))
      report.bridges.push_back(e);
  for (int v = 0; v < g.order(); ++v) {
    if (is_cut_vertex(g, v))
      report.cut_vertices.push_back(v);
    report.degrees.push_back(g.degree(v));
  }
  report.has_isolated = has_isolated_vertex(g);
  return report;
}

} // namespace tdc
