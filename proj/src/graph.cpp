#include "tdc/graph.hpp"

#include <string>

#include "tdc/error.hpp"

namespace tdc {

Graph::Graph(int n) {
  if (n < 0 || n > kMaxOrder)
    throw InvalidParameter("graph order " + std::to_string(n) + " outside 0.." +
                           std::to_string(kMaxOrder));
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge &e : edges) {
    if (e.u < 0 || e.u >= n || e.w < 0 || e.w >= n)
      throw VertexOutOfRange("edge " + std::to_string(e.u) + " " + std::to_string(e.w) +
                             " has an endpoint outside 0.." + std::to_string(n - 1));
    if (e.u == e.w)
      throw InvalidEdge("self-loop at vertex " + std::to_string(e.u));
    g.rows_[e.u] |= singleton(e.w);
    g.rows_[e.w] |= singleton(e.u);
  }
  return g;
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
  const int n = static_cast<int>(rows.size());
  if (n > kMaxOrder)
    throw InvalidParameter("graph order " + std::to_string(n) + " exceeds " +
                           std::to_string(kMaxOrder));
  const VertexSet all = full_set(n);
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~all)
      throw VertexOutOfRange("row " + std::to_string(v) + " names a vertex outside 0.." +
                             std::to_string(n - 1));
    if (contains(rows[v], v))
      throw InvalidEdge("self-loop at vertex " + std::to_string(v));
    for_each_vertex(rows[v], [&](int u) {
      if (!contains(rows[u], v))
        throw InvalidEdge("asymmetric adjacency between " + std::to_string(v) + " and " +
                          std::to_string(u));
    });
  }
  Graph g;
  g.rows_ = std::move(rows);
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (VertexSet r : rows_)
    twice += cardinality(r);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u)
    for_each_vertex(rows_[u] & ~full_set(u + 1), [&](int w) { out.push_back({u, w}); });
  return out;
}

int Graph::check(int v) const {
  if (v < 0 || v >= order())
    throw VertexOutOfRange("vertex " + std::to_string(v) + " outside 0.." +
                           std::to_string(order() - 1));
  return v;
}

} // namespace tdc
