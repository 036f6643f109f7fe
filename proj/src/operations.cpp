#include "tdc/operations.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "tdc/error.hpp"

namespace tdc {
namespace {

void require_vertex(const Graph &g, int v) {
  if (v < 0 || v >= g.order())
    throw VertexOutOfRange("vertex " + std::to_string(v) + " outside 0.." +
                           std::to_string(g.order() - 1));
}

void require_edge(const Graph &g, int u, int w) {
  require_vertex(g, u);
  require_vertex(g, w);
  if (!g.adjacent(u, w))
    throw InvalidEdge("{" + std::to_string(u) + "," + std::to_string(w) + "} is not an edge");
}

/// Drops bit `gone` from a set, shifting higher members down by one.
VertexSet squeeze(VertexSet s, int gone) {
  const VertexSet low = s & full_set(gone);
  const VertexSet high = s & ~full_set(gone + 1);
  return low | (high >> 1);
}

/// Deletes row and column `gone`, compacting labels.
std::vector<VertexSet> drop_vertex(const std::vector<VertexSet> &rows, int gone) {
  std::vector<VertexSet> out;
  out.reserve(rows.size() - 1);
  for (int v = 0; v < static_cast<int>(rows.size()); ++v)
    if (v != gone)
      out.push_back(squeeze(rows[v], gone));
  return out;
}

std::vector<VertexSet> copy_rows(const Graph &g) {
  return {g.rows().begin(), g.rows().end()};
}

} // namespace

Graph disjoint_union(const Graph &g, const Graph &h) {
  const int n = g.order();
  if (n + h.order() > Graph::kMaxOrder)
    throw InvalidParameter("union exceeds maximum order");
  std::vector<VertexSet> rows = copy_rows(g);
  for (VertexSet r : h.rows())
    rows.push_back(r << n);
  return Graph::from_rows(std::move(rows));
}

Graph join(const Graph &g, const Graph &h) {
  const int n = g.order();
  const int m = h.order();
  std::vector<VertexSet> rows = copy_rows(disjoint_union(g, h));
  const VertexSet left = full_set(n);
  const VertexSet right = full_set(n + m) & ~left;
  for (int v = 0; v < n; ++v)
    rows[v] |= right;
  for (int v = n; v < n + m; ++v)
    rows[v] |= left;
  return Graph::from_rows(std::move(rows));
}

Graph corona(const Graph &g, const Graph &h) {
  const int n = g.order();
  const int m = h.order();
  if (n * (1 + m) > Graph::kMaxOrder)
    throw InvalidParameter("corona exceeds maximum order");
  std::vector<VertexSet> rows = copy_rows(g);
  rows.resize(static_cast<std::size_t>(n * (1 + m)), 0);
  for (int i = 0; i < n; ++i) {
    const int base = n + i * m;
    const VertexSet copy = full_set(m) << base;
    rows[i] |= copy;
    for (int j = 0; j < m; ++j)
      rows[base + j] = (h.neighbors(j) << base) | singleton(i);
  }
  return Graph::from_rows(std::move(rows));
}

Graph remove_vertex(const Graph &g, int v) {
  require_vertex(g, v);
  return Graph::from_rows(drop_vertex(copy_rows(g), v));
}

Graph remove_edge(const Graph &g, int u, int w) {
  require_edge(g, u, w);
  std::vector<VertexSet> rows = copy_rows(g);
  rows[u] &= ~singleton(w);
  rows[w] &= ~singleton(u);
  return Graph::from_rows(std::move(rows));
}

Graph add_edge(const Graph &g, int u, int w) {
  require_vertex(g, u);
  require_vertex(g, w);
  if (u == w)
    throw InvalidEdge("self-loop at vertex " + std::to_string(u));
  if (g.adjacent(u, w))
    throw InvalidEdge("{" + std::to_string(u) + "," + std::to_string(w) + "} already present");
  std::vector<VertexSet> rows = copy_rows(g);
  rows[u] |= singleton(w);
  rows[w] |= singleton(u);
  return Graph::from_rows(std::move(rows));
}

Graph contract_edge(const Graph &g, int u, int w) {
  require_edge(g, u, w);
  const int keep = std::min(u, w);
  const int gone = std::max(u, w);
  std::vector<VertexSet> rows = copy_rows(g);
  const VertexSet merged = (rows[keep] | rows[gone]) & ~singleton(keep) & ~singleton(gone);
  for (int x = 0; x < g.order(); ++x) {
    if (contains(merged, x))
      rows[x] |= singleton(keep);
  }
  rows[keep] = merged;
  return Graph::from_rows(drop_vertex(rows, gone));
}

Graph contract_vertex(const Graph &g, int v) {
  require_vertex(g, v);
  std::vector<VertexSet> rows = copy_rows(g);
  const VertexSet nbhd = rows[v];
  for_each_vertex(nbhd, [&](int x) { rows[x] |= nbhd & ~singleton(x); });
  return Graph::from_rows(drop_vertex(rows, v));
}

Graph odot(const Graph &g, int v) {
  require_vertex(g, v);
  std::vector<VertexSet> rows = copy_rows(g);
  const VertexSet nbhd = rows[v];
  for_each_vertex(nbhd, [&](int x) { rows[x] &= ~nbhd; });
  return Graph::from_rows(std::move(rows));
}

Graph relabel(const Graph &g, const std::vector<int> &perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    throw InvalidParameter("permutation length differs from graph order");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p])
      throw InvalidParameter("relabel argument is not a permutation");
    seen[p] = true;
  }
  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for_each_vertex(g.neighbors(v), [&](int u) { rows[perm[v]] |= singleton(perm[u]); });
  return Graph::from_rows(std::move(rows));
}

} // namespace tdc
