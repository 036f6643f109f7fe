#include "tdc/enumerate.hpp"

#include <algorithm>
#include <string>

#include "tdc/error.hpp"
#include "tdc/structure.hpp"

namespace tdc {

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((mask >> bit) & 1U) {
        rows[i] |= singleton(j);
        rows[j] |= singleton(i);
      }
  return Graph::from_rows(std::move(rows));
}

std::uint64_t mask_from_graph(const Graph &g) {
  const int n = g.order();
  if (pair_count(n) > 64)
    throw ResourceGuard("graph too large for a pair mask");
  std::uint64_t mask = 0;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (g.adjacent(i, j))
        mask |= std::uint64_t{1} << bit;
  return mask;
}

ConnectedGraphEnumerator::ConnectedGraphEnumerator(int n, bool dedup) : n_(n), dedup_(dedup) {
  if (n < 1)
    throw InvalidParameter("enumeration order must be >= 1");
  if (n > kMaxEnumerationOrder)
    throw ResourceGuard("enumeration order " + std::to_string(n) + " exceeds cap " +
                        std::to_string(kMaxEnumerationOrder));
  end_mask_ = std::uint64_t{1} << pair_count(n);
}

std::optional<Graph> ConnectedGraphEnumerator::next() {
  while (next_mask_ < end_mask_) {
    Graph g = graph_from_mask(n_, next_mask_++);
    if (!is_connected(g))
      continue;
    if (dedup_ && seen_before(g))
      continue;
    return g;
  }
  return std::nullopt;
}

bool ConnectedGraphEnumerator::seen_before(const Graph &g) {
  auto &bucket = classes_[graph_invariant(g)];
  for (const Graph &rep : bucket)
    if (is_isomorphic(rep, g))
      return true;
  bucket.push_back(g);
  return false;
}

std::vector<Graph> connected_graphs(int n, bool dedup) {
  std::vector<Graph> out;
  ConnectedGraphEnumerator it(n, dedup);
  while (auto g = it.next())
    out.push_back(std::move(*g));
  return out;
}

std::vector<Graph> connected_graphs_up_to(int n_max, bool dedup) {
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n) {
    auto batch = connected_graphs(n, dedup);
    out.insert(out.end(), std::make_move_iterator(batch.begin()),
               std::make_move_iterator(batch.end()));
  }
  return out;
}

Graph random_connected_graph(int n, double edge_probability, std::mt19937_64 &rng) {
  if (n < 1 || n > Graph::kMaxOrder)
    throw InvalidParameter("random graph order out of range");
  if (edge_probability <= 0.0 && n > 1)
    throw InvalidParameter("edge probability must be positive");
  std::bernoulli_distribution coin(std::min(edge_probability, 1.0));
  for (;;) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng))
          edges.push_back({i, j});
    Graph g = Graph::from_edges(n, edges);
    if (is_connected(g))
      return g;
  }
}

} // namespace tdc
