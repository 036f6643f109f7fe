#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "tdc/graph.hpp"
#include "tdc/isomorphism.hpp"

namespace tdc {

constexpr int kMaxEnumerationOrder = 8;

/// Number of vertex pairs, i.e. bits in an upper-triangle mask.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Graph whose edges are the set bits of `mask`; bit b stands for the b-th
/// pair (i, j), i < j, in lexicographic order (0,1), (0,2), ..., (n-2,n-1).
Graph graph_from_mask(int n, std::uint64_t mask);

/// Inverse of graph_from_mask.
std::uint64_t mask_from_graph(const Graph &g);

/// Stream of connected simple graphs on n labeled vertices.
///
/// Visits upper-triangle masks in ascending order and yields the connected
/// ones. With dedup set, only the first graph of each isomorphism class is
/// yielded. Throws ResourceGuard for n > kMaxEnumerationOrder.
class ConnectedGraphEnumerator {
public:
  explicit ConnectedGraphEnumerator(int n, bool dedup = false);

  std::optional<Graph> next();

  int order() const { return n_; }

private:
  bool seen_before(const Graph &g);

  int n_;
  bool dedup_;
  std::uint64_t next_mask_ = 0;
  std::uint64_t end_mask_;
  std::map<std::vector<VertexInvariant>, std::vector<Graph>> classes_;
};

/// Collects the whole stream.
std::vector<Graph> connected_graphs(int n, bool dedup = false);

/// Connected graphs of every order 1..n_max, by increasing order.
std::vector<Graph> connected_graphs_up_to(int n_max, bool dedup = false);

/// G(n, p) sample conditioned on connectivity (rejection sampling).
Graph random_connected_graph(int n, double edge_probability, std::mt19937_64 &rng);

} // namespace tdc
