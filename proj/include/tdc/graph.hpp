#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace tdc {

/// Vertex subsets are 64-bit masks; bit v set means vertex v is a member.
using VertexSet = std::uint64_t;

constexpr VertexSet singleton(int v) { return VertexSet{1} << v; }

/// The set {0, ..., n-1}.
constexpr VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }

constexpr int cardinality(VertexSet s) { return std::popcount(s); }

/// Calls f(v) for each member of s in increasing order.
template <class F>
void for_each_vertex(VertexSet s, F &&f) {
  while (s != 0) {
    const int v = std::countr_zero(s);
    s &= s - 1;
    f(v);
  }
}

struct Edge {
  int u = 0;
  int w = 0;

  /// The same edge with u < w.
  Edge normalized() const { return u < w ? Edge{u, w} : Edge{w, u}; }

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one neighbor set per vertex. Every factory
/// validates the simple-graph invariants (no loops, symmetric rows, no
/// members outside 0..n-1), so a Graph value is always well formed.
class Graph {
public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Duplicate edges collapse; loops and out-of-range endpoints throw.
  static Graph from_edges(int n, std::span<const Edge> edges);

  /// Build from neighbor rows; throws if the rows do not describe a simple graph.
  static Graph from_rows(std::vector<VertexSet> rows);

  int order() const { return static_cast<int>(rows_.size()); }
  int size() const;

  VertexSet vertices() const { return full_set(order()); }
  VertexSet neighbors(int v) const { return rows_[check(v)]; }
  int degree(int v) const { return cardinality(neighbors(v)); }
  bool adjacent(int u, int w) const { return contains(neighbors(u), check(w)); }
  bool has_edge(Edge e) const { return adjacent(e.u, e.w); }

  /// All edges with u < w, sorted lexicographically.
  std::vector<Edge> edges() const;

  std::span<const VertexSet> rows() const { return rows_; }

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  int check(int v) const;

  std::vector<VertexSet> rows_;
};

} // namespace tdc
