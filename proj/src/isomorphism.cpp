#include "tdc/isomorphism.hpp"

#include <algorithm>
#include <numeric>

namespace tdc {

std::vector<VertexInvariant> vertex_invariants(const Graph &g) {
  std::vector<VertexInvariant> out(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    VertexInvariant &key = out[v];
    key.push_back(g.degree(v));
    for_each_vertex(g.neighbors(v), [&](int u) { key.push_back(g.degree(u)); });
    std::sort(key.begin() + 1, key.end());
  }
  return out;
}

std::vector<VertexInvariant> graph_invariant(const Graph &g) {
  auto keys = vertex_invariants(g);
  std::sort(keys.begin(), keys.end());
  return keys;
}

namespace {

class Matcher {
public:
  Matcher(const Graph &g, const Graph &h) : g_(g), h_(h) {
    const int n = g.order();
    const auto gk = vertex_invariants(g);
    const auto hk = vertex_invariants(h);
    candidates_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
      for (int x = 0; x < n; ++x)
        if (gk[v] == hk[x])
          candidates_[v].push_back(x);

    // Fewest candidates first, preferring vertices adjacent to ones already ordered.
    VertexSet placed = 0;
    for (int step = 0; step < n; ++step) {
      int best = -1;
      auto better = [&](int v) {
        if (best < 0)
          return true;
        const bool va = (g.neighbors(v) & placed) != 0;
        const bool ba = (g.neighbors(best) & placed) != 0;
        if (va != ba)
          return va;
        return candidates_[v].size() < candidates_[best].size();
      };
      for (int v = 0; v < n; ++v)
        if (!contains(placed, v) && better(v))
          best = v;
      order_.push_back(best);
      placed |= singleton(best);
    }
    image_.assign(static_cast<std::size_t>(n), -1);
  }

  std::optional<std::vector<int>> run() {
    if (search(0))
      return image_;
    return std::nullopt;
  }

private:
  bool search(std::size_t depth) {
    if (depth == order_.size())
      return true;
    const int v = order_[depth];
    for (int x : candidates_[v]) {
      if (contains(used_, x) || !consistent(depth, v, x))
        continue;
      image_[v] = x;
      used_ |= singleton(x);
      if (search(depth + 1))
        return true;
      used_ &= ~singleton(x);
      image_[v] = -1;
    }
    return false;
  }

  bool consistent(std::size_t depth, int v, int x) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const int u = order_[i];
      if (g_.adjacent(v, u) != h_.adjacent(x, image_[u]))
        return false;
    }
    return true;
  }

  const Graph &g_;
  const Graph &h_;
  std::vector<std::vector<int>> candidates_;
  std::vector<int> order_;
  std::vector<int> image_;
  VertexSet used_ = 0;
};

} // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph &g, const Graph &h) {
  if (g.order() != h.order() || g.size() != h.size())
    return std::nullopt;
  if (graph_invariant(g) != graph_invariant(h))
    return std::nullopt;
  return Matcher(g, h).run();
}

bool is_isomorphic(const Graph &g, const Graph &h) { return find_isomorphism(g, h).has_value(); }

} // namespace tdc
