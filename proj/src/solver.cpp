#include "tdc/solver.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tdc/error.hpp"
#include "tdc/structure.hpp"

namespace tdc {
namespace {

void guard_order(const Graph &g, const SolverOptions &opts) {
  if (g.order() > opts.max_order)
    throw ResourceGuard("graph order " + std::to_string(g.order()) + " exceeds solver cap " +
                        std::to_string(opts.max_order));
}

void guard_isolated(const Graph &g) {
  if (g.order() == 0)
    throw InvalidParameter("empty graph");
  if (has_isolated_vertex(g))
    throw IsolatedVertex("graph has an isolated vertex; total domination is undefined");
}

/// Largest clique found by growing greedily from every vertex.
int greedy_clique_size(const Graph &g, const std::vector<int> &order) {
  int best = g.order() > 0 ? 1 : 0;
  for (int seed : order) {
    VertexSet candidates = g.neighbors(seed);
    int size = 1;
    for (int v : order) {
      if (contains(candidates, v)) {
        ++size;
        candidates &= g.neighbors(v);
      }
    }
    best = std::max(best, size);
  }
  return best;
}

Coloring greedy_coloring(const Graph &g, const std::vector<int> &order) {
  std::vector<int> colors(static_cast<std::size_t>(g.order()), 0);
  for (int v : order) {
    std::vector<bool> taken(static_cast<std::size_t>(g.order()) + 2, false);
    for_each_vertex(g.neighbors(v), [&](int u) { taken[colors[u]] = true; });
    int c = 1;
    while (taken[c])
      ++c;
    colors[v] = c;
  }
  return Coloring::from_colors(std::move(colors));
}

/// Backtracking k-colorability test in a fixed vertex order.
class ProperSearch {
public:
  ProperSearch(const Graph &g, const std::vector<int> &order, int k)
      : g_(g), order_(order), k_(k), colors_(static_cast<std::size_t>(g.order()), 0),
        classes_(static_cast<std::size_t>(k) + 1, 0) {}

  bool run() { return dfs(0, 0); }
  std::uint64_t nodes() const { return nodes_; }
  Coloring coloring() const { return Coloring::from_colors(colors_); }

private:
  bool dfs(std::size_t pos, int used) {
    ++nodes_;
    if (pos == order_.size())
      return true;
    const int v = order_[pos];
    const int top = std::min(used + 1, k_);
    for (int c = 1; c <= top; ++c) {
      if (classes_[c] & g_.neighbors(v))
        continue;
      colors_[v] = c;
      classes_[c] |= singleton(v);
      if (dfs(pos + 1, std::max(used, c)))
        return true;
      classes_[c] &= ~singleton(v);
      colors_[v] = 0;
    }
    return false;
  }

  const Graph &g_;
  const std::vector<int> &order_;
  int k_;
  std::vector<int> colors_;
  std::vector<VertexSet> classes_;
  std::uint64_t nodes_ = 0;
};

/// Backtracking search for a TD-coloring with exactly k non-empty classes.
class TDSearch {
public:
  TDSearch(const Graph &g, const std::vector<int> &order, int k)
      : g_(g), order_(order), k_(k), colors_(static_cast<std::size_t>(g.order()), 0),
        classes_(static_cast<std::size_t>(k) + 1, 0), uncolored_(g.vertices()) {}

  bool run() { return k_ >= 1 && k_ <= g_.order() && dfs(0, 0); }
  std::uint64_t nodes() const { return nodes_; }
  Coloring coloring() const { return {colors_, k_}; }

private:
  bool dfs(std::size_t pos, int used) {
    ++nodes_;
    if (pos == order_.size())
      return used == k_;
    const int v = order_[pos];
    const int top = std::min(used + 1, k_);
    for (int c = 1; c <= top; ++c) {
      if (classes_[c] & g_.neighbors(v))
        continue;
      colors_[v] = c;
      classes_[c] |= singleton(v);
      uncolored_ &= ~singleton(v);
      const int now_used = std::max(used, c);
      if (completable(now_used) && dfs(pos + 1, now_used))
        return true;
      uncolored_ |= singleton(v);
      classes_[c] &= ~singleton(v);
      colors_[v] = 0;
    }
    return false;
  }

  // Classes 1..used are non-empty (first-occurrence order). A non-empty class
  // stays available to x while it lies inside N(x); an unopened class is
  // available only if x still has an uncolored neighbor to put in it.
  bool completable(int used) const {
    if (cardinality(uncolored_) < k_ - used)
      return false;
    for (int x = 0; x < g_.order(); ++x) {
      const VertexSet nbhd = g_.neighbors(x);
      if (used < k_ && (nbhd & uncolored_) != 0)
        continue;
      bool live = false;
      for (int c = 1; c <= used && !live; ++c)
        live = (classes_[c] & ~nbhd) == 0;
      if (!live)
        return false;
    }
    return true;
  }

  const Graph &g_;
  const std::vector<int> &order_;
  int k_;
  std::vector<int> colors_;
  std::vector<VertexSet> classes_;
  VertexSet uncolored_;
  std::uint64_t nodes_ = 0;
};

} // namespace

std::vector<int> degree_order(const Graph &g) {
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

SolveResult<Coloring> chromatic_number(const Graph &g, const SolverOptions &opts) {
  guard_order(g, opts);
  if (g.order() == 0)
    throw InvalidParameter("empty graph");
  const auto order = degree_order(g);
  SolveResult<Coloring> result;
  result.lower_bound_used = greedy_clique_size(g, order);
  Coloring greedy = greedy_coloring(g, order);
  result.upper_bound_used = greedy.k;

  for (int k = result.lower_bound_used; k < greedy.k; ++k) {
    ProperSearch search(g, order, k);
    const bool found = search.run();
    result.nodes_explored += search.nodes();
    if (found) {
      result.value = k;
      result.certificate = search.coloring();
      return result;
    }
  }
  result.value = greedy.k;
  result.certificate = std::move(greedy);
  return result;
}

SolveResult<DominatingSet> total_domination_number(const Graph &g, const SolverOptions &opts) {
  guard_order(g, opts);
  guard_isolated(g);
  const int n = g.order();
  int max_degree = 0;
  for (int v = 0; v < n; ++v)
    max_degree = std::max(max_degree, g.degree(v));

  SolveResult<DominatingSet> result;
  result.lower_bound_used = std::max(2, (n + max_degree - 1) / max_degree);
  result.upper_bound_used = n;
  const VertexSet all = g.vertices();

  for (int s = result.lower_bound_used; s <= n; ++s) {
    // Gosper's hack: every n-bit mask with s bits, ascending.
    VertexSet subset = full_set(s);
    while (subset <= all) {
      ++result.nodes_explored;
      VertexSet covered = 0;
      for_each_vertex(subset, [&](int v) { covered |= g.neighbors(v); });
      if (covered == all) {
        result.value = s;
        for_each_vertex(subset, [&](int v) { result.certificate.push_back(v); });
        return result;
      }
      const VertexSet low = subset & (~subset + 1);
      const VertexSet ripple = subset + low;
      subset = (((ripple ^ subset) >> 2) / low) | ripple;
      if (ripple == 0)
        break;
    }
  }
  // Unreachable without isolated vertices: V itself is total dominating.
  throw Error("total domination search failed");
}

std::optional<TDCertificate> find_td_coloring(const Graph &g, int k, std::uint64_t *nodes) {
  guard_isolated(g);
  const auto order = degree_order(g);
  TDSearch search(g, order, k);
  const bool found = search.run();
  if (nodes != nullptr)
    *nodes += search.nodes();
  if (!found)
    return std::nullopt;
  auto cert = is_td_coloring(g, search.coloring());
  if (!cert)
    throw Error("internal error: TD search produced an invalid coloring");
  return cert;
}

SolveResult<TDCertificate> td_chromatic_number(const Graph &g, const SolverOptions &opts) {
  guard_order(g, opts);
  guard_isolated(g);
  const auto chi = chromatic_number(g, opts);
  const auto gamma = total_domination_number(g, opts);

  SolveResult<TDCertificate> result;
  result.lower_bound_used = std::max(chi.value, gamma.value);
  result.upper_bound_used = std::min(g.order(), chi.value + gamma.value);
  result.nodes_explored = chi.nodes_explored + gamma.nodes_explored;

  for (int k = result.lower_bound_used; k <= result.upper_bound_used; ++k) {
    if (auto cert = find_td_coloring(g, k, &result.nodes_explored)) {
      result.value = k;
      result.certificate = std::move(*cert);
      return result;
    }
  }
  throw Error("internal error: no TD-coloring within the sandwich bound");
}

} // namespace tdc
