#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tdc/coloring.hpp"
#include "tdc/graph.hpp"

namespace tdc {

struct SolverOptions {
  /// Inputs above this order raise ResourceGuard instead of running unbounded.
  int max_order = 20;
};

/// Exact parameter value plus a witness that an independent checker can re-validate.
template <class Witness>
struct SolveResult {
  int value = 0;
  Witness certificate{};
  std::uint64_t nodes_explored = 0;
  int lower_bound_used = 0;
  int upper_bound_used = 0;
};

/// A total dominating set, as a sorted vertex list.
using DominatingSet = std::vector<int>;

/// Exact chromatic number. Tries k = clique bound upward to the greedy bound
/// with a first-occurrence symmetric backtracking search; the certificate is
/// an optimal proper coloring.
SolveResult<Coloring> chromatic_number(const Graph &g, const SolverOptions &opts = {});

/// Exact total domination number by increasing-cardinality subset search.
/// Throws IsolatedVertex if some vertex has no neighbor.
SolveResult<DominatingSet> total_domination_number(const Graph &g,
                                                   const SolverOptions &opts = {});

/// Exact total dominator chromatic number.
///
/// For k = max(chi, gamma_t) upward, backtracks over vertices in decreasing
/// degree order looking for a TD-coloring with exactly k non-empty classes.
/// Class ids are introduced in first-occurrence order. A partial assignment
/// is abandoned once some vertex has no class left that it could still
/// totally dominate, or too few uncolored vertices remain to open the unused
/// classes. The first feasible k is returned with its certificate.
///
/// Throws IsolatedVertex for graphs with an isolated vertex (including K1).
SolveResult<TDCertificate> td_chromatic_number(const Graph &g, const SolverOptions &opts = {});

/// Tests for a TD-coloring with exactly k classes using the same search; used
/// to confirm that k - 1 is infeasible for a reported optimum.
std::optional<TDCertificate> find_td_coloring(const Graph &g, int k,
                                              std::uint64_t *nodes = nullptr);

/// Vertices in decreasing degree order, ties by smaller id.
std::vector<int> degree_order(const Graph &g);

} // namespace tdc
