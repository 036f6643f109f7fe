#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tdc/graph.hpp"
#include "tdc/rational.hpp"
#include "tdc/solver.hpp"

namespace tdc {

enum class TheoremId {
  EdgeRemoval,
  VertexRemoval,
  EdgeContraction,
  VertexContraction,
  Odot,
  EdgeRemovalContraction,   // removal and contraction combined, edge operand
  VertexRemovalContraction, // removal and contraction combined, vertex operand
  TotalDomination,          // gamma_t <= chi_dt <= gamma_t + chi
};

/// "T2.2", ..., "Henning".
std::string theorem_name(TheoremId id);
TheoremId parse_theorem(const std::string &name);
const std::vector<TheoremId> &all_theorems();

/// Which object a check operates on.
enum class OperandKind { None, Vertex, Edge };
OperandKind operand_kind(TheoremId id);

struct Operand {
  OperandKind kind = OperandKind::None;
  int vertex = -1;
  Edge edge{};

  static Operand none() { return {}; }
  static Operand of_vertex(int v) { return {OperandKind::Vertex, v, {}}; }
  static Operand of_edge(Edge e) { return {OperandKind::Edge, -1, e.normalized()}; }

  std::string str() const;
};

/// A failed theorem hypothesis. Instances with one are skipped, never failed.
enum class SkipReason {
  Disconnected,
  OrderTooSmall,
  Bridge,
  CutVertex,
  IsolatedVertex,
};
std::string skip_reason_name(SkipReason r);

/// One inequality check: lower <= middle <= upper.
struct BoundReport {
  TheoremId theorem = TheoremId::TotalDomination;
  Graph graph;
  Operand operand;
  std::optional<SkipReason> skipped;

  Rational lower;
  Rational middle;
  Rational upper;

  /// Named parameter values that entered the inequality, e.g. ("chi_dt(G)", 3).
  std::vector<std::pair<std::string, int>> values;

  bool holds = false;
  bool tight_low = false;
  bool tight_high = false;

  /// Optimal TD-colorings of G and of the modified graph; filled only when
  /// the bound fails, for the counterexample channel.
  std::vector<TDCertificate> certificates;
};

/// Memoizing front end to the exact solvers; one per worker thread.
class Evaluator {
public:
  explicit Evaluator(SolverOptions opts = {}) : opts_(opts) {}

  SolveResult<TDCertificate> chi_dt(const Graph &g);
  int chi(const Graph &g);
  int gamma_t(const Graph &g);

  /// Drops memoized results for graphs with fewer than `order` vertices.
  void forget_below(int order);

private:
  static constexpr std::size_t kMaxCacheEntries = 1 << 18;

  using Key = std::pair<int, std::uint64_t>;
  struct KeyHash {
    std::size_t operator()(const Key &k) const {
      return std::hash<std::uint64_t>{}(k.second * 131 + static_cast<std::uint64_t>(k.first));
    }
  };

  SolverOptions opts_;
  std::unordered_map<Key, SolveResult<TDCertificate>, KeyHash> cache_;
};

// Bound checks. Each returns a report with `skipped` set when the graph or
// operand violates the theorem's hypotheses.

BoundReport check_edge_removal(const Graph &g, Edge e, Evaluator &ev);
BoundReport check_vertex_removal(const Graph &g, int v, Evaluator &ev);
BoundReport check_edge_contraction(const Graph &g, Edge e, Evaluator &ev);
BoundReport check_vertex_contraction(const Graph &g, int v, Evaluator &ev);
BoundReport check_odot(const Graph &g, int v, Evaluator &ev);
BoundReport check_removal_contraction(const Graph &g, const Operand &op, Evaluator &ev);
BoundReport check_total_domination(const Graph &g, Evaluator &ev);

/// Runs the check for `id` on one operand.
BoundReport check_theorem(TheoremId id, const Graph &g, const Operand &op, Evaluator &ev);

/// Every operand the check for `id` ranges over (edges, vertices, or one None).
std::vector<Operand> operands_for(TheoremId id, const Graph &g);

/// The bound evaluated on an instance outside the hypotheses, when the
/// modified graph still admits a TD-coloring. Observational only.
std::optional<BoundReport> check_outside_hypothesis(TheoremId id, const Graph &g,
                                                    const Operand &op, Evaluator &ev);

struct TheoremSummary {
  TheoremId theorem = TheoremId::TotalDomination;
  std::uint64_t checked = 0;
  std::uint64_t held = 0;
  std::uint64_t skipped = 0;
  std::uint64_t tight_low = 0;
  std::uint64_t tight_high = 0;
  std::map<SkipReason, std::uint64_t> skip_reasons;

  // Skipped instances on which the bound could still be evaluated.
  std::uint64_t outside_checked = 0;
  std::uint64_t outside_held = 0;

  std::optional<BoundReport> first_tight_low;
  std::optional<BoundReport> first_tight_high;
  std::optional<BoundReport> largest_upward_gap; // max middle - lower
  std::vector<BoundReport> violations;

  std::uint64_t violation_count() const { return checked - held; }
};

struct VerifyOptions {
  int n_max = 6;
  std::vector<TheoremId> theorems = all_theorems();
  int workers = 0; // 0: hardware concurrency
  bool dedup = false;
  SolverOptions solver{};
};

struct VerifySummary {
  int n_max = 0;
  bool dedup = false;
  std::uint64_t graphs = 0;
  std::vector<TheoremSummary> theorems;

  bool ok() const;
  const TheoremSummary &find(TheoremId id) const;
};

constexpr int kMaxVerifyOrder = 7;

/// Runs the selected checks over every connected graph of order 1..n_max and
/// every admissible operand. Reduction follows enumeration order, so the
/// summary does not depend on the worker count. Throws ResourceGuard above
/// kMaxVerifyOrder.
VerifySummary verify_exhaustive(const VerifyOptions &opts);

enum class Endpoint { Low, High };

/// First instance (enumeration order, labeled universe up to n_max) whose
/// report attains the requested endpoint.
std::optional<BoundReport> search_witness(TheoremId id, Endpoint endpoint, int n_max,
                                          const SolverOptions &solver = {});

/// Same over `samples` seeded random connected graphs of the given order.
std::optional<BoundReport> search_witness_random(TheoremId id, Endpoint endpoint, int order,
                                                 int samples, std::uint64_t seed,
                                                 const SolverOptions &solver = {});

// Gap-growth tables.

struct GadgetGapRow {
  int n = 0;
  int chi_dt_gadget = 0;       // closed form
  int chi_dt_minus_apex = 0;   // closed form n + 1
  int gap = 0;                 // |chi_dt_gadget - chi_dt_minus_apex|
  std::optional<int> solver_gadget;
  std::optional<int> solver_minus_apex;
};

struct OdotRatioRow {
  int n = 0;
  int chi_dt_complete = 0; // n
  int chi_dt_star = 0;     // 2
  Rational ratio;
  std::optional<int> solver_complete;
  std::optional<int> solver_star;
};

/// Rows for n in [from, to]; rows with n <= verify_up_to also carry solver values.
std::vector<GadgetGapRow> gadget_gap_table(int from, int to, int verify_up_to);
std::vector<OdotRatioRow> odot_ratio_table(int from, int to, int verify_up_to);

} // namespace tdc
