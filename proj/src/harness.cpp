#include "tdc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "tdc/closed_forms.hpp"
#include "tdc/enumerate.hpp"
#include "tdc/error.hpp"
#include "tdc/families.hpp"
#include "tdc/operations.hpp"
#include "tdc/structure.hpp"

namespace tdc {

std::string theorem_name(TheoremId id) {
  switch (id) {
  case TheoremId::EdgeRemoval:
    return "T2.2";
  case TheoremId::VertexRemoval:
    return "T2.3";
  case TheoremId::EdgeContraction:
    return "T3.1";
  case TheoremId::VertexContraction:
    return "T3.3";
  case TheoremId::Odot:
    return "T3.5";
  case TheoremId::EdgeRemovalContraction:
    return "C3.2";
  case TheoremId::VertexRemovalContraction:
    return "C3.4";
  case TheoremId::TotalDomination:
    return "Henning";
  }
  return "unknown";
}

const std::vector<TheoremId> &all_theorems() {
  static const std::vector<TheoremId> ids{
      TheoremId::EdgeRemoval,       TheoremId::VertexRemoval,
      TheoremId::EdgeContraction,   TheoremId::VertexContraction,
      TheoremId::Odot,              TheoremId::EdgeRemovalContraction,
      TheoremId::VertexRemovalContraction, TheoremId::TotalDomination};
  return ids;
}

TheoremId parse_theorem(const std::string &name) {
  for (TheoremId id : all_theorems())
    if (theorem_name(id) == name)
      return id;
  throw ParseError("unknown theorem '" + name + "'");
}

OperandKind operand_kind(TheoremId id) {
  switch (id) {
  case TheoremId::EdgeRemoval:
  case TheoremId::EdgeContraction:
  case TheoremId::EdgeRemovalContraction:
    return OperandKind::Edge;
  case TheoremId::VertexRemoval:
  case TheoremId::VertexContraction:
  case TheoremId::Odot:
  case TheoremId::VertexRemovalContraction:
    return OperandKind::Vertex;
  case TheoremId::TotalDomination:
    return OperandKind::None;
  }
  return OperandKind::None;
}

std::string Operand::str() const {
  switch (kind) {
  case OperandKind::Vertex:
    return "v=" + std::to_string(vertex);
  case OperandKind::Edge:
    return "e=" + std::to_string(edge.u) + "-" + std::to_string(edge.w);
  case OperandKind::None:
    break;
  }
  return "none";
}

std::string skip_reason_name(SkipReason r) {
  switch (r) {
  case SkipReason::Disconnected:
    return "disconnected";
  case SkipReason::OrderTooSmall:
    return "order-too-small";
  case SkipReason::Bridge:
    return "bridge";
  case SkipReason::CutVertex:
    return "cut-vertex";
  case SkipReason::IsolatedVertex:
    return "isolated-vertex";
  }
  return "unknown";
}

SolveResult<TDCertificate> Evaluator::chi_dt(const Graph &g) {
  if (pair_count(g.order()) > 64)
    return td_chromatic_number(g, opts_);
  const Key key{g.order(), mask_from_graph(g)};
  if (auto it = cache_.find(key); it != cache_.end())
    return it->second;
  auto result = td_chromatic_number(g, opts_);
  if (cache_.size() >= kMaxCacheEntries)
    cache_.clear();
  cache_.emplace(key, result);
  return result;
}

void Evaluator::forget_below(int order) {
  std::erase_if(cache_, [&](const auto &entry) { return entry.first.first < order; });
}

int Evaluator::chi(const Graph &g) { return chromatic_number(g, opts_).value; }

int Evaluator::gamma_t(const Graph &g) { return total_domination_number(g, opts_).value; }

namespace {

BoundReport start(TheoremId id, const Graph &g, const Operand &op) {
  BoundReport r;
  r.theorem = id;
  r.graph = g;
  r.operand = op;
  return r;
}

BoundReport skip(BoundReport r, SkipReason why) {
  r.skipped = why;
  return r;
}

void finish(BoundReport &r) {
  r.holds = r.lower <= r.middle && r.middle <= r.upper;
  r.tight_low = r.middle == r.lower;
  r.tight_high = r.middle == r.upper;
}

/// Fills a report whose middle term is chi_dt of the modified graph, given
/// offsets from chi_dt(G) for the two sides.
BoundReport bound_on_modified(BoundReport r, const Graph &modified, const std::string &label,
                              int low_offset, int high_offset, Evaluator &ev) {
  const auto base = ev.chi_dt(r.graph);
  const auto mod = ev.chi_dt(modified);
  r.values = {{"chi_dt(G)", base.value}, {label, mod.value}};
  r.lower = base.value + low_offset;
  r.middle = mod.value;
  r.upper = base.value + high_offset;
  finish(r);
  if (!r.holds)
    r.certificates = {base.certificate, mod.certificate};
  return r;
}

std::optional<SkipReason> connected_with_order(const Graph &g, int min_order) {
  if (!is_connected(g))
    return SkipReason::Disconnected;
  if (g.order() < min_order)
    return SkipReason::OrderTooSmall;
  return std::nullopt;
}

std::string edge_label(const char *op, Edge e) {
  return std::string("chi_dt(G") + op + std::to_string(e.u) + "-" + std::to_string(e.w) + ")";
}

std::string vertex_label(const char *op, int v) {
  return std::string("chi_dt(G") + op + std::to_string(v) + ")";
}

BoundReport evaluate_edge_removal(BoundReport r, Evaluator &ev) {
  const Edge e = r.operand.edge;
  Graph modified = remove_edge(r.graph, e.u, e.w);
  return bound_on_modified(std::move(r), modified, edge_label("-", e), -1, 2, ev);
}

BoundReport evaluate_vertex_removal(BoundReport r, Evaluator &ev) {
  const int v = r.operand.vertex;
  const int deg = r.graph.degree(v);
  Graph modified = remove_vertex(r.graph, v);
  r = bound_on_modified(std::move(r), modified, vertex_label("-", v), -2, deg - 1, ev);
  r.values.emplace_back("deg(v)", deg);
  return r;
}

BoundReport evaluate_vertex_contraction(BoundReport r, Evaluator &ev) {
  const int v = r.operand.vertex;
  const int deg = r.graph.degree(v);
  Graph modified = contract_vertex(r.graph, v);
  r = bound_on_modified(std::move(r), modified, vertex_label("/", v), -2, deg - 1, ev);
  r.values.emplace_back("deg(v)", deg);
  return r;
}

BoundReport evaluate_corollary_edge(BoundReport r, Evaluator &ev) {
  const Edge e = r.operand.edge;
  const auto base = ev.chi_dt(r.graph);
  const auto removed = ev.chi_dt(remove_edge(r.graph, e.u, e.w));
  const auto contracted = ev.chi_dt(contract_edge(r.graph, e.u, e.w));
  const int sum = removed.value + contracted.value;
  r.values = {{"chi_dt(G)", base.value},
              {edge_label("-", e), removed.value},
              {edge_label("/", e), contracted.value}};
  r.lower = Rational(sum - 3, 2);
  r.middle = base.value;
  r.upper = Rational(sum + 3, 2);
  finish(r);
  if (!r.holds)
    r.certificates = {base.certificate, removed.certificate, contracted.certificate};
  return r;
}

BoundReport evaluate_corollary_vertex(BoundReport r, Evaluator &ev) {
  const int v = r.operand.vertex;
  const int deg = r.graph.degree(v);
  const auto base = ev.chi_dt(r.graph);
  const auto removed = ev.chi_dt(remove_vertex(r.graph, v));
  const auto contracted = ev.chi_dt(contract_vertex(r.graph, v));
  const int sum = removed.value + contracted.value;
  r.values = {{"chi_dt(G)", base.value},
              {vertex_label("-", v), removed.value},
              {vertex_label("/", v), contracted.value},
              {"deg(v)", deg}};
  r.lower = Rational(sum, 2) - deg + 1;
  r.middle = base.value;
  r.upper = Rational(sum, 2) + 2;
  finish(r);
  if (!r.holds)
    r.certificates = {base.certificate, removed.certificate, contracted.certificate};
  return r;
}

} // namespace

BoundReport check_edge_removal(const Graph &g, Edge e, Evaluator &ev) {
  BoundReport r = start(TheoremId::EdgeRemoval, g, Operand::of_edge(e));
  if (!g.has_edge(e))
    throw InvalidEdge("check_edge_removal: not an edge");
  if (auto why = connected_with_order(g, 3))
    return skip(std::move(r), *why);
  if (is_bridge(g, e))
    return skip(std::move(r), SkipReason::Bridge);
  return evaluate_edge_removal(std::move(r), ev);
}

BoundReport check_vertex_removal(const Graph &g, int v, Evaluator &ev) {
  BoundReport r = start(TheoremId::VertexRemoval, g, Operand::of_vertex(v));
  if (auto why = connected_with_order(g, 3))
    return skip(std::move(r), *why);
  if (is_cut_vertex(g, v))
    return skip(std::move(r), SkipReason::CutVertex);
  return evaluate_vertex_removal(std::move(r), ev);
}

BoundReport check_edge_contraction(const Graph &g, Edge e, Evaluator &ev) {
  BoundReport r = start(TheoremId::EdgeContraction, g, Operand::of_edge(e));
  if (!g.has_edge(e))
    throw InvalidEdge("check_edge_contraction: not an edge");
  if (auto why = connected_with_order(g, 3))
    return skip(std::move(r), *why);
  return bound_on_modified(std::move(r), contract_edge(g, e.u, e.w), edge_label("/", e), -2, 1,
                           ev);
}

BoundReport check_vertex_contraction(const Graph &g, int v, Evaluator &ev) {
  BoundReport r = start(TheoremId::VertexContraction, g, Operand::of_vertex(v));
  if (auto why = connected_with_order(g, 3))
    return skip(std::move(r), *why);
  return evaluate_vertex_contraction(std::move(r), ev);
}

BoundReport check_odot(const Graph &g, int v, Evaluator &ev) {
  BoundReport r = start(TheoremId::Odot, g, Operand::of_vertex(v));
  if (auto why = connected_with_order(g, 2))
    return skip(std::move(r), *why);
  const int deg = g.degree(v);
  r = bound_on_modified(std::move(r), odot(g, v), vertex_label(" odot ", v), -deg + 1, 1, ev);
  r.values.emplace_back("deg(v)", deg);
  return r;
}

BoundReport check_removal_contraction(const Graph &g, const Operand &op, Evaluator &ev) {
  if (op.kind == OperandKind::Edge) {
    BoundReport r = start(TheoremId::EdgeRemovalContraction, g, op);
    if (!g.has_edge(op.edge))
      throw InvalidEdge("check_removal_contraction: not an edge");
    if (auto why = connected_with_order(g, 3))
      return skip(std::move(r), *why);
    if (is_bridge(g, op.edge))
      return skip(std::move(r), SkipReason::Bridge);
    return evaluate_corollary_edge(std::move(r), ev);
  }
  if (op.kind == OperandKind::Vertex) {
    BoundReport r = start(TheoremId::VertexRemovalContraction, g, op);
    if (auto why = connected_with_order(g, 3))
      return skip(std::move(r), *why);
    if (is_cut_vertex(g, op.vertex))
      return skip(std::move(r), SkipReason::CutVertex);
    return evaluate_corollary_vertex(std::move(r), ev);
  }
  throw InvalidParameter("corollary checks need a vertex or edge operand");
}

BoundReport check_total_domination(const Graph &g, Evaluator &ev) {
  BoundReport r = start(TheoremId::TotalDomination, g, Operand::none());
  if (g.order() == 0 || has_isolated_vertex(g))
    return skip(std::move(r), SkipReason::IsolatedVertex);
  const auto td = ev.chi_dt(g);
  const int gamma = ev.gamma_t(g);
  const int chi = ev.chi(g);
  r.values = {{"gamma_t(G)", gamma}, {"chi_dt(G)", td.value}, {"chi(G)", chi}};
  r.lower = gamma;
  r.middle = td.value;
  r.upper = gamma + chi;
  finish(r);
  if (!r.holds)
    r.certificates = {td.certificate};
  return r;
}

BoundReport check_theorem(TheoremId id, const Graph &g, const Operand &op, Evaluator &ev) {
  if (op.kind != operand_kind(id))
    throw InvalidParameter(theorem_name(id) + " expects a different operand kind");
  switch (id) {
  case TheoremId::EdgeRemoval:
    return check_edge_removal(g, op.edge, ev);
  case TheoremId::VertexRemoval:
    return check_vertex_removal(g, op.vertex, ev);
  case TheoremId::EdgeContraction:
    return check_edge_contraction(g, op.edge, ev);
  case TheoremId::VertexContraction:
    return check_vertex_contraction(g, op.vertex, ev);
  case TheoremId::Odot:
    return check_odot(g, op.vertex, ev);
  case TheoremId::EdgeRemovalContraction:
  case TheoremId::VertexRemovalContraction:
    return check_removal_contraction(g, op, ev);
  case TheoremId::TotalDomination:
    return check_total_domination(g, ev);
  }
  throw InvalidParameter("unknown theorem");
}

std::vector<Operand> operands_for(TheoremId id, const Graph &g) {
  std::vector<Operand> out;
  switch (operand_kind(id)) {
  case OperandKind::Edge:
    for (const Edge &e : g.edges())
      out.push_back(Operand::of_edge(e));
    break;
  case OperandKind::Vertex:
    for (int v = 0; v < g.order(); ++v)
      out.push_back(Operand::of_vertex(v));
    break;
  case OperandKind::None:
    out.push_back(Operand::none());
    break;
  }
  return out;
}

std::optional<BoundReport> check_outside_hypothesis(TheoremId id, const Graph &g,
                                                    const Operand &op, Evaluator &ev) {
  // Only the bridge / cut-vertex hypotheses are dropped; the graph itself must
  // still be connected and every graph involved free of isolated vertices.
  if (!is_connected(g) || g.order() < 3)
    return std::nullopt;
  BoundReport r = start(id, g, op);
  auto usable = [](const Graph &h) { return h.order() >= 2 && !has_isolated_vertex(h); };
  switch (id) {
  case TheoremId::EdgeRemoval:
    if (!usable(remove_edge(g, op.edge.u, op.edge.w)))
      return std::nullopt;
    return evaluate_edge_removal(std::move(r), ev);
  case TheoremId::VertexRemoval:
    if (!usable(remove_vertex(g, op.vertex)))
      return std::nullopt;
    return evaluate_vertex_removal(std::move(r), ev);
  case TheoremId::EdgeRemovalContraction:
    if (!usable(remove_edge(g, op.edge.u, op.edge.w)))
      return std::nullopt;
    return evaluate_corollary_edge(std::move(r), ev);
  case TheoremId::VertexRemovalContraction:
    if (!usable(remove_vertex(g, op.vertex)))
      return std::nullopt;
    return evaluate_corollary_vertex(std::move(r), ev);
  default:
    return std::nullopt;
  }
}

bool VerifySummary::ok() const {
  return std::all_of(theorems.begin(), theorems.end(),
                     [](const TheoremSummary &t) { return t.violation_count() == 0; });
}

const TheoremSummary &VerifySummary::find(TheoremId id) const {
  for (const auto &t : theorems)
    if (t.theorem == id)
      return t;
  throw InvalidParameter(theorem_name(id) + " was not part of this run");
}

namespace {

/// Everything one graph contributes to the summary, in operand order.
struct GraphOutcome {
  std::vector<TheoremSummary> per_theorem;
};

GraphOutcome check_graph(const Graph &g, const std::vector<TheoremId> &ids, Evaluator &ev) {
  GraphOutcome out;
  for (TheoremId id : ids) {
    TheoremSummary s;
    s.theorem = id;
    for (const Operand &op : operands_for(id, g)) {
      BoundReport r = check_theorem(id, g, op, ev);
      if (r.skipped) {
        ++s.skipped;
        ++s.skip_reasons[*r.skipped];
        if (auto outside = check_outside_hypothesis(id, g, op, ev)) {
          ++s.outside_checked;
          s.outside_held += outside->holds ? 1 : 0;
        }
        continue;
      }
      ++s.checked;
      if (r.holds)
        ++s.held;
      if (r.tight_low)
        ++s.tight_low;
      if (r.tight_high)
        ++s.tight_high;
      if (r.tight_low && !s.first_tight_low)
        s.first_tight_low = r;
      if (r.tight_high && !s.first_tight_high)
        s.first_tight_high = r;
      if (!s.largest_upward_gap ||
          r.middle - r.lower > s.largest_upward_gap->middle - s.largest_upward_gap->lower)
        s.largest_upward_gap = r;
      if (!r.holds)
        s.violations.push_back(std::move(r));
    }
    out.per_theorem.push_back(std::move(s));
  }
  return out;
}

void merge(TheoremSummary &into, TheoremSummary &&part) {
  into.checked += part.checked;
  into.held += part.held;
  into.skipped += part.skipped;
  into.tight_low += part.tight_low;
  into.tight_high += part.tight_high;
  into.outside_checked += part.outside_checked;
  into.outside_held += part.outside_held;
  for (const auto &[why, count] : part.skip_reasons)
    into.skip_reasons[why] += count;
  if (!into.first_tight_low && part.first_tight_low)
    into.first_tight_low = std::move(part.first_tight_low);
  if (!into.first_tight_high && part.first_tight_high)
    into.first_tight_high = std::move(part.first_tight_high);
  if (part.largest_upward_gap &&
      (!into.largest_upward_gap ||
       part.largest_upward_gap->middle - part.largest_upward_gap->lower >
           into.largest_upward_gap->middle - into.largest_upward_gap->lower))
    into.largest_upward_gap = std::move(part.largest_upward_gap);
  for (auto &v : part.violations)
    into.violations.push_back(std::move(v));
}

} // namespace

VerifySummary verify_exhaustive(const VerifyOptions &opts) {
  if (opts.n_max < 1)
    throw InvalidParameter("n_max must be >= 1");
  if (opts.n_max > kMaxVerifyOrder)
    throw ResourceGuard("verify n_max " + std::to_string(opts.n_max) + " exceeds cap " +
                        std::to_string(kMaxVerifyOrder));

  int workers = opts.workers > 0 ? opts.workers
                                 : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, 256);

  VerifySummary summary;
  summary.n_max = opts.n_max;
  summary.dedup = opts.dedup;
  for (TheoremId id : opts.theorems) {
    TheoremSummary s;
    s.theorem = id;
    summary.theorems.push_back(std::move(s));
  }

  // The universe is streamed in blocks; each block is checked in parallel and
  // folded into the summary in enumeration order.
  constexpr std::size_t kBlock = 8192;
  std::vector<Graph> block;
  std::vector<GraphOutcome> outcomes;
  std::vector<Evaluator> evaluators(static_cast<std::size_t>(workers), Evaluator(opts.solver));

  auto run_block = [&] {
    outcomes.assign(block.size(), GraphOutcome{});
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr failure;
    auto work = [&](Evaluator &ev) {
      try {
        for (std::size_t i = next++; i < block.size() && !failed; i = next++)
          outcomes[i] = check_graph(block[i], opts.theorems, ev);
      } catch (...) {
        if (!failed.exchange(true))
          failure = std::current_exception();
      }
    };
    if (workers == 1) {
      work(evaluators[0]);
    } else {
      std::vector<std::thread> pool;
      for (auto &ev : evaluators)
        pool.emplace_back(work, std::ref(ev));
      for (auto &t : pool)
        t.join();
    }
    if (failure)
      std::rethrow_exception(failure);
    for (auto &outcome : outcomes)
      for (std::size_t t = 0; t < outcome.per_theorem.size(); ++t)
        merge(summary.theorems[t], std::move(outcome.per_theorem[t]));
    summary.graphs += block.size();
    block.clear();
  };

  for (int n = 1; n <= opts.n_max; ++n) {
    ConnectedGraphEnumerator it(n, opts.dedup);
    while (auto g = it.next()) {
      block.push_back(std::move(*g));
      if (block.size() == kBlock)
        run_block();
    }
    // Later orders only revisit graphs of order >= n.
    for (auto &ev : evaluators)
      ev.forget_below(n);
  }
  if (!block.empty())
    run_block();
  return summary;
}

namespace {

std::optional<BoundReport> attained(TheoremId id, Endpoint endpoint, const Graph &g,
                                    Evaluator &ev) {
  for (const Operand &op : operands_for(id, g)) {
    BoundReport r = check_theorem(id, g, op, ev);
    if (r.skipped)
      continue;
    if (endpoint == Endpoint::Low ? r.tight_low : r.tight_high)
      return r;
  }
  return std::nullopt;
}

} // namespace

std::optional<BoundReport> search_witness(TheoremId id, Endpoint endpoint, int n_max,
                                          const SolverOptions &solver) {
  if (n_max > kMaxVerifyOrder)
    throw ResourceGuard("search n_max exceeds cap " + std::to_string(kMaxVerifyOrder));
  Evaluator ev(solver);
  for (int n = 1; n <= n_max; ++n) {
    ConnectedGraphEnumerator it(n);
    while (auto g = it.next())
      if (auto r = attained(id, endpoint, *g, ev))
        return r;
  }
  return std::nullopt;
}

std::optional<BoundReport> search_witness_random(TheoremId id, Endpoint endpoint, int order,
                                                 int samples, std::uint64_t seed,
                                                 const SolverOptions &solver) {
  if (order > solver.max_order)
    throw ResourceGuard("search order exceeds solver cap " + std::to_string(solver.max_order));
  std::mt19937_64 rng(seed);
  Evaluator ev(solver);
  for (int i = 0; i < samples; ++i) {
    const Graph g = random_connected_graph(order, 0.5, rng);
    if (auto r = attained(id, endpoint, g, ev))
      return r;
  }
  return std::nullopt;
}

std::vector<GadgetGapRow> gadget_gap_table(int from, int to, int verify_up_to) {
  std::vector<GadgetGapRow> rows;
  for (int n = std::max(from, 2); n <= to; ++n) {
    GadgetGapRow row;
    row.n = n;
    row.chi_dt_gadget = chi_dt_gadget(n).value;
    row.chi_dt_minus_apex = chi_dt_corona(CoronaBase::Path, n).value;
    row.gap = std::abs(row.chi_dt_gadget - row.chi_dt_minus_apex);
    if (n <= verify_up_to) {
      const Graph gadget = build_family({FamilyKind::ApexCorona, {n}});
      row.solver_gadget = td_chromatic_number(gadget).value;
      row.solver_minus_apex = td_chromatic_number(remove_vertex(gadget, gadget_apex(n))).value;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<OdotRatioRow> odot_ratio_table(int from, int to, int verify_up_to) {
  std::vector<OdotRatioRow> rows;
  for (int n = std::max(from, 3); n <= to; ++n) {
    OdotRatioRow row;
    row.n = n;
    row.chi_dt_complete = n;
    row.chi_dt_star = 2;
    row.ratio = Rational(n, 2);
    if (n <= verify_up_to) {
      const Graph k = complete_graph(n);
      row.solver_complete = td_chromatic_number(k).value;
      row.solver_star = td_chromatic_number(odot(k, 0)).value;
    }
    rows.push_back(row);
  }
  return rows;
}

} // namespace tdc
