#include <doctest.h>

#include <sstream>

#include "tdc/enumerate.hpp"
#include "tdc/error.hpp"
#include "tdc/families.hpp"
#include "tdc/harness.hpp"
#include "tdc/operations.hpp"
#include "tdc/report_io.hpp"
#include "tdc/structure.hpp"

using namespace tdc;

namespace {

int vertex_of_degree(const Graph &g, int d) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == d)
      return v;
  return -1;
}

int value_of(const BoundReport &r, const std::string &name) {
  for (const auto &[key, value] : r.values)
    if (key == name)
      return value;
  FAIL("missing value " << name);
  return -1;
}

// Does the reported reason really name a failed hypothesis?
bool reason_is_genuine(const BoundReport &r) {
  const Graph &g = r.graph;
  switch (*r.skipped) {
  case SkipReason::Disconnected:
    return !is_connected(g);
  case SkipReason::OrderTooSmall:
    return g.order() < 3 || (r.theorem == TheoremId::Odot && g.order() < 2);
  case SkipReason::Bridge:
    return is_bridge(g, r.operand.edge);
  case SkipReason::CutVertex:
    return is_cut_vertex(g, r.operand.vertex);
  case SkipReason::IsolatedVertex:
    return g.order() == 0 || has_isolated_vertex(g);
  }
  return false;
}

} // namespace

TEST_CASE("theorem names") {
  for (TheoremId id : all_theorems())
    CHECK(parse_theorem(theorem_name(id)) == id);
  CHECK(theorem_name(TheoremId::EdgeContraction) == "T3.1");
  CHECK(theorem_name(TheoremId::TotalDomination) == "Henning");
  CHECK_THROWS_AS(parse_theorem("T9.9"), ParseError);
}

TEST_CASE("edge removal bound") {
  Evaluator ev;
  const BoundReport k3 = check_edge_removal(complete_graph(3), {0, 1}, ev);
  CHECK(value_of(k3, "chi_dt(G)") == 3);
  CHECK(k3.middle == Rational(2));
  CHECK(k3.holds);
  CHECK(k3.tight_low);

  const BoundReport c4 = check_edge_removal(cycle_graph(4), {0, 1}, ev);
  CHECK(value_of(c4, "chi_dt(G)") == 2);
  CHECK(c4.middle == Rational(3));
  CHECK(c4.holds);
  CHECK_FALSE(c4.tight_low);
  CHECK_FALSE(c4.tight_high);

  const BoundReport bridge = check_edge_removal(path_graph(4), {1, 2}, ev);
  REQUIRE(bridge.skipped.has_value());
  CHECK(*bridge.skipped == SkipReason::Bridge);
  CHECK_THROWS_AS(check_edge_removal(path_graph(4), {0, 2}, ev), InvalidEdge);
}

TEST_CASE("vertex removal bound") {
  Evaluator ev;
  // C10 - v = P9: chi_dt 7 and 6, one above the lower end.
  const BoundReport c10 = check_vertex_removal(cycle_graph(10), 0, ev);
  CHECK(value_of(c10, "chi_dt(G)") == 7);
  CHECK(c10.middle == Rational(6));
  CHECK(c10.lower == Rational(5));
  CHECK(c10.holds);
  CHECK_FALSE(c10.tight_low);

  const Graph gadget = build_family({FamilyKind::ApexCorona, {4}});
  const BoundReport apex = check_vertex_removal(gadget, gadget_apex(4), ev);
  CHECK(value_of(apex, "chi_dt(G)") == 5);
  CHECK(apex.middle == Rational(5));
  CHECK(apex.holds);

  for (int v = 0; v < 2; ++v) {
    const BoundReport k2 = check_vertex_removal(complete_graph(2), v, ev);
    REQUIRE(k2.skipped.has_value());
    CHECK(*k2.skipped == SkipReason::OrderTooSmall);
  }
  const BoundReport cut = check_vertex_removal(path_graph(3), 1, ev);
  CHECK(*cut.skipped == SkipReason::CutVertex);
}

TEST_CASE("contraction bounds") {
  Evaluator ev;
  const BoundReport c4 = check_edge_contraction(cycle_graph(4), {0, 1}, ev);
  CHECK(value_of(c4, "chi_dt(G)") == 2);
  CHECK(c4.middle == Rational(3));
  CHECK(c4.tight_high);

  const BoundReport c5 = check_edge_contraction(cycle_graph(5), {0, 1}, ev);
  CHECK(value_of(c5, "chi_dt(G)") == 4);
  CHECK(c5.middle == Rational(2));
  CHECK(c5.tight_low);

  const BoundReport k3 = check_edge_contraction(complete_graph(3), {0, 1}, ev);
  CHECK(k3.middle == Rational(2));
  CHECK(k3.holds);

  const Graph k24 = complete_bipartite_graph(2, 4);
  const BoundReport kv = check_vertex_contraction(k24, vertex_of_degree(k24, 4), ev);
  CHECK(value_of(kv, "chi_dt(G)") == 2);
  CHECK(kv.middle == Rational(5));
  CHECK(kv.upper == Rational(5));
  CHECK(kv.tight_high);

  const BoundReport c5v = check_vertex_contraction(cycle_graph(5), 2, ev);
  CHECK(c5v.middle == Rational(2));
  CHECK(c5v.tight_low);

  const BoundReport star = check_vertex_contraction(star_graph(4), 0, ev);
  CHECK(value_of(star, "chi_dt(G)") == 2);
  CHECK(star.middle == Rational(4));
  CHECK(star.holds);
  CHECK_FALSE(star.skipped.has_value());
}

TEST_CASE("odot bound") {
  Evaluator ev;
  for (int v = 0; v < 6; ++v) {
    const BoundReport k6 = check_odot(complete_graph(6), v, ev);
    CHECK(k6.lower == Rational(2));
    CHECK(k6.middle == Rational(2));
    CHECK(k6.tight_low);
  }
  for (int v = 0; v < 5; ++v) {
    const BoundReport p5 = check_odot(path_graph(5), v, ev);
    CHECK(p5.middle == Rational(value_of(p5, "chi_dt(G)")));
    CHECK(p5.holds);
  }
  CHECK(*check_odot(Graph(1), 0, ev).skipped == SkipReason::OrderTooSmall);
}

TEST_CASE("combined removal and contraction bounds") {
  Evaluator ev;
  const BoundReport c5 = check_removal_contraction(cycle_graph(5), Operand::of_edge({0, 1}), ev);
  CHECK(c5.theorem == TheoremId::EdgeRemovalContraction);
  CHECK(value_of(c5, "chi_dt(G-0-1)") == 4);
  CHECK(value_of(c5, "chi_dt(G/0-1)") == 2);
  CHECK(c5.lower == Rational(3, 2));
  CHECK(c5.upper == Rational(9, 2));
  CHECK(c5.lower.str() == "3/2");
  CHECK(c5.holds);

  for (int v = 0; v < 10; ++v) {
    const BoundReport c10 = check_removal_contraction(cycle_graph(10), Operand::of_vertex(v), ev);
    CHECK(c10.theorem == TheoremId::VertexRemovalContraction);
    CHECK(c10.holds);
  }
  const BoundReport bridge = check_removal_contraction(path_graph(4), Operand::of_edge({0, 1}), ev);
  CHECK(*bridge.skipped == SkipReason::Bridge);
  CHECK_THROWS_AS(check_removal_contraction(path_graph(4), Operand::none(), ev), InvalidParameter);
}

TEST_CASE("total domination sandwich") {
  Evaluator ev;
  const BoundReport k5 = check_total_domination(complete_graph(5), ev);
  CHECK(k5.lower == Rational(2));
  CHECK(k5.middle == Rational(5));
  CHECK(k5.upper == Rational(7));

  const BoundReport c4 = check_total_domination(cycle_graph(4), ev);
  CHECK(c4.middle == Rational(2));
  CHECK(c4.tight_low);

  const BoundReport p9 = check_total_domination(path_graph(9), ev);
  CHECK(value_of(p9, "gamma_t(G)") == 5);
  CHECK(value_of(p9, "chi(G)") == 2);
  CHECK(p9.middle == Rational(6));
  CHECK(p9.holds);

  CHECK(*check_total_domination(Graph(2), ev).skipped == SkipReason::IsolatedVertex);
}

TEST_CASE("check dispatch") {
  Evaluator ev;
  CHECK_THROWS_AS(check_theorem(TheoremId::EdgeRemoval, cycle_graph(4), Operand::of_vertex(0), ev),
                  InvalidParameter);
  CHECK(operands_for(TheoremId::EdgeRemoval, cycle_graph(5)).size() == 5);
  CHECK(operands_for(TheoremId::Odot, cycle_graph(5)).size() == 5);
  CHECK(operands_for(TheoremId::TotalDomination, cycle_graph(5)).size() == 1);
}

TEST_CASE("skips always name a failed hypothesis") {
  Evaluator ev;
  std::size_t skips = 0;
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(n)); ++mask) {
      const Graph g = graph_from_mask(n, mask);
      for (TheoremId id : all_theorems())
        for (const Operand &op : operands_for(id, g)) {
          const BoundReport r = check_theorem(id, g, op, ev);
          if (r.skipped) {
            ++skips;
            CHECK(reason_is_genuine(r));
          } else {
            CHECK(r.holds);
          }
        }
    }
  CHECK(skips > 0);
}

TEST_CASE("exhaustive verification") {
  SUBCASE("n <= 4, every theorem") {
    VerifyOptions opts;
    opts.n_max = 4;
    const VerifySummary s = verify_exhaustive(opts);
    CHECK(s.ok());
    CHECK(s.graphs == 38 + 1 + 4 + 1);
    for (const auto &t : s.theorems)
      CHECK(t.violation_count() == 0);
  }
  SUBCASE("n <= 6, edge removal and the sandwich") {
    VerifyOptions opts;
    opts.n_max = 6;
    opts.theorems = {TheoremId::EdgeRemoval, TheoremId::TotalDomination};
    const VerifySummary s = verify_exhaustive(opts);
    CHECK(s.ok());
    CHECK(s.graphs == 27476);
    // No edge deletion up to order 6 raises chi_dt by two.
    CHECK(s.find(TheoremId::EdgeRemoval).tight_high == 0);
    CHECK(s.find(TheoremId::EdgeRemoval).tight_low > 0);
    CHECK(s.find(TheoremId::TotalDomination).violation_count() == 0);
    CHECK(s.find(TheoremId::TotalDomination).tight_low == 477);
  }
  SUBCASE("isomorphism classes") {
    VerifyOptions opts;
    opts.n_max = 5;
    opts.dedup = true;
    const VerifySummary s = verify_exhaustive(opts);
    CHECK(s.ok());
    CHECK(s.graphs == 1 + 1 + 2 + 6 + 21);
  }
  SUBCASE("order guard") {
    VerifyOptions opts;
    opts.n_max = kMaxVerifyOrder + 1;
    CHECK_THROWS_AS(verify_exhaustive(opts), ResourceGuard);
  }
}

TEST_CASE("verification is deterministic across worker counts") {
  VerifyOptions opts;
  opts.n_max = 5;
  opts.workers = 1;
  const std::string one = to_json(verify_exhaustive(opts)).dump();
  opts.workers = 3;
  const std::string three = to_json(verify_exhaustive(opts)).dump();
  CHECK(one == three);
  CHECK(to_json(verify_exhaustive(opts)).dump() == three);

  std::ostringstream text;
  write_text(text, verify_exhaustive(opts));
  CHECK(text.str().find("T3.1: checked=") != std::string::npos);
  CHECK(text.str().find("held=all, violations=0") != std::string::npos);
}

TEST_CASE("witness search") {
  const auto odot_high = search_witness(TheoremId::Odot, Endpoint::High, 6);
  REQUIRE(odot_high.has_value());
  CHECK(odot_high->tight_high);
  CHECK_FALSE(search_witness(TheoremId::EdgeRemoval, Endpoint::High, 6).has_value());

  const auto random_hit = search_witness_random(TheoremId::EdgeContraction, Endpoint::High, 7, 200, 5);
  REQUIRE(random_hit.has_value());
  CHECK(random_hit->tight_high);
  const auto again = search_witness_random(TheoremId::EdgeContraction, Endpoint::High, 7, 200, 5);
  CHECK(again->graph == random_hit->graph);
}

TEST_CASE("gap tables") {
  const auto gadget = gadget_gap_table(2, 30, 5);
  REQUIRE(gadget.size() == 29);
  CHECK(gadget[9 - 2].gap == 2);
  CHECK(gadget[9 - 2].chi_dt_gadget == 8);
  CHECK(gadget[9 - 2].chi_dt_minus_apex == 10);
  CHECK(gadget.back().gap == 9);
  for (const auto &row : gadget) {
    if (row.n <= 5) {
      REQUIRE(row.solver_gadget.has_value());
      CHECK(*row.solver_gadget == row.chi_dt_gadget);
      CHECK(*row.solver_minus_apex == row.chi_dt_minus_apex);
    } else {
      CHECK_FALSE(row.solver_gadget.has_value());
    }
  }

  const auto ratio = odot_ratio_table(3, 8, 8);
  CHECK(ratio.back().ratio == Rational(4));
  for (const auto &row : ratio) {
    CHECK(row.ratio == Rational(row.n, 2));
    CHECK(*row.solver_complete == row.n);
    CHECK(*row.solver_star == 2);
  }

  std::ostringstream csv;
  write_csv(csv, odot_ratio_table(3, 3, 0));
  CHECK(csv.str() == "n,chi_dt_complete,chi_dt_odot,ratio,solver_complete,solver_odot\n3,3,2,3/2,,\n");
}

TEST_CASE("report json") {
  Evaluator ev;
  const auto j = to_json(check_edge_removal(complete_graph(3), {0, 1}, ev));
  CHECK(j["theorem"] == "T2.2");
  CHECK(j["operand"] == "e=0-1");
  CHECK(j["holds"] == true);
  CHECK(j["tight_low"] == true);
  CHECK(j["values"]["chi_dt(G)"] == 3);

  VerifyOptions opts;
  opts.n_max = 3;
  opts.theorems = {TheoremId::EdgeContraction};
  const auto summary = to_json(verify_exhaustive(opts));
  const auto &t = summary["theorems"][0];
  for (const char *key : {"theorem", "n_max", "checked", "held", "skipped", "tight_low", "tight_high",
                          "witnesses"})
    CHECK(t.contains(key));
}
