#include <doctest.h>

#include <random>
#include <sstream>
#include <vector>

#include "tdc/coloring.hpp"
#include "tdc/enumerate.hpp"
#include "tdc/error.hpp"
#include "tdc/families.hpp"
#include "tdc/operations.hpp"
#include "tdc/oracle.hpp"
#include "tdc/solver.hpp"

using namespace tdc;

namespace {

Coloring colors(std::vector<int> c) { return Coloring::from_colors(std::move(c)); }

bool is_total_dominating(const Graph &g, const DominatingSet &s) {
  VertexSet covered = 0;
  for (int v : s)
    covered |= g.neighbors(v);
  return covered == g.vertices();
}

} // namespace

TEST_CASE("proper colorings") {
  CHECK(is_proper(cycle_graph(4), colors({1, 2, 1, 2})));
  CHECK_FALSE(is_proper(complete_graph(3), colors({1, 1, 2})));
  CHECK(is_proper(path_graph(4), colors({1, 2, 3, 1})));
  CHECK_THROWS_AS(is_proper(path_graph(4), colors({1, 2, 1})), DomainMismatch);
  CHECK_THROWS_AS(is_proper(path_graph(2), Coloring{{1, 3}, 2}), DomainMismatch);
  CHECK_FALSE(colors({1, 3, 1}).is_surjective());
}

TEST_CASE("TD-coloring predicate") {
  const auto c4 = is_td_coloring(cycle_graph(4), colors({1, 2, 1, 2}));
  REQUIRE(c4.has_value());
  CHECK(c4->dominated_class == std::vector<int>{2, 1, 2, 1});

  const auto p4 = is_td_coloring(path_graph(4), colors({1, 2, 3, 1}));
  REQUIRE(p4.has_value());
  CHECK(p4->dominated_class == std::vector<int>{2, 3, 2, 3});

  CHECK_FALSE(is_td_coloring(path_graph(4), colors({1, 2, 1, 2})).has_value());
  CHECK_FALSE(is_td_coloring(complete_graph(3), colors({1, 1, 2})).has_value());
  CHECK_THROWS_AS(is_td_coloring(Graph(1), colors({1})), IsolatedVertex);
  CHECK(totally_dominates(path_graph(3), 1, singleton(0) | singleton(2)));
  CHECK_FALSE(totally_dominates(path_graph(3), 1, 0));
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(complete_graph(5)).value == 5);
  CHECK(chromatic_number(cycle_graph(5)).value == 3);
  CHECK(chromatic_number(complete_bipartite_graph(2, 4)).value == 2);
  CHECK(chromatic_number(Graph(3)).value == 1);
  CHECK_THROWS_AS(chromatic_number(Graph(0)), InvalidParameter);
  const auto r = chromatic_number(cycle_graph(7));
  CHECK(is_proper(cycle_graph(7), r.certificate));
  CHECK(r.certificate.k == 3);
}

TEST_CASE("total domination number") {
  CHECK(total_domination_number(complete_graph(3)).value == 2);
  const auto p4 = total_domination_number(path_graph(4));
  CHECK(p4.value == 2);
  CHECK(p4.certificate == DominatingSet{1, 2});
  CHECK(total_domination_number(cycle_graph(6)).value == 4);
  CHECK_THROWS_AS(total_domination_number(Graph(2)), IsolatedVertex);
  for (int n = 2; n <= 12; ++n) {
    const auto r = total_domination_number(path_graph(n));
    CHECK(is_total_dominating(path_graph(n), r.certificate));
    CHECK(static_cast<int>(r.certificate.size()) == r.value);
  }
}

TEST_CASE("TD-chromatic number: known values") {
  CHECK(td_chromatic_number(path_graph(9)).value == 6);
  CHECK(td_chromatic_number(complete_bipartite_graph(2, 4)).value == 2);
  CHECK(td_chromatic_number(complete_graph(5)).value == 5);
  CHECK(td_chromatic_number(build_family({FamilyKind::CoronaPathK1, {3}})).value == 4);
  for (int leaves = 2; leaves <= 8; ++leaves)
    CHECK(td_chromatic_number(star_graph(leaves)).value == 2);
  CHECK(td_chromatic_number(complete_graph(3)).value == 3);
  CHECK(td_chromatic_number(path_graph(3)).value == 2);
  CHECK(td_chromatic_number(cycle_graph(4)).value == 2);

  // Classes are global: two disjoint edges need four singleton classes.
  const Graph two_k2 = disjoint_union(path_graph(2), path_graph(2));
  CHECK(td_chromatic_number(two_k2).value == 4);
  CHECK(td_chromatic_oracle(two_k2) == 4);
}

TEST_CASE("TD-chromatic number of C10 is 7") {
  // A hand-built 7-class TD-coloring, checked independently of the solver.
  const Graph c10 = cycle_graph(10);
  const auto manual = is_td_coloring(c10, colors({1, 2, 1, 3, 4, 3, 5, 6, 7, 5}));
  REQUIRE(manual.has_value());
  CHECK(manual->classes() == 7);
  CHECK_FALSE(certificate_error(c10, *manual).has_value());

  const auto r = td_chromatic_number(c10);
  CHECK(r.value == 7);
  CHECK_FALSE(find_td_coloring(c10, 6).has_value());
}

TEST_CASE("solver guards") {
  CHECK_THROWS_AS(td_chromatic_number(Graph(1)), IsolatedVertex);
  CHECK_THROWS_AS(td_chromatic_number(Graph(3)), IsolatedVertex);
  CHECK_THROWS_AS(td_chromatic_number(path_graph(21)), ResourceGuard);
  SolverOptions wide;
  wide.max_order = 24;
  CHECK(td_chromatic_number(path_graph(21), wide).value > 0);
  CHECK_THROWS_AS(td_chromatic_oracle(path_graph(10)), ResourceGuard);
  CHECK_THROWS_AS(td_chromatic_oracle(Graph(2)), IsolatedVertex);
}

TEST_CASE("oracle values") {
  CHECK(td_chromatic_oracle(complete_graph(3)) == 3);
  CHECK(td_chromatic_oracle(path_graph(3)) == 2);
  CHECK(td_chromatic_oracle(cycle_graph(4)) == 2);
  CHECK(td_chromatic_oracle(path_graph(2)) == 2);
}

TEST_CASE("solver agrees with the oracle on every connected graph up to order 6") {
  std::size_t compared = 0;
  for (int n = 2; n <= 6; ++n)
    for (const Graph &g : connected_graphs(n)) {
      const auto r = td_chromatic_number(g);
      REQUIRE(r.value == td_chromatic_oracle(g));
      ++compared;
    }
  CHECK(compared == 27475);
}

TEST_CASE("solver properties over the small universe") {
  for (int n = 2; n <= 5; ++n)
    for (const Graph &g : connected_graphs(n)) {
      const auto td = td_chromatic_number(g);
      const int chi = chromatic_number(g).value;
      const int gamma = total_domination_number(g).value;

      // Sandwich.
      CHECK(std::max(chi, gamma) <= td.value);
      CHECK(td.value <= gamma + chi);

      // Certificate soundness and class count.
      CHECK_FALSE(certificate_error(g, td.certificate).has_value());
      CHECK(td.certificate.classes() == td.value);
      CHECK(is_td_coloring(g, td.certificate.coloring).has_value());

      // No TD-coloring with one class fewer.
      CHECK_FALSE(find_td_coloring(g, td.value - 1).has_value());

      // TD-coloring implies proper.
      CHECK(is_proper(g, td.certificate.coloring));
    }
}

TEST_CASE("random graphs above the exhaustive range") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_connected_graph(8 + trial % 2, 0.35, rng);
    const auto r = td_chromatic_number(g);
    CHECK(r.value == td_chromatic_oracle(g));
    CHECK_FALSE(certificate_error(g, r.certificate).has_value());
  }
}

TEST_CASE("degree order") {
  CHECK(degree_order(star_graph(3)) == std::vector<int>{0, 1, 2, 3});
  CHECK(degree_order(path_graph(4)) == std::vector<int>{1, 2, 0, 3});
}

TEST_CASE("certificate text") {
  const Graph p4 = path_graph(4);
  const auto cert = *is_td_coloring(p4, colors({1, 2, 3, 1}));
  const std::string text = to_text(cert);
  CHECK(text == "k=3\n0 1 2\n1 2 3\n2 3 2\n3 1 3\n");
  CHECK(parse_certificate(text) == cert);
  CHECK(parse_certificate("k=3\n3 1 3\n1 2 3\n0 1 2\n2 3 2\n") == cert);

  CHECK_THROWS_AS(parse_certificate("3\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("k=3\n0 1 2\n0 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("k=3\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("k=3\n0 1 2\n2 3 2\n"), ParseError);
}

TEST_CASE("certificate checker reasons") {
  const Graph k3 = complete_graph(3);
  const TDCertificate good = td_chromatic_number(k3).certificate;
  CHECK_FALSE(certificate_error(k3, good).has_value());

  TDCertificate wrong_class = good;
  wrong_class.dominated_class[2] = wrong_class.coloring.colors[2];
  const auto why = certificate_error(k3, wrong_class);
  REQUIRE(why.has_value());
  CHECK(why->find("vertex 2 dominates no class") == 0);

  TDCertificate mono = good;
  mono.coloring.colors[1] = mono.coloring.colors[0];
  REQUIRE(certificate_error(k3, mono).has_value());

  TDCertificate short_cert = good;
  short_cert.coloring.colors.pop_back();
  short_cert.dominated_class.pop_back();
  CHECK(certificate_error(k3, short_cert).has_value());

  const Graph p4 = path_graph(4);
  TDCertificate unused = *is_td_coloring(p4, colors({1, 2, 3, 1}));
  unused.coloring.k = 4;
  const auto gap = certificate_error(p4, unused);
  REQUIRE(gap.has_value());
  CHECK(gap->find("does not use all 4 classes") != std::string::npos);
}
