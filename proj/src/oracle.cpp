#include "tdc/oracle.hpp"

#include <string>
#include <vector>

#include "tdc/coloring.hpp"
#include "tdc/error.hpp"
#include "tdc/structure.hpp"

namespace tdc {
namespace {

bool exists_td_coloring(const Graph &g, int k, std::vector<int> &colors, int v) {
  const int n = g.order();
  if (v == n) {
    Coloring c{colors, k};
    return c.is_surjective() && is_td_coloring(g, c).has_value();
  }
  for (int color = 1; color <= k; ++color) {
    bool clash = false;
    for (int u = 0; u < v && !clash; ++u)
      clash = colors[u] == color && g.adjacent(u, v);
    if (clash)
      continue;
    colors[v] = color;
    if (exists_td_coloring(g, k, colors, v + 1))
      return true;
  }
  colors[v] = 0;
  return false;
}

} // namespace

int td_chromatic_oracle(const Graph &g) {
  if (g.order() > kOracleMaxOrder)
    throw ResourceGuard("oracle order " + std::to_string(g.order()) + " exceeds cap " +
                        std::to_string(kOracleMaxOrder));
  if (g.order() == 0 || has_isolated_vertex(g))
    throw IsolatedVertex("TD-coloring is undefined for graphs with an isolated vertex");
  std::vector<int> colors(static_cast<std::size_t>(g.order()), 0);
  for (int k = 2; k <= g.order(); ++k)
    if (exists_td_coloring(g, k, colors, 0))
      return k;
  throw Error("oracle found no TD-coloring");
}

} // namespace tdc
