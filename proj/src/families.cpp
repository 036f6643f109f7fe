#include "tdc/families.hpp"

#include <charconv>
#include <map>
#include <string>
#include <vector>

#include "tdc/error.hpp"
#include "tdc/operations.hpp"

namespace tdc {
namespace {

const std::map<std::string, FamilyKind> &kind_names() {
  static const std::map<std::string, FamilyKind> names{
      {"path", FamilyKind::Path},
      {"cycle", FamilyKind::Cycle},
      {"complete", FamilyKind::Complete},
      {"cbip", FamilyKind::CompleteBipartite},
      {"star", FamilyKind::Star},
      {"corona-path", FamilyKind::CoronaPathK1},
      {"corona-cycle", FamilyKind::CoronaCycleK1},
      {"gadget", FamilyKind::ApexCorona},
  };
  return names;
}

void require_at_least(int value, int minimum, const char *what) {
  if (value < minimum)
    throw InvalidParameter(std::string(what) + " requires size >= " + std::to_string(minimum) +
                           ", got " + std::to_string(value));
}

int single_param(const FamilySpec &spec) {
  if (spec.params.size() != 1)
    throw InvalidParameter(family_name(spec.kind) + " takes exactly one parameter");
  return spec.params[0];
}

} // namespace

std::string family_name(FamilyKind kind) {
  for (const auto &[name, k] : kind_names())
    if (k == kind)
      return name;
  return "unknown";
}

Graph path_graph(int n) {
  require_at_least(n, 1, "path");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i)
    edges.push_back({i, i + 1});
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  require_at_least(n, 3, "cycle");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    edges.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  require_at_least(n, 1, "complete");
  std::vector<VertexSet> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    rows[v] = full_set(n) & ~singleton(v);
  return Graph::from_rows(std::move(rows));
}

Graph complete_bipartite_graph(int m, int n) {
  require_at_least(m, 1, "cbip");
  require_at_least(n, 1, "cbip");
  std::vector<Edge> edges;
  for (int a = 0; a < m; ++a)
    for (int b = m; b < m + n; ++b)
      edges.push_back({a, b});
  return Graph::from_edges(m + n, edges);
}

Graph star_graph(int leaves) {
  require_at_least(leaves, 1, "star");
  return complete_bipartite_graph(1, leaves);
}

int gadget_apex(int n) { return 2 * n; }

Graph build_family(const FamilySpec &spec) {
  switch (spec.kind) {
  case FamilyKind::Path:
    return path_graph(single_param(spec));
  case FamilyKind::Cycle:
    return cycle_graph(single_param(spec));
  case FamilyKind::Complete:
    return complete_graph(single_param(spec));
  case FamilyKind::CompleteBipartite:
    if (spec.params.size() != 2)
      throw InvalidParameter("cbip takes exactly two parameters");
    return complete_bipartite_graph(spec.params[0], spec.params[1]);
  case FamilyKind::Star:
    return star_graph(single_param(spec));
  case FamilyKind::CoronaPathK1: {
    const int n = single_param(spec);
    require_at_least(n, 2, "corona-path");
    return corona(path_graph(n), Graph(1));
  }
  case FamilyKind::CoronaCycleK1: {
    const int n = single_param(spec);
    require_at_least(n, 3, "corona-cycle");
    return corona(cycle_graph(n), Graph(1));
  }
  case FamilyKind::ApexCorona: {
    const int n = single_param(spec);
    require_at_least(n, 2, "gadget");
    const Graph base = corona(path_graph(n), Graph(1));
    std::vector<VertexSet> rows(base.rows().begin(), base.rows().end());
    const int apex = gadget_apex(n);
    const VertexSet leaves = full_set(2 * n) & ~full_set(n);
    rows.push_back(leaves);
    for_each_vertex(leaves, [&](int leaf) { rows[leaf] |= singleton(apex); });
    return Graph::from_rows(std::move(rows));
  }
  }
  throw InvalidParameter("unknown family");
}

FamilySpec parse_family(const std::string &text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ParseError("family spec '" + text + "' must look like kind:params");
  const std::string name = text.substr(0, colon);
  const auto it = kind_names().find(name);
  if (it == kind_names().end())
    throw ParseError("unknown family '" + name + "'");

  FamilySpec spec{it->second, {}};
  std::string rest = text.substr(colon + 1);
  std::size_t start = 0;
  while (start <= rest.size()) {
    const auto comma = rest.find(',', start);
    const std::string field =
        rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty())
      throw ParseError("bad family parameter '" + field + "' in '" + text + "'");
    spec.params.push_back(value);
    if (comma == std::string::npos)
      break;
    start = comma + 1;
  }
  return spec;
}

std::string to_string(const FamilySpec &spec) {
  std::string out = family_name(spec.kind) + ":";
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i > 0)
      out += ',';
    out += std::to_string(spec.params[i]);
  }
  return out;
}

} // namespace tdc
