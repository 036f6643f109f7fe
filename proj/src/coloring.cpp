#include "tdc/coloring.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "tdc/error.hpp"
#include "tdc/structure.hpp"

namespace tdc {

Coloring Coloring::from_colors(std::vector<int> colors) {
  const int k = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
  return {std::move(colors), k};
}

VertexSet Coloring::color_class(int c) const {
  VertexSet s = 0;
  for (int v = 0; v < order(); ++v)
    if (colors[v] == c)
      s |= singleton(v);
  return s;
}

bool Coloring::is_surjective() const {
  std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);
  for (int c : colors)
    if (c >= 1 && c <= k)
      used[c] = true;
  return std::all_of(used.begin() + 1, used.end(), [](bool u) { return u; });
}

namespace {

void check_domain(const Graph &g, const Coloring &c) {
  if (c.order() != g.order())
    throw DomainMismatch("coloring covers " + std::to_string(c.order()) +
                         " vertices, graph has " + std::to_string(g.order()));
  for (int v = 0; v < c.order(); ++v)
    if (c.colors[v] < 1 || c.colors[v] > c.k)
      throw DomainMismatch("vertex " + std::to_string(v) + " has color " +
                           std::to_string(c.colors[v]) + " outside 1.." + std::to_string(c.k));
}

} // namespace

bool is_proper(const Graph &g, const Coloring &c) {
  check_domain(g, c);
  for (const Edge &e : g.edges())
    if (c.colors[e.u] == c.colors[e.w])
      return false;
  return true;
}

bool totally_dominates(const Graph &g, int v, VertexSet cls) {
  return cls != 0 && (cls & ~g.neighbors(v)) == 0;
}

std::optional<TDCertificate> is_td_coloring(const Graph &g, const Coloring &c) {
  if (has_isolated_vertex(g))
    throw IsolatedVertex("TD-coloring is undefined for graphs with an isolated vertex");
  if (!is_proper(g, c))
    return std::nullopt;

  std::vector<VertexSet> classes(static_cast<std::size_t>(c.k) + 1, 0);
  for (int v = 0; v < c.order(); ++v)
    classes[c.colors[v]] |= singleton(v);

  TDCertificate cert{c, std::vector<int>(static_cast<std::size_t>(c.order()), 0)};
  for (int v = 0; v < g.order(); ++v) {
    for (int cls = 1; cls <= c.k; ++cls) {
      if (totally_dominates(g, v, classes[cls])) {
        cert.dominated_class[v] = cls;
        break;
      }
    }
    if (cert.dominated_class[v] == 0)
      return std::nullopt;
  }
  return cert;
}

std::optional<std::string> certificate_error(const Graph &g, const TDCertificate &cert) {
  const Coloring &c = cert.coloring;
  const int n = g.order();
  if (c.order() != n)
    return "certificate colors " + std::to_string(c.order()) + " vertices, graph has " +
           std::to_string(n);
  if (static_cast<int>(cert.dominated_class.size()) != n)
    return "certificate lists " + std::to_string(cert.dominated_class.size()) +
           " dominated classes, graph has " + std::to_string(n) + " vertices";
  for (int v = 0; v < n; ++v)
    if (c.colors[v] < 1 || c.colors[v] > c.k)
      return "vertex " + std::to_string(v) + " has color " + std::to_string(c.colors[v]) +
             " outside 1.." + std::to_string(c.k);
  if (!c.is_surjective())
    return "coloring does not use all " + std::to_string(c.k) + " classes";
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w)
      if (g.adjacent(u, w) && c.colors[u] == c.colors[w])
        return "edge " + std::to_string(u) + "-" + std::to_string(w) + " is monochromatic";
  for (int v = 0; v < n; ++v) {
    const int claimed = cert.dominated_class[v];
    if (claimed < 1 || claimed > c.k)
      return "vertex " + std::to_string(v) + " dominates no class (claimed class " +
             std::to_string(claimed) + " does not exist)";
    for (int u = 0; u < n; ++u)
      if (c.colors[u] == claimed && !g.adjacent(v, u))
        return "vertex " + std::to_string(v) + " dominates no class (claimed class " +
               std::to_string(claimed) + " contains non-neighbor " + std::to_string(u) + ")";
  }
  return std::nullopt;
}

void write_certificate(std::ostream &out, const TDCertificate &cert) {
  out << "k=" << cert.coloring.k << '\n';
  for (int v = 0; v < cert.coloring.order(); ++v)
    out << v << ' ' << cert.coloring.colors[v] << ' ' << cert.dominated_class[v] << '\n';
}

std::string to_text(const TDCertificate &cert) {
  std::ostringstream ss;
  write_certificate(ss, cert);
  return ss.str();
}

TDCertificate read_certificate(std::istream &in) {
  std::string line;
  int k = -1;
  std::map<int, std::pair<int, int>> rows;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    if (k < 0) {
      std::istringstream ss(line);
      std::string head;
      ss >> head;
      if (head.rfind("k=", 0) != 0)
        throw ParseError("certificate must start with 'k=<value>'");
      try {
        std::size_t used = 0;
        k = std::stoi(head.substr(2), &used);
        if (used != head.size() - 2 || k < 0)
          throw ParseError("bad class count '" + head + "'");
      } catch (const std::logic_error &) {
        throw ParseError("bad class count '" + head + "'");
      }
      continue;
    }
    std::istringstream ss(line);
    int v = 0;
    int color = 0;
    int dominated = 0;
    std::string extra;
    if (!(ss >> v >> color >> dominated) || (ss >> extra))
      throw ParseError("certificate line " + std::to_string(line_no) +
                       ": expected 'v color dominated_class'");
    if (v < 0 || !rows.emplace(v, std::make_pair(color, dominated)).second)
      throw ParseError("certificate line " + std::to_string(line_no) + ": bad or repeated vertex " +
                       std::to_string(v));
  }
  if (k < 0)
    throw ParseError("empty certificate");
  TDCertificate cert;
  cert.coloring.k = k;
  int expect = 0;
  for (const auto &[v, row] : rows) {
    if (v != expect++)
      throw ParseError("certificate is missing vertex " + std::to_string(expect - 1));
    cert.coloring.colors.push_back(row.first);
    cert.dominated_class.push_back(row.second);
  }
  return cert;
}

TDCertificate parse_certificate(const std::string &text) {
  std::istringstream ss(text);
  return read_certificate(ss);
}

} // namespace tdc
