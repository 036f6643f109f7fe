#include "tdc/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "tdc/error.hpp"

namespace tdc {
namespace {

std::string strip_comment(const std::string &line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool is_blank(const std::string &s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

/// Reads exactly `count` integers from a line; anything else is an error.
std::vector<long> read_ints(const std::string &line, std::size_t count, int line_no) {
  std::istringstream ss(line);
  std::vector<long> out;
  long x = 0;
  while (ss >> x)
    out.push_back(x);
  if (!ss.eof() || out.size() != count)
    throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(count) +
                     " integers, got '" + line + "'");
  return out;
}

Graph checked_graph(long n, const std::vector<Edge> &edges) {
  if (n < 0 || n > Graph::kMaxOrder)
    throw ParseError("vertex count " + std::to_string(n) + " out of range");
  try {
    return Graph::from_edges(static_cast<int>(n), edges);
  } catch (const Error &e) {
    throw ParseError(e.what());
  }
}

} // namespace

Graph read_edge_list(std::istream &in) {
  std::string line;
  int line_no = 0;
  long n = -1;
  long m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_comment(line);
    if (is_blank(line))
      continue;
    if (n < 0) {
      const auto header = read_ints(line, 2, line_no);
      n = header[0];
      m = header[1];
      if (m < 0)
        throw ParseError("negative edge count");
      continue;
    }
    const auto e = read_ints(line, 2, line_no);
    if (e[0] < 0 || e[1] < 0 || e[0] >= n || e[1] >= n)
      throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range");
    edges.push_back({static_cast<int>(e[0]), static_cast<int>(e[1])});
  }
  if (n < 0)
    throw ParseError("missing 'n m' header");
  if (static_cast<long>(edges.size()) != m)
    throw ParseError("header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  return checked_graph(n, edges);
}

void write_edge_list(std::ostream &out, const Graph &g) {
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const Edge &e : edges)
    out << e.u << ' ' << e.w << '\n';
}

std::string to_edge_list(const Graph &g) {
  std::ostringstream ss;
  write_edge_list(ss, g);
  return ss.str();
}

Graph parse_edge_list(const std::string &text) {
  std::istringstream ss(text);
  return read_edge_list(ss);
}

Graph read_dimacs(std::istream &in) {
  std::string line;
  int line_no = 0;
  long n = -1;
  long m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line))
      continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "c")
      continue;
    if (tag == "p") {
      std::string format;
      if (!(ss >> format >> n >> m) || (format != "edge" && format != "col"))
        throw ParseError("line " + std::to_string(line_no) + ": bad problem line");
      continue;
    }
    if (tag == "e") {
      if (n < 0)
        throw ParseError("edge before problem line");
      long u = 0;
      long w = 0;
      if (!(ss >> u >> w) || u < 1 || w < 1 || u > n || w > n)
        throw ParseError("line " + std::to_string(line_no) + ": bad edge line");
      edges.push_back({static_cast<int>(u - 1), static_cast<int>(w - 1)});
      continue;
    }
    throw ParseError("line " + std::to_string(line_no) + ": unknown record '" + tag + "'");
  }
  if (n < 0)
    throw ParseError("missing problem line");
  // DIMACS files often list each edge twice; m is informational only.
  (void)m;
  return checked_graph(n, edges);
}

Graph load_graph_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  std::istringstream probe(text);
  std::string line;
  while (std::getline(probe, line)) {
    if (is_blank(line))
      continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "c")
      continue;
    std::istringstream body(text);
    return tag == "p" ? read_dimacs(body) : read_edge_list(body);
  }
  throw ParseError("'" + path + "' is empty");
}

} // namespace tdc
