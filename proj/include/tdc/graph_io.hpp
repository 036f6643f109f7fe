#pragma once

#include <iosfwd>
#include <string>

#include "tdc/graph.hpp"

namespace tdc {

// Edge-list text format:
//
//   n m
//   u w        (m lines, 0-based ids)
//
// Blank lines and anything after '#' are ignored. The writer emits edges in
// lexicographic order, one per line.

Graph read_edge_list(std::istream &in);
void write_edge_list(std::ostream &out, const Graph &g);
std::string to_edge_list(const Graph &g);
Graph parse_edge_list(const std::string &text);

/// DIMACS .col: "c" comments, one "p edge n m" line, "e u v" lines with 1-based ids.
Graph read_dimacs(std::istream &in);

/// Opens `path` and dispatches on content: a "p " problem line selects DIMACS.
Graph load_graph_file(const std::string &path);

} // namespace tdc
