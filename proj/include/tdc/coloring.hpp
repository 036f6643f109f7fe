#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tdc/graph.hpp"

namespace tdc {

/// Vertex coloring with classes 1..k; colors[v] is the class of vertex v.
struct Coloring {
  std::vector<int> colors;
  int k = 0;

  /// k is taken as the largest color present.
  static Coloring from_colors(std::vector<int> colors);

  int order() const { return static_cast<int>(colors.size()); }

  /// Members of class c.
  VertexSet color_class(int c) const;

  /// Every color in 1..k is used at least once.
  bool is_surjective() const;

  friend bool operator==(const Coloring &, const Coloring &) = default;
};

/// A coloring together with, for each vertex, a class that vertex totally dominates.
struct TDCertificate {
  Coloring coloring;
  std::vector<int> dominated_class;

  int classes() const { return coloring.k; }

  friend bool operator==(const TDCertificate &, const TDCertificate &) = default;
};

/// No edge is monochromatic. Throws DomainMismatch when the coloring does not
/// cover exactly V(g) or uses a color outside 1..k.
bool is_proper(const Graph &g, const Coloring &c);

/// True iff v is adjacent to every member of `cls` and `cls` is non-empty.
bool totally_dominates(const Graph &g, int v, VertexSet cls);

/// The certificate for c if it is a TD-coloring: proper, and every vertex is
/// adjacent to all members of some non-empty class. Each vertex is assigned
/// the smallest qualifying class id.
///
/// Throws IsolatedVertex if g has an isolated vertex, DomainMismatch as is_proper.
std::optional<TDCertificate> is_td_coloring(const Graph &g, const Coloring &c);

/// Independent re-check of a certificate against g. Returns the first reason
/// it fails, or nullopt when it is valid. Checks domain, surjectivity onto
/// 1..k, properness, and that each vertex dominates its claimed class.
std::optional<std::string> certificate_error(const Graph &g, const TDCertificate &cert);

/// Text form: "k=<value>" then one "v color dominated_class" line per vertex.
void write_certificate(std::ostream &out, const TDCertificate &cert);
std::string to_text(const TDCertificate &cert);

/// Parses the text form; throws ParseError on malformed input. Vertex lines
/// may appear in any order but must cover 0..n-1 exactly once.
TDCertificate read_certificate(std::istream &in);
TDCertificate parse_certificate(const std::string &text);

} // namespace tdc
