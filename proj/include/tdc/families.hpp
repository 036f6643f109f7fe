#pragma once

#include <string>
#include <vector>

#include "tdc/graph.hpp"

namespace tdc {

enum class FamilyKind {
  Path,
  Cycle,
  Complete,
  CompleteBipartite,
  Star,
  CoronaPathK1,
  CoronaCycleK1,
  ApexCorona,
};

/// A named graph family plus its size parameters.
///
/// Star's parameter is the number of leaves. CompleteBipartite takes two
/// part sizes; every other family takes one.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Path;
  std::vector<int> params;

  friend bool operator==(const FamilySpec &, const FamilySpec &) = default;
};

/// Canonical labeled member of a family.
///
/// Labelings:
///  - Path(n): edges {i, i+1}.  Cycle(n): Path(n) plus {n-1, 0}.
///  - CompleteBipartite(m, n): parts {0..m-1} and {m..m+n-1}.
///  - Star(n): center 0, leaves 1..n.
///  - Corona families: as produced by corona(base, K1), i.e. base vertices
///    0..n-1 and the pendant of base vertex i at n+i.
///  - ApexCorona(n): CoronaPathK1(n) plus an apex 2n adjacent to the
///    n pendants. Removing the apex leaves CoronaPathK1(n) with identical labels.
///
/// Throws InvalidParameter when the parameters are below the family minimum.
Graph build_family(const FamilySpec &spec);

/// Vertex id of the apex in ApexCorona(n).
int gadget_apex(int n);

/// Parses "kind:params", e.g. "path:9", "cbip:2,4", "gadget:5".
FamilySpec parse_family(const std::string &text);
std::string to_string(const FamilySpec &spec);
std::string family_name(FamilyKind kind);

// Shorthands used throughout tests and tools.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int m, int n);
Graph star_graph(int leaves);

} // namespace tdc
