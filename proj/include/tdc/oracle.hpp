#pragma once

#include "tdc/graph.hpp"

namespace tdc {

constexpr int kOracleMaxOrder = 9;

/// Brute-force total dominator chromatic number.
///
/// For k = 2..n enumerates every map V -> {1..k} (abandoning a branch only
/// when it colors an edge monochromatically), keeps the surjective ones and
/// asks is_td_coloring. Shares no search code with td_chromatic_number.
/// Throws ResourceGuard above kOracleMaxOrder and IsolatedVertex as usual.
int td_chromatic_oracle(const Graph &g);

} // namespace tdc
