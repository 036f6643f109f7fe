#pragma once

#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "tdc/harness.hpp"

namespace tdc {

/// {graph: edge-list text, operand, values, lower, middle, upper, holds, ...}
nlohmann::json to_json(const BoundReport &r);

/// Per-theorem objects follow the schema
/// {theorem, n_max, checked, held, skipped, tight_low, tight_high, witnesses: [...]}
/// plus skip reasons, observational counts and the counterexample list.
nlohmann::json to_json(const TheoremSummary &s, int n_max);
nlohmann::json to_json(const VerifySummary &summary);

/// One "T3.1: checked=..., held=all, violations=0, ..." line per theorem.
void write_text(std::ostream &out, const VerifySummary &summary);

void write_csv(std::ostream &out, const std::vector<GadgetGapRow> &rows);
void write_csv(std::ostream &out, const std::vector<OdotRatioRow> &rows);

} // namespace tdc
