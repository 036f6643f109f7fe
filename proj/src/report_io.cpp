#include "tdc/report_io.hpp"

#include <ostream>

#include "tdc/coloring.hpp"
#include "tdc/graph_io.hpp"

namespace tdc {

nlohmann::json to_json(const BoundReport &r) {
  nlohmann::json j;
  j["theorem"] = theorem_name(r.theorem);
  j["graph"] = to_edge_list(r.graph);
  j["operand"] = r.operand.str();
  if (r.skipped) {
    j["skipped"] = skip_reason_name(*r.skipped);
    return j;
  }
  nlohmann::json values = nlohmann::json::object();
  for (const auto &[name, value] : r.values)
    values[name] = value;
  j["values"] = values;
  j["lower"] = r.lower.str();
  j["middle"] = r.middle.str();
  j["upper"] = r.upper.str();
  j["holds"] = r.holds;
  j["tight_low"] = r.tight_low;
  j["tight_high"] = r.tight_high;
  if (!r.certificates.empty()) {
    nlohmann::json certs = nlohmann::json::array();
    for (const auto &c : r.certificates)
      certs.push_back(to_text(c));
    j["certificates"] = certs;
  }
  return j;
}

nlohmann::json to_json(const TheoremSummary &s, int n_max) {
  nlohmann::json j;
  j["theorem"] = theorem_name(s.theorem);
  j["n_max"] = n_max;
  j["checked"] = s.checked;
  j["held"] = s.held;
  j["skipped"] = s.skipped;
  j["tight_low"] = s.tight_low;
  j["tight_high"] = s.tight_high;

  nlohmann::json witnesses = nlohmann::json::array();
  auto add_witness = [&](const std::optional<BoundReport> &r, const char *endpoint) {
    if (!r)
      return;
    nlohmann::json w = to_json(*r);
    w["endpoint"] = endpoint;
    witnesses.push_back(std::move(w));
  };
  add_witness(s.first_tight_low, "low");
  add_witness(s.first_tight_high, "high");
  j["witnesses"] = witnesses;

  nlohmann::json reasons = nlohmann::json::object();
  for (const auto &[why, count] : s.skip_reasons)
    reasons[skip_reason_name(why)] = count;
  j["skip_reasons"] = reasons;
  j["outside_hypothesis"] = {{"checked", s.outside_checked}, {"held", s.outside_held}};

  nlohmann::json violations = nlohmann::json::array();
  for (const auto &v : s.violations)
    violations.push_back(to_json(v));
  j["violations"] = violations;
  return j;
}

nlohmann::json to_json(const VerifySummary &summary) {
  nlohmann::json j;
  j["n_max"] = summary.n_max;
  j["dedup"] = summary.dedup;
  j["graphs"] = summary.graphs;
  j["ok"] = summary.ok();
  nlohmann::json theorems = nlohmann::json::array();
  for (const auto &t : summary.theorems)
    theorems.push_back(to_json(t, summary.n_max));
  j["theorems"] = theorems;
  return j;
}

void write_text(std::ostream &out, const VerifySummary &summary) {
  out << "graphs=" << summary.graphs << " n_max=" << summary.n_max
      << (summary.dedup ? " (isomorphism classes)" : " (labeled)") << '\n';
  for (const auto &t : summary.theorems) {
    out << theorem_name(t.theorem) << ": checked=" << t.checked << ", held=";
    if (t.held == t.checked)
      out << "all";
    else
      out << t.held;
    out << ", violations=" << t.violation_count() << ", skipped=" << t.skipped
        << ", tight_low=" << t.tight_low << ", tight_high=" << t.tight_high << '\n';
  }
}

void write_csv(std::ostream &out, const std::vector<GadgetGapRow> &rows) {
  out << "n,chi_dt_gadget,chi_dt_gadget_minus_apex,gap,solver_gadget,solver_minus_apex\n";
  for (const auto &r : rows) {
    out << r.n << ',' << r.chi_dt_gadget << ',' << r.chi_dt_minus_apex << ',' << r.gap << ',';
    if (r.solver_gadget)
      out << *r.solver_gadget;
    out << ',';
    if (r.solver_minus_apex)
      out << *r.solver_minus_apex;
    out << '\n';
  }
}

void write_csv(std::ostream &out, const std::vector<OdotRatioRow> &rows) {
  out << "n,chi_dt_complete,chi_dt_odot,ratio,solver_complete,solver_odot\n";
  for (const auto &r : rows) {
    out << r.n << ',' << r.chi_dt_complete << ',' << r.chi_dt_star << ',' << r.ratio.str() << ',';
    if (r.solver_complete)
      out << *r.solver_complete;
    out << ',';
    if (r.solver_star)
      out << *r.solver_star;
    out << '\n';
  }
}

} // namespace tdc
