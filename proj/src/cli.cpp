#include "tdc/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tdc/closed_forms.hpp"
#include "tdc/coloring.hpp"
#include "tdc/error.hpp"
#include "tdc/families.hpp"
#include "tdc/graph_io.hpp"
#include "tdc/harness.hpp"
#include "tdc/report_io.hpp"
#include "tdc/solver.hpp"
#include "tdc/structure.hpp"

namespace tdc::cli {
namespace {

struct GraphSource {
  std::string file;
  std::string family;

  void add_to(CLI::App &cmd) {
    auto *f = cmd.add_option("--file", file, "Edge-list or DIMACS .col graph file");
    auto *s = cmd.add_option("--family", family, "Family spec, e.g. path:9, cbip:2,4, gadget:5");
    f->excludes(s);
    s->excludes(f);
  }

  Graph load() const {
    if (!file.empty())
      return load_graph_file(file);
    if (!family.empty())
      return build_family(parse_family(family));
    throw ParseError("one of --file or --family is required");
  }
};

void print_solution(std::ostream &out, const Graph &g, const std::string &format,
                    const SolverOptions &opts, const std::string &cert_out) {
  const auto chi = chromatic_number(g, opts);
  const auto gamma = total_domination_number(g, opts);
  const auto td = td_chromatic_number(g, opts);
  if (!cert_out.empty()) {
    std::ofstream file(cert_out);
    if (!file)
      throw ParseError("cannot write '" + cert_out + "'");
    write_certificate(file, td.certificate);
  }
  if (format == "json") {
    nlohmann::json j;
    j["n"] = g.order();
    j["m"] = g.size();
    j["chi"] = chi.value;
    j["gamma_t"] = gamma.value;
    j["chi_dt"] = td.value;
    j["gamma_t_set"] = gamma.certificate;
    j["certificate"] = to_text(td.certificate);
    j["nodes_explored"] = td.nodes_explored;
    j["lower_bound_used"] = td.lower_bound_used;
    j["upper_bound_used"] = td.upper_bound_used;
    out << j.dump(2) << '\n';
    return;
  }
  out << "n=" << g.order() << " m=" << g.size() << '\n';
  out << "chi=" << chi.value << '\n';
  out << "gamma_t=" << gamma.value << '\n';
  out << "chi_dt=" << td.value << '\n';
  write_certificate(out, td.certificate);
}

int do_check(std::ostream &out, const Graph &g, const std::string &cert_path) {
  std::ifstream in(cert_path);
  if (!in)
    throw ParseError("cannot open '" + cert_path + "'");
  const TDCertificate cert = read_certificate(in);
  if (auto why = certificate_error(g, cert)) {
    out << "invalid: " << *why << '\n';
    return kViolation;
  }
  out << "valid: k=" << cert.classes() << '\n';
  return kOk;
}

std::vector<TheoremId> parse_theorems(const std::vector<std::string> &names) {
  if (names.empty())
    return all_theorems();
  std::vector<TheoremId> ids;
  for (const auto &name : names) {
    if (name == "all")
      return all_theorems();
    ids.push_back(parse_theorem(name));
  }
  return ids;
}

FamilyKind parse_table_family(const std::string &name) {
  const FamilySpec spec = parse_family(name + ":0");
  return spec.kind;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact total dominator chromatic number and graph-operation bound checks"};
  app.require_subcommand(1);
  int cap = SolverOptions{}.max_order;
  app.add_option("--cap", cap, "Solver order cap")->check(CLI::Range(1, Graph::kMaxOrder));

  std::string format = "text";
  auto formats = CLI::IsMember({"text", "json", "csv"});

  // solve
  auto *solve = app.add_subcommand("solve", "Compute chi, gamma_t and chi_dt with a certificate");
  GraphSource solve_src;
  solve_src.add_to(*solve);
  std::string cert_out;
  solve->add_option("--format", format, "text|json")->check(formats);
  solve->add_option("--cert-out", cert_out, "Also write the certificate to this file");

  // check
  auto *check = app.add_subcommand("check", "Validate a certificate against a graph");
  GraphSource check_src;
  check_src.add_to(*check);
  std::string cert_in;
  check->add_option("--cert", cert_in, "Certificate file")->required();

  // verify
  auto *verify = app.add_subcommand("verify", "Exhaustively check the bound theorems");
  std::vector<std::string> theorem_names;
  VerifyOptions vopts;
  verify->add_option("--theorem", theorem_names, "T2.2 T2.3 T3.1 T3.3 T3.5 C3.2 C3.4 Henning or all");
  verify->add_option("--nmax", vopts.n_max, "Largest order in the universe")
      ->check(CLI::Range(1, 100));
  verify->add_option("--workers", vopts.workers, "Worker threads (0: all cores)");
  verify->add_flag("--dedup", vopts.dedup, "One graph per isomorphism class");
  verify->add_option("--format", format, "text|json")->check(formats);

  // table
  auto *table = app.add_subcommand("table", "Closed-form chi_dt table as CSV");
  std::string table_family;
  int from = 0;
  int to = 0;
  table->add_option("--family", table_family, "path|cycle|corona-path|corona-cycle|gadget")
      ->required();
  table->add_option("--from", from)->required();
  table->add_option("--to", to)->required();

  // search
  auto *search = app.add_subcommand("search", "Hunt for a graph attaining a bound endpoint");
  std::string search_theorem;
  std::string endpoint = "high";
  int search_nmax = 6;
  int random_order = 0;
  int samples = 1000;
  std::uint64_t seed = 0;
  search->add_option("--theorem", search_theorem)->required();
  search->add_option("--endpoint", endpoint)->check(CLI::IsMember({"low", "high"}));
  auto *nmax_opt = search->add_option("--nmax", search_nmax, "Exhaustive universe order");
  auto *order_opt =
      search->add_option("--random-order", random_order, "Sample random graphs of this order");
  search->add_option("--samples", samples, "Random samples")->needs(order_opt);
  auto *seed_opt = search->add_option("--seed", seed, "Seed for random sampling");
  order_opt->needs(seed_opt);
  order_opt->excludes(nmax_opt);

  // gap
  auto *gap = app.add_subcommand("gap", "Gap-growth tables as CSV");
  std::string kind;
  int gap_from = 2;
  int gap_to = 30;
  int verify_up_to = 5;
  gap->add_option("--kind", kind, "T2.5|C3.6")->required()->check(CLI::IsMember({"T2.5", "C3.6"}));
  gap->add_option("--from", gap_from);
  gap->add_option("--to", gap_to);
  gap->add_option("--verify-upto", verify_up_to, "Confirm rows up to this n with the solver");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  SolverOptions solver;
  solver.max_order = cap;
  try {
    if (*solve) {
      print_solution(out, solve_src.load(), format, solver, cert_out);
      return kOk;
    }
    if (*check)
      return do_check(out, check_src.load(), cert_in);
    if (*verify) {
      vopts.theorems = parse_theorems(theorem_names);
      vopts.solver = solver;
      const VerifySummary summary = verify_exhaustive(vopts);
      if (format == "json")
        out << to_json(summary).dump(2) << '\n';
      else
        write_text(out, summary);
      return summary.ok() ? kOk : kViolation;
    }
    if (*table) {
      write_formula_table(out, parse_table_family(table_family), from, to);
      return kOk;
    }
    if (*search) {
      const TheoremId id = parse_theorem(search_theorem);
      const Endpoint end = endpoint == "low" ? Endpoint::Low : Endpoint::High;
      const auto witness = random_order > 0
                               ? search_witness_random(id, end, random_order, samples, seed, solver)
                               : search_witness(id, end, search_nmax, solver);
      nlohmann::json j;
      j["theorem"] = search_theorem;
      j["endpoint"] = endpoint;
      j["found"] = witness.has_value();
      if (witness)
        j["witness"] = to_json(*witness);
      out << j.dump(2) << '\n';
      return kOk;
    }
    if (*gap) {
      if (kind == "T2.5")
        write_csv(out, gadget_gap_table(gap_from, gap_to, verify_up_to));
      else
        write_csv(out, odot_ratio_table(gap_from, gap_to, verify_up_to));
      return kOk;
    }
  } catch (const ResourceGuard &e) {
    err << "resource guard: " << e.what() << '\n';
    return kResourceGuard;
  } catch (const ParseError &e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const InvalidParameter &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kViolation;
  }
  return kUsage;
}

} // namespace tdc::cli
