#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dpcolor/dpcolor.hpp"

namespace {

using dpcolor::Error;
using dpcolor::ErrorCode;
using nlohmann::json;
namespace report = dpcolor::report;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct Flags {
  std::string out;
  int k = 3;
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 20180101;
  unsigned threads = 0;
  bool symmetry = false;
  bool strict = false;
  bool trace = false;
  std::string rules = "section-2";
  std::string graph;
  std::string matching;
  std::string coloring;
  std::string target;
};

/// Report under construction; inputs are recorded with their digests.
class Run {
 public:
  explicit Run(std::string command) : command_(std::move(command)) {}

  std::string read_input(const std::string& role, const std::string& path) {
    std::string text = dpcolor::io::read_file(path);
    inputs_.push_back({{"role", role}, {"path", path}, {"fnv1a64", report::fnv1a64(text)}});
    return text;
  }

  void note_builtin(const std::string& name) { inputs_.push_back({{"role", "builtin"}, {"name", name}}); }

  json finish(const json& parameters, const std::string& verdict, int exit_code, const json& result) const {
    return json{{"schema", report::kSchema}, {"command", command_},       {"inputs", inputs_},
                {"parameters", parameters},  {"verdict", verdict},        {"exit_code", exit_code},
                {"result", result}};
  }

  json failure(const Error& e) const {
    return json{{"schema", report::kSchema}, {"command", command_}, {"inputs", inputs_},
                {"exit_code", kUsage},       {"error", report::error_json(e)}};
  }

 private:
  std::string command_;
  json inputs_ = json::array();
};

dpcolor::PlaneGraph load_graph(Run& run, const std::string& path) {
  std::string text = run.read_input("graph", path);
  return dpcolor::io::graph_from_json(dpcolor::io::parse_json(text, path), path);
}

dpcolor::io::MatchingFile load_matching(Run& run, const std::string& path) {
  std::string text = run.read_input("matching", path);
  return dpcolor::io::matching_from_json(dpcolor::io::parse_json(text, path), path);
}

dpcolor::PartialColoring load_coloring(Run& run, const std::string& path) {
  std::string text = run.read_input("coloring", path);
  return dpcolor::io::coloring_from_json(dpcolor::io::parse_json(text, path), path);
}

dpcolor::CycleRef outer_cycle(const dpcolor::PlaneGraph& g) {
  if (!g.outer()) throw Error(ErrorCode::kNotOuterFace, "graph has no designated outer cycle");
  return dpcolor::CycleRef{*g.outer()};
}

void check_k(int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
}

dpcolor::CertifyOptions certify_options(const Flags& f) {
  dpcolor::CertifyOptions o;
  o.samples = f.sample;
  o.seed = f.seed;
  o.fix_first_edge = f.symmetry;
  o.threads = f.threads;
  return o;
}

json sampling_parameters(const Flags& f) {
  json p{{"k", f.k}, {"seed", f.seed}, {"symmetry", f.symmetry}};
  p["sample"] = f.sample ? json(*f.sample) : json(nullptr);
  return p;
}

json cmd_structure(Run& run, const Flags& f, int& code) {
  const dpcolor::PlaneGraph g = load_graph(run, f.graph);
  const dpcolor::StructureReport s = dpcolor::analyze_structure(g);
  code = kOk;
  return run.finish(json::object(), "analyzed", code, report::structure_json(s));
}

json cmd_solve(Run& run, const Flags& f, int& code) {
  const dpcolor::PlaneGraph g = load_graph(run, f.graph);
  const auto mf = load_matching(run, f.matching);
  dpcolor::PartialColoring pinned;
  if (!f.coloring.empty()) pinned = load_coloring(run, f.coloring);
  const dpcolor::CoverGraph cov = dpcolor::build_cover(g.graph(), mf.lists, mf.matchings);
  if (!pinned.empty()) {
    auto check = dpcolor::check_coloring(cov, pinned, false);
    if (!check) throw Error(ErrorCode::kInvalidColoring, "pinned coloring is invalid: " + check.reason);
  }
  const dpcolor::SolveResult r = dpcolor::solve(cov, pinned);
  code = r.sat() ? kOk : kFailure;
  return run.finish(json{{"pinned", pinned.size()}}, r.sat() ? "sat" : "unsat", code, report::solve_json(r));
}

json cmd_certify(Run& run, const Flags& f, int& code) {
  check_k(f.k);
  const dpcolor::PlaneGraph g = load_graph(run, f.graph);
  const dpcolor::CertifyResult r = dpcolor::certify_dp_k(g.graph(), f.k, certify_options(f));
  code = r.colorable() ? kOk : kFailure;
  return run.finish(sampling_parameters(f), r.colorable() ? "colorable" : "counterexample", code,
                    report::certify_json(g.graph(), f.k, r));
}

json cmd_extend(Run& run, const Flags& f, int& code) {
  const dpcolor::PlaneGraph g = load_graph(run, f.graph);
  const dpcolor::CycleRef c0 = outer_cycle(g);
  if (f.matching.empty()) {
    if (!f.coloring.empty()) throw Error(ErrorCode::kInvalidArgument, "--precoloring needs --matching");
    check_k(f.k);
    const dpcolor::CertifyResult r = dpcolor::certify_extension(g.graph(), c0, f.k, certify_options(f));
    code = r.colorable() ? kOk : kFailure;
    return run.finish(sampling_parameters(f), r.colorable() ? "all_extend" : "counterexample", code,
                      report::certify_json(g.graph(), f.k, r));
  }
  const auto mf = load_matching(run, f.matching);
  const json parameters{{"cycle", c0.vertices}};
  if (!f.coloring.empty()) {
    const dpcolor::PartialColoring phi = load_coloring(run, f.coloring);
    const dpcolor::SolveResult r = dpcolor::extend(g.graph(), mf.lists, mf.matchings, c0, phi);
    code = r.sat() ? kOk : kFailure;
    return run.finish(parameters, r.sat() ? "extends" : "does_not_extend", code, report::solve_json(r));
  }
  const dpcolor::CoverGraph cov = dpcolor::build_cover(g.graph(), mf.lists, mf.matchings);
  std::size_t examined = 0;
  json result{{"precolorings", 0}};
  code = kOk;
  for (const dpcolor::PartialColoring& phi : dpcolor::cycle_colorings(cov, c0)) {
    ++examined;
    if (!dpcolor::solve(cov, phi).sat()) {
      code = kFailure;
      result["failing_precoloring"] = dpcolor::io::coloring_to_json(phi);
      break;
    }
  }
  result["precolorings"] = examined;
  return run.finish(parameters, code == kOk ? "all_extend" : "counterexample", code, result);
}

json cmd_reduce(Run& run, const Flags& f, int& code) {
  check_k(f.k);
  const auto replays = dpcolor::replay_names();
  if (std::find(replays.begin(), replays.end(), f.target) != replays.end()) {
    run.note_builtin(f.target);
    dpcolor::ReplayOptions o;
    o.k = f.k;
    o.samples = f.sample.value_or(o.samples);
    o.seed = f.seed;
    const dpcolor::ReplayReport r = dpcolor::replay_identification_proof(f.target, o);
    code = r.success ? kOk : kFailure;
    return run.finish(json{{"k", f.k}, {"samples", o.samples}, {"seed", f.seed}, {"mode", "identification"}},
                      r.success ? "replayed" : "replay_failed", code, report::replay_json(r));
  }
  dpcolor::Configuration cfg;
  const auto names = dpcolor::builtin_names();
  if (std::find(names.begin(), names.end(), f.target) != names.end()) {
    run.note_builtin(f.target);
    cfg = dpcolor::builtin_configuration(f.target);
  } else if (std::ifstream(f.target).good()) {
    std::string text = run.read_input("configuration", f.target);
    cfg = dpcolor::io::configuration_from_json(dpcolor::io::parse_json(text, f.target), f.target);
  } else {
    throw Error(ErrorCode::kUnknownName, "no configuration or file named " + f.target);
  }
  dpcolor::ReducibilityOptions o;
  o.k = f.k;
  o.samples = f.sample;
  o.seed = f.seed;
  o.threads = f.threads;
  const dpcolor::ReducibilityReport r = dpcolor::verify_configuration(cfg, o);
  const bool order_ok = !r.order_check || r.order_check->ok;
  const bool greedy_ok = !r.order_check || r.greedy_agrees();
  const bool ok = r.reducible && order_ok && greedy_ok;
  code = ok ? kOk : kFailure;
  json parameters = sampling_parameters(f);
  parameters.erase("symmetry");
  parameters["mode"] = "oracle";
  return run.finish(parameters, ok ? "reducible" : "not_reducible", code, report::reducibility_json(cfg, r));
}

json cmd_discharge(Run& run, const Flags& f, int& code) {
  const dpcolor::RuleSet rules = dpcolor::parse_rule_set(f.rules);
  const dpcolor::PlaneGraph g = load_graph(run, f.graph);
  if (f.strict) {
    const dpcolor::StructureReport s = dpcolor::analyze_structure(g);
    const bool small = rules == dpcolor::RuleSet::kSection2;
    const dpcolor::HypothesisVerdict& h = small ? s.no_4_5_cycles_dtri_ge_3 : s.no_4_5_6_cycles_dtri_ge_2;
    std::vector<std::string> failures = h.failures;
    if (!s.c0) {
      failures.push_back("no designated outer cycle");
    } else if (!(small ? *s.c0_admissible_small : *s.c0_admissible_large)) {
      failures.push_back("C0 has inadmissible length " + std::to_string(s.c0->size()) +
                         (s.c0_bad_nine.value_or(false) ? " (bad 9-cycle)" : ""));
    }
    if (!failures.empty()) {
      std::string msg = "graph violates the " + f.rules + " hypotheses: ";
      for (std::size_t i = 0; i < failures.size(); ++i) msg += (i ? "; " : "") + failures[i];
      throw Error(ErrorCode::kHypothesisViolated, msg);
    }
  }
  const dpcolor::DischargeResult r = dpcolor::discharge(g, rules);
  if (f.trace) {
    for (const dpcolor::Transfer& t : r.ledger.log()) std::cerr << report::transfer_json(r.ledger, t).dump() << '\n';
  }
  const bool clean = r.nonnegativity.negative.empty() && r.audit.bound_holds();
  code = clean ? kOk : kFailure;
  return run.finish(json{{"rules", f.rules}, {"strict", f.strict}}, clean ? "nonnegative" : "violations", code,
                    report::discharge_json(r));
}

int emit(const json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream os(out, std::ios::binary);
  if (!os) {
    std::cerr << "dpcolor: cannot write " << out << '\n';
    return kUsage;
  }
  os << text;
  return 0;
}

int usage_error(const std::string& command, const std::string& message) {
  json j{{"schema", report::kSchema},
         {"command", command},
         {"exit_code", kUsage},
         {"error", {{"code", "usage"}, {"message", message}}}};
  std::cout << j.dump(2) << '\n';
  std::cerr << "dpcolor: " << message << '\n';
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DP-coloring toolkit for planar graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--out", f.out, "Write the JSON report to FILE instead of stdout");

  auto sampling = [&f](CLI::App* sub) {
    sub->add_option("--sample", f.sample, "Test N random matching assignments instead of enumerating");
    sub->add_option("--seed", f.seed, "Seed for sampling")->capture_default_str();
    sub->add_option("--threads", f.threads, "Worker threads (0: all cores)");
  };

  CLI::App* structure = app.add_subcommand("structure", "Cycle spectrum, triangle distance, C0 and hypotheses");
  structure->add_option("graph", f.graph, "Plane graph JSON")->required();

  CLI::App* solve = app.add_subcommand("solve", "Find a DP-coloring of one cover");
  solve->add_option("graph", f.graph, "Plane graph JSON")->required();
  solve->add_option("matching", f.matching, "Lists and matchings JSON")->required();
  solve->add_option("--pin", f.coloring, "Partial coloring to extend");

  CLI::App* certify = app.add_subcommand("certify", "Decide DP-k-colorability by enumeration or sampling");
  certify->add_option("graph", f.graph, "Plane graph JSON")->required();
  certify->add_option("--k", f.k, "Number of colors")->capture_default_str();
  certify->add_flag("--symmetry", f.symmetry, "Fix the first edge's matching to the identity");
  sampling(certify);

  CLI::App* extend = app.add_subcommand("extend", "Extend precolorings of the outer cycle C0");
  extend->add_option("graph", f.graph, "Plane graph JSON with designated outer cycle")->required();
  extend->add_option("--k", f.k, "Number of colors when no matching file is given")->capture_default_str();
  extend->add_option("--matching", f.matching, "Lists and matchings JSON");
  extend->add_option("--precoloring", f.coloring, "Coloring of C0 (needs --matching)");
  extend->add_flag("--symmetry", f.symmetry, "Fix the first edge's matching to the identity");
  sampling(extend);

  CLI::App* reduce = app.add_subcommand("reduce", "Verify a reducible configuration or replay an identification");
  reduce->add_option("target", f.target, "Builtin name or configuration JSON")->required();
  reduce->add_option("--k", f.k, "Number of colors")->capture_default_str();
  sampling(reduce);

  CLI::App* discharge = app.add_subcommand("discharge", "Run a discharging rule set and audit the charges");
  discharge->add_option("graph", f.graph, "Plane graph JSON with designated outer cycle")->required();
  discharge->add_option("--rules", f.rules, "section-2 or section-3")->capture_default_str();
  discharge->add_flag("--strict", f.strict, "Refuse graphs violating the rule set's hypotheses");
  discharge->add_flag("--trace", f.trace, "Print every transfer to stderr in application order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return usage_error("", e.what());
  }

  CLI::App* sub = app.get_subcommands().front();
  Run run(sub->get_name());
  json out;
  int code = kUsage;
  try {
    if (sub == structure) out = cmd_structure(run, f, code);
    if (sub == solve) out = cmd_solve(run, f, code);
    if (sub == certify) out = cmd_certify(run, f, code);
    if (sub == extend) out = cmd_extend(run, f, code);
    if (sub == reduce) out = cmd_reduce(run, f, code);
    if (sub == discharge) out = cmd_discharge(run, f, code);
  } catch (const Error& e) {
    out = run.failure(e);
    code = kUsage;
    std::cerr << "dpcolor: " << to_string(e.code()) << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    const Error wrapped(ErrorCode::kInternal, e.what());
    out = run.failure(wrapped);
    code = kUsage;
    std::cerr << "dpcolor: internal_error: " << e.what() << '\n';
  }
  const int write_status = emit(out, f.out);
  return write_status ? write_status : code;
}
