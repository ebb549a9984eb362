#pragma once

#include <cstdint>
#include <cstdio>
#include <string>

#include "json.hpp"

#include "dpcolor/discharging.hpp"
#include "dpcolor/io.hpp"
#include "dpcolor/reducibility.hpp"
#include "dpcolor/replay.hpp"
#include "dpcolor/solver.hpp"
#include "dpcolor/structure.hpp"

namespace dpcolor::report {

using nlohmann::json;

inline constexpr const char* kSchema = "dpcolor.report/1";

/// 64-bit FNV-1a, printed as 16 hex digits.
inline std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline json cycle_json(const CycleRef& c) { return c.vertices; }

inline json error_json(const Error& e) { return json{{"code", to_string(e.code())}, {"message", e.what()}}; }

inline json hypothesis_json(const HypothesisVerdict& v) {
  return json{{"satisfied", v.satisfied}, {"failures", v.failures}, {"summary", v.summary()}};
}

inline json structure_json(const StructureReport& r) {
  json counts = json::object();
  for (const auto& [len, n] : r.cycle_counts) counts[std::to_string(len)] = n;
  json small = json::array();
  for (const auto& c : r.separating_small) small.push_back(cycle_json(c));
  json large = json::array();
  for (const auto& c : r.separating_large) large.push_back(cycle_json(c));
  json j{{"vertices", r.vertices},
         {"edges", r.edges},
         {"faces", r.faces},
         {"cycle_counts", counts},
         {"triangle_distance", r.triangle_distance ? json(*r.triangle_distance) : json(nullptr)},
         {"separating_3_6_7_8_good9", small},
         {"separating_7_to_10", large},
         {"hypotheses",
          {{"no_4_5_cycles_dtri_ge_3", hypothesis_json(r.no_4_5_cycles_dtri_ge_3)},
           {"no_4_5_6_cycles_dtri_ge_2", hypothesis_json(r.no_4_5_6_cycles_dtri_ge_2)}}}};
  if (r.c0) {
    json c0{{"cycle", *r.c0}, {"length", r.c0->size()}, {"chordless", *r.c0_chordless}};
    if (r.c0_bad_nine) {
      c0["bad_nine_cycle"] = *r.c0_bad_nine;
      if (*r.c0_bad_nine) {
        c0["classification"] = "C0 is a bad 9-cycle";
        json pins = json::object();
        for (const auto& [p, h] : r.c0_bad_nine_match->mapping) pins[std::to_string(p)] = h;
        c0["template"] = r.c0_bad_nine_match->template_name;
        c0["template_mapping"] = pins;
      } else {
        c0["classification"] = "C0 is a good 9-cycle";
      }
    }
    c0["admissible_3_6_7_8_good9"] = *r.c0_admissible_small;
    c0["admissible_7_to_10"] = *r.c0_admissible_large;
    j["c0"] = c0;
  } else {
    j["c0"] = nullptr;
  }
  return j;
}

inline json solve_json(const SolveResult& r) {
  json j{{"status", r.sat() ? "sat" : "unsat"}};
  if (r.sat()) j["witness"] = io::coloring_to_json(r.witness);
  return j;
}

inline json certify_json(const Graph& g, int k, const CertifyResult& r) {
  json j{{"verdict", r.colorable() ? "colorable" : "counterexample"},
         {"k", k},
         {"examined", r.examined},
         {"sampled", r.sampled}};
  if (r.counterexample) {
    ListAssignment l = ListAssignment::uniform(g.vertices(), k);
    j["counterexample"] = io::matching_to_json(l, *r.counterexample);
  }
  if (r.precoloring) j["precoloring"] = io::coloring_to_json(*r.precoloring);
  return j;
}

/// Pattern vertices keep their labels; host pendants are named after the
/// vertex they hang from, e.g. "v3~12".
inline std::string host_label(const Configuration& cfg, const MaterializedConfiguration& mat, VertexId v) {
  if (v >= 0 && static_cast<std::size_t>(v) < cfg.size()) return cfg.label(v);
  auto it = mat.pendant_of.find(v);
  if (it == mat.pendant_of.end()) return std::to_string(v);
  return cfg.label(it->second) + "~" + std::to_string(v);
}

inline json reducibility_json(const Configuration& cfg, const ReducibilityReport& r) {
  const MaterializedConfiguration mat = materialize(cfg);
  auto label = [&](VertexId v) { return host_label(cfg, mat, v); };
  auto edge_labels = [&](const std::vector<Edge>& es) {
    json out = json::array();
    for (const Edge& e : es) out.push_back(label(e.u) + "-" + label(e.v));
    return out;
  };
  json j{{"configuration", r.name},
         {"k", r.k},
         {"reducible", r.reducible},
         {"matching_assignments", r.matching_assignments},
         {"instances", r.instances},
         {"unsat", r.unsat},
         {"greedy_runs", r.greedy_runs},
         {"greedy_failures", r.greedy_failures},
         {"greedy_agrees", r.greedy_agrees()},
         {"straightened", edge_labels(r.straightened)},
         {"enumerated", edge_labels(r.enumerated)}};
  if (r.order_check) {
    const OrderCheck& o = *r.order_check;
    json oc{{"ok", o.ok}, {"condition", o.condition}, {"message", o.message}};
    if (o.vertex) oc["vertex"] = label(*o.vertex);
    j["order_check"] = oc;
  } else {
    j["order_check"] = nullptr;
  }
  if (r.counterexample) {
    json m = json::object();
    for (const auto& [e, pairs] : r.counterexample->entries()) {
      json ps = json::array();
      for (const auto& [a, b] : pairs) ps.push_back({a, b});
      m[label(e.u) + "-" + label(e.v)] = ps;
    }
    j["counterexample"] = m;
  }
  std::string summary;
  if (r.order_check) {
    summary = r.order_check->ok ? "ordering valid; "
                                : "ordering invalid (condition " + std::to_string(r.order_check->condition) + "); ";
  }
  summary += r.reducible ? "oracle: reducible" : "oracle: not reducible";
  if (r.order_check && r.order_check->ok) summary += r.greedy_agrees() ? "; greedy/oracle agree" : "; greedy/oracle disagree";
  j["summary"] = summary;
  if (r.outside_coloring) {
    json oc = json::object();
    for (const auto& [v, c] : *r.outside_coloring) oc[label(v)] = c;
    j["outside_coloring"] = oc;
  }
  return j;
}

inline json replay_json(const ReplayReport& r) {
  json counts = json::object();
  for (const auto& [len, p] : r.cycle_counts) counts[std::to_string(len)] = {{"before", p.first}, {"after", p.second}};
  json j{{"proof", r.name},
         {"success", r.success},
         {"assignments", r.assignments},
         {"residual_min", r.residual_min},
         {"residual_max", r.residual_max},
         {"cycle_counts", counts},
         {"triangle_distance_after",
          r.triangle_distance_after ? json(*r.triangle_distance_after) : json(nullptr)},
         {"quotient_vertices", r.quotient_vertices},
         {"quotient_edges", r.quotient_edges}};
  if (!r.success) j["failure"] = {{"step", r.failed_step}, {"message", r.failure}};
  return j;
}

inline std::string element_name(const ChargeLedger& ledger, ElementRef e) {
  if (!e.is_face) return "v" + std::to_string(e.id);
  if (e == ledger.outer()) return "C0";
  return "f" + std::to_string(e.id);
}

inline json transfer_json(const ChargeLedger& ledger, const Transfer& t) {
  return json{{"from", element_name(ledger, t.from)},
              {"to", element_name(ledger, t.to)},
              {"amount2", t.amount2},
              {"amount", format_half(t.amount2)},
              {"rule", t.rule}};
}

inline json discharge_json(const DischargeResult& r) {
  const ChargeLedger& L = r.ledger;
  json elements = json::array();
  for (ElementRef e : L.elements()) {
    json item{{"element", element_name(L, e)},
              {"kind", e.is_face ? "face" : "vertex"},
              {"structure", describe_element(r.tags, e)},
              {"initial2", L.initial2(e)},
              {"final2", L.charge2(e)},
              {"final", format_half(L.charge2(e))}};
    if (e.is_face) item["vertices"] = r.tags.faces.at(static_cast<std::size_t>(e.id)).vertices;
    elements.push_back(item);
  }
  json log = json::array();
  for (const Transfer& t : L.log()) log.push_back(transfer_json(L, t));
  json paths = json::array();
  for (const FriendlyPathCheck& p : r.audit.friendly_paths) {
    paths.push_back({{"face", element_name(L, ElementRef::face(p.face))},
                     {"degree", p.degree},
                     {"path_vertices", p.path_vertices},
                     {"bound2", p.bound2},
                     {"given2", p.given2},
                     {"holds", p.holds()}});
  }
  const OuterFaceAudit& a = r.audit;
  json audit{{"d_c0", a.d_c0},           {"f3", a.f3},
             {"f_special", a.f_special}, {"e_c0", a.e_c0},
             {"e_prime", a.e_prime},     {"vertex_sum2", a.vertex_sum2},
             {"outflow2", a.outflow2},   {"x2", a.x2},
             {"mu_star2", a.mu_star2},   {"mu_star", format_half(a.mu_star2)},
             {"identity_holds", true},   {"friendly_paths", paths},
             {"bound_holds", a.bound_holds()}};
  json negative = json::array();
  for (const ChargeViolation& v : r.nonnegativity.negative) {
    negative.push_back({{"element", element_name(L, v.element)},
                        {"charge2", v.charge2},
                        {"charge", format_half(v.charge2)},
                        {"structure", v.structure}});
  }
  json notes = json::array();
  for (const RuleNote& n : r.notes) {
    notes.push_back({{"rule", n.rule}, {"element", element_name(L, n.element)}, {"message", n.message}});
  }
  return json{{"rules", to_string(r.rules)},
              {"total2", L.total2()},
              {"conserved", L.total2() == 0},
              {"elements", elements},
              {"transfers", log},
              {"audit", audit},
              {"nonnegativity",
               {{"negative", negative},
                {"c0_charge2", r.nonnegativity.c0_charge2},
                {"c0_positive", r.nonnegativity.c0_positive()},
                {"clean", r.nonnegativity.clean()}}},
              {"notes", notes}};
}

}  // namespace dpcolor::report
