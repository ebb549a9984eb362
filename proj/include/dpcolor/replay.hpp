#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dpcolor/dp_cover.hpp"
#include "dpcolor/error.hpp"
#include "dpcolor/plane_graph.hpp"
#include "dpcolor/reducibility.hpp"
#include "dpcolor/solver.hpp"

namespace dpcolor {

/// A plane graph whose vertices carry the labels used in the proofs.
struct LabeledHost {
  PlaneGraph graph;
  std::vector<std::string> names;

  VertexId id(const std::string& label) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == label) return static_cast<VertexId>(i);
    }
    throw Error(ErrorCode::kUnknownName, "host has no vertex " + label);
  }

  const std::string& label(VertexId v) const { return names.at(static_cast<std::size_t>(v)); }

  static LabeledHost from_points(const std::vector<std::pair<std::string, std::pair<double, double>>>& points,
                                 const std::vector<std::pair<std::string, std::string>>& edges) {
    LabeledHost h;
    std::map<VertexId, std::pair<double, double>> pts;
    for (const auto& [name, xy] : points) {
      pts[static_cast<VertexId>(h.names.size())] = xy;
      h.names.push_back(name);
    }
    std::vector<Edge> es;
    for (const auto& [a, b] : edges) es.emplace_back(h.id(a), h.id(b));
    h.graph = PlaneGraph::from_points(pts, es);
    return h;
  }
};

enum class BoundKind { kAtLeast, kExactly };

struct ResidualBound {
  std::string vertex;
  BoundKind kind = BoundKind::kAtLeast;
  int value = 0;

  bool holds(std::size_t size) const {
    return kind == BoundKind::kExactly ? static_cast<int>(size) == value : static_cast<int>(size) >= value;
  }
};

/// One completion move: a proper color, or the color of an earlier vertex.
struct CompletionStep {
  std::string vertex;
  std::optional<std::string> copy_from;
};

/// The identification argument of a proof, with the host it runs in.
struct ReplayProof {
  std::string name;
  LabeledHost host;
  std::vector<std::pair<std::string, std::string>> straighten;
  std::string root;
  std::vector<std::string> removed;
  /// (kept, merged): the merged vertex disappears into the kept one.
  std::pair<std::string, std::string> identify;
  /// The identification must not create cycles of length 3..this.
  int no_new_cycles_up_to = 5;
  std::vector<ResidualBound> bounds;
  std::vector<CompletionStep> completion;
};

struct ReplayOptions {
  int k = 3;
  /// Random matching assignments in addition to the all-identity one.
  std::uint64_t samples = 200;
  std::uint64_t seed = 20180101;
};

struct ReplayReport {
  std::string name;
  bool success = true;
  std::string failed_step;
  std::string failure;
  std::uint64_t assignments = 0;
  std::map<std::string, std::size_t> residual_min;
  std::map<std::string, std::size_t> residual_max;
  /// cycle length -> (count in G - S, count after identification)
  std::map<int, std::pair<std::size_t, std::size_t>> cycle_counts;
  std::optional<int> triangle_distance_after;
  std::size_t quotient_vertices = 0;
  std::size_t quotient_edges = 0;
};

namespace detail {

/// Matchings of the identified graph, inherited from the edges they came from.
inline MatchingAssignment quotient_matchings(const Graph& original, const MatchingAssignment& m, const Graph& quotient,
                                             VertexId kept, VertexId merged) {
  MatchingAssignment out;
  for (const Edge& e : quotient.edges()) {
    if (!e.has(kept)) {
      out.set(e.u, e.v, m.pairs(e));
      continue;
    }
    const VertexId other = e.other(kept);
    const VertexId source = original.has_edge(kept, other) ? kept : merged;
    out.set(kept, other, m.oriented(source, other));
  }
  return out;
}

}  // namespace detail

inline ReplayReport replay_proof(const ReplayProof& proof, const ReplayOptions& opts = {}) {
  ReplayReport report;
  report.name = proof.name;
  auto fail = [&](const std::string& step, const std::string& why) {
    report.success = false;
    report.failed_step = step;
    report.failure = why;
    return report;
  };
  const LabeledHost& host = proof.host;
  const Graph& g = host.graph.graph();
  const int k = opts.k;

  std::vector<Edge> straight;
  std::set<VertexId> removed;
  VertexId kept = 0;
  VertexId merged = 0;
  VertexId root = 0;
  try {
    for (const auto& [a, b] : proof.straighten) straight.emplace_back(host.id(a), host.id(b));
    for (const auto& s : proof.removed) removed.insert(host.id(s));
    kept = host.id(proof.identify.first);
    merged = host.id(proof.identify.second);
    root = host.id(proof.root);
  } catch (const Error& e) {
    return fail("setup", e.what());
  }

  // structural surgery, independent of the matchings
  PlaneGraph rest;
  PlaneGraph quotient;
  try {
    rest = remove_vertices(host.graph, removed);
  } catch (const Error& e) {
    return fail("remove", e.what());
  }
  try {
    quotient = identify(rest, kept, merged);
  } catch (const Error& e) {
    return fail("identify", e.what());
  }
  report.quotient_vertices = quotient.graph().num_vertices();
  report.quotient_edges = quotient.graph().num_edges();
  for (int len = 3; len <= proof.no_new_cycles_up_to; ++len) {
    const std::size_t before = cycles_of_length(rest, len).size();
    const std::size_t after = cycles_of_length(quotient, len).size();
    report.cycle_counts[len] = {before, after};
    if (after != before) {
      return fail("no-new-cycles", "identification changes the number of " + std::to_string(len) + "-cycles");
    }
  }
  report.triangle_distance_after = triangle_distance(quotient);

  const ListAssignment lists = ListAssignment::uniform(g.vertices(), k);
  const auto perms = detail::all_permutations(k);
  const std::vector<Edge> edges = g.edges();
  for (std::uint64_t sample = 0; sample <= opts.samples; ++sample) {
    std::vector<std::vector<Color>> chosen(edges.size(), perms[0]);
    if (sample > 0) {
      std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                        static_cast<std::uint32_t>(sample), static_cast<std::uint32_t>(sample >> 32)};
      std::mt19937_64 rng(seq);
      std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
      for (auto& p : chosen) p = perms[pick(rng)];
    }
    const MatchingAssignment original = permutation_matchings(edges, chosen);
    ++report.assignments;

    StraightenResult s;
    try {
      s = straighten(g, lists, original, straight, {root});
    } catch (const Error& e) {
      return fail("straighten", e.what());
    }
    const CoverGraph cov = build_cover(g, s.lists, s.matchings);

    const Graph& qg = quotient.graph();
    if (s.lists.at(kept) != s.lists.at(merged)) return fail("identify", "identified vertices have different lists");
    ListAssignment qlists;
    for (VertexId v : qg.vertices()) qlists.set(v, s.lists.at(v));
    const CoverGraph qcov = build_cover(qg, qlists, detail::quotient_matchings(g, s.matchings, qg, kept, merged));
    SolveResult qsol = solve(qcov);
    if (!qsol.sat()) return fail("solve-quotient", "the identified graph has no coloring");

    PartialColoring phi = qsol.witness;
    phi[merged] = phi.at(kept);
    ColoringCheck pulled = check_coloring(cov, phi, false);
    if (!pulled) return fail("pull-back", pulled.reason);

    const ListAssignment residual = residual_lists(cov, phi);
    for (const auto& b : proof.bounds) {
      const std::size_t size = residual.size_of(host.id(b.vertex));
      auto [lo, inserted] = report.residual_min.try_emplace(b.vertex, size);
      if (!inserted) lo->second = std::min(lo->second, size);
      auto [hi, inserted2] = report.residual_max.try_emplace(b.vertex, size);
      if (!inserted2) hi->second = std::max(hi->second, size);
      if (!b.holds(size)) {
        return fail("residual-bounds", "residual list of " + b.vertex + " has size " + std::to_string(size));
      }
    }

    PartialColoring full = phi;
    for (const CompletionStep& step : proof.completion) {
      const VertexId v = host.id(step.vertex);
      std::optional<Color> c;
      if (step.copy_from) {
        const Color want = full.at(host.id(*step.copy_from));
        auto node = cov.node_of(v, want);
        if (node && residual.contains(v, want) && !detail::color_blocked(cov, full, *node)) c = want;
      } else {
        c = detail::first_free(cov, full, v);
      }
      if (!c) return fail("complete", "no color for " + step.vertex);
      full[v] = *c;
    }
    if (!is_dp_coloring(cov, full)) return fail("verify", "completed coloring is invalid on the renamed cover");
    const CoverGraph original_cov = build_cover(g, lists, original);
    if (!is_dp_coloring(original_cov, s.to_old(full))) {
      return fail("verify", "completed coloring is invalid on the original cover");
    }
  }
  return report;
}

namespace detail {

inline std::pair<double, double> at_angle(double radius, double degrees) {
  const double r = degrees * std::numbers::pi / 180.0;
  return {radius * std::cos(r), radius * std::sin(r)};
}

// 6-face v1..v6 with the (3,3,3)-face v1 v2 v12 outside it; v is the third
// neighbor of v12. G - S is a path, so identifying v4 with v closes a 6-cycle.
inline ReplayProof replay_lemma_2_4() {
  ReplayProof p;
  p.name = "lemma-2.4";
  p.host = LabeledHost::from_points(
      {{"v1", {-1, 1}},  {"v2", {1, 1}},   {"v3", {2, 0}},   {"v4", {1, -1}},   {"v5", {-1, -1}},
       {"v6", {-2, 0}},  {"v12", {0, 2}},  {"v", {0, 3}},    {"a3", {3, 0}},    {"a6", {-3, 0}},
       {"a5", {-1, -2}}, {"p1", {3, 3}},   {"r1", {-3, 3}},  {"s1", {-3, -2}}},
      {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v5"}, {"v5", "v6"}, {"v6", "v1"}, {"v1", "v12"},
       {"v2", "v12"}, {"v12", "v"}, {"v3", "a3"}, {"v6", "a6"}, {"v5", "a5"}, {"v", "p1"}, {"p1", "a3"},
       {"v", "r1"}, {"r1", "a6"}, {"a6", "s1"}, {"s1", "a5"}});
  p.straighten = {{"v1", "v2"}, {"v", "v12"}, {"v12", "v2"}, {"v2", "v3"}, {"v3", "v4"}};
  p.root = "v1";
  p.removed = {"v12", "v1", "v2", "v3", "v6"};
  p.identify = {"v4", "v"};
  p.no_new_cycles_up_to = 5;
  p.bounds = {{"v1", BoundKind::kExactly, 3},
              {"v2", BoundKind::kExactly, 3},
              {"v12", BoundKind::kAtLeast, 2},
              {"v3", BoundKind::kAtLeast, 1},
              {"v6", BoundKind::kAtLeast, 1}};
  p.completion = {{"v3", std::nullopt}, {"v12", "v3"}, {"v6", std::nullopt}, {"v1", std::nullopt}, {"v2", std::nullopt}};
  return p;
}

// Path x u1 u2 y v1 v2 z over the (3,3,3)-face x'y'z'; y'' sits above y.
// The pendants of x, u1, u2 meet at a hub under y''; a 6-path joins y'' to z.
inline ReplayProof replay_lemma_2_5() {
  ReplayProof p;
  p.name = "lemma-2.5";
  p.host = LabeledHost::from_points(
      {{"x", {-3, 0}},   {"u1", {-2, 0}},  {"u2", {-1, 0}},  {"y", {0, 0}},     {"v1", {1, 0}},
       {"v2", {2, 0}},   {"z", {3, 0}},    {"x'", {-1, -2}}, {"y'", {0, -1}},   {"z'", {1, -2}},
       {"y''", {0, 1}},  {"ax", {-3, 1}},  {"a1", {-2, 1}},  {"a2", {-1, 1}},   {"h", {-2, 2}},
       {"b1", {1, 1}},   {"b2", {2, 1}},   {"bz", {4, 0}},   {"q1", {0, 3}},    {"q2", {2, 3}},
       {"q3", {4, 3}},   {"q4", {5, 1.5}}},
      {{"x", "u1"}, {"u1", "u2"}, {"u2", "y"}, {"y", "v1"}, {"v1", "v2"}, {"v2", "z"}, {"x'", "y'"},
       {"y'", "z'"}, {"z'", "x'"}, {"x", "x'"}, {"y", "y'"}, {"z", "z'"}, {"y", "y''"}, {"x", "ax"},
       {"u1", "a1"}, {"u2", "a2"}, {"h", "ax"}, {"h", "a1"}, {"h", "a2"}, {"h", "y''"}, {"v1", "b1"},
       {"v2", "b2"}, {"z", "bz"}, {"y''", "q1"}, {"q1", "q2"}, {"q2", "q3"}, {"q3", "q4"}, {"q4", "bz"}});
  p.straighten = {{"y''", "y"}, {"y", "y'"}, {"y'", "z'"}, {"z'", "z"}};
  p.root = "y''";
  p.removed = {"x", "u1", "u2", "y", "y'", "x'", "z'"};
  p.identify = {"z", "y''"};
  p.no_new_cycles_up_to = 5;
  p.bounds = {{"z'", BoundKind::kAtLeast, 2}, {"x", BoundKind::kAtLeast, 2},  {"u2", BoundKind::kAtLeast, 2},
              {"u1", BoundKind::kAtLeast, 2}, {"y'", BoundKind::kExactly, 3}, {"x'", BoundKind::kExactly, 3},
              {"y", BoundKind::kAtLeast, 1}};
  p.completion = {{"y", std::nullopt},  {"z'", "y"},         {"u2", std::nullopt}, {"u1", std::nullopt},
                  {"x", std::nullopt},  {"x'", std::nullopt}, {"y'", std::nullopt}};
  return p;
}

// 7-face v1..v7 with outward (3,3,3)-faces on v1v2 and v4v5; v is the third
// neighbor of v45. A 9-path from v to v7 runs around the outside.
inline ReplayProof replay_lemma_3_3c() {
  ReplayProof p;
  p.name = "lemma-3.3c";
  std::vector<std::pair<std::string, std::pair<double, double>>> pts;
  auto angle_of = [](int i) { return 90.0 - (i - 1) * 360.0 / 7.0; };
  for (int i = 1; i <= 7; ++i) pts.push_back({"v" + std::to_string(i), at_angle(1.0, angle_of(i))});
  const double mid12 = (angle_of(1) + angle_of(2)) / 2;
  const double mid45 = (angle_of(4) + angle_of(5)) / 2;
  const double a6 = angle_of(6);
  const double a7 = angle_of(7);
  pts.push_back({"v12", at_angle(1.6, mid12)});
  pts.push_back({"v45", at_angle(1.6, mid45)});
  pts.push_back({"v", at_angle(3.0, mid45)});
  pts.push_back({"a12", at_angle(3.0, mid12)});
  pts.push_back({"a3", at_angle(2.0, angle_of(3))});
  pts.push_back({"a6", at_angle(3.5, a6)});
  pts.push_back({"a7", at_angle(3.5, a7)});
  for (int i = 1; i <= 3; ++i) {
    pts.push_back({"p" + std::to_string(i), at_angle(3.5, mid45 + (a6 - mid45) * i / 4.0)});
    pts.push_back({"q" + std::to_string(i), at_angle(3.5, a6 + (a7 - a6) * i / 4.0)});
  }
  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 1; i <= 7; ++i) es.push_back({"v" + std::to_string(i), "v" + std::to_string(i % 7 + 1)});
  es.insert(es.end(), {{"v1", "v12"}, {"v2", "v12"}, {"v4", "v45"}, {"v5", "v45"}, {"v45", "v"}, {"v12", "a12"},
                       {"v3", "a3"}, {"v6", "a6"}, {"v7", "a7"}, {"v", "p1"}, {"p1", "p2"}, {"p2", "p3"},
                       {"p3", "a6"}, {"a6", "q1"}, {"q1", "q2"}, {"q2", "q3"}, {"q3", "a7"}});
  p.host = LabeledHost::from_points(pts, es);
  p.straighten = {{"v7", "v6"}, {"v6", "v5"}, {"v5", "v4"}, {"v5", "v45"}, {"v45", "v"}};
  p.root = "v7";
  p.removed = {"v6", "v5", "v4", "v45"};
  p.identify = {"v7", "v"};
  p.no_new_cycles_up_to = 6;
  p.bounds = {{"v4", BoundKind::kAtLeast, 2},
              {"v45", BoundKind::kAtLeast, 2},
              {"v5", BoundKind::kExactly, 3},
              {"v6", BoundKind::kAtLeast, 1}};
  p.completion = {{"v6", std::nullopt}, {"v45", "v6"}, {"v4", std::nullopt}, {"v5", std::nullopt}};
  return p;
}

}  // namespace detail

inline std::vector<std::string> replay_names() { return {"lemma-2.4", "lemma-2.5", "lemma-3.3c"}; }

inline ReplayProof builtin_replay(const std::string& name) {
  if (name == "lemma-2.4") return detail::replay_lemma_2_4();
  if (name == "lemma-2.5") return detail::replay_lemma_2_5();
  if (name == "lemma-3.3c") return detail::replay_lemma_3_3c();
  throw Error(ErrorCode::kUnknownName, "no identification replay named " + name);
}

inline ReplayReport replay_identification_proof(const std::string& name, const ReplayOptions& opts = {}) {
  return replay_proof(builtin_replay(name), opts);
}

}  // namespace dpcolor
