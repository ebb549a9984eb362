#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dpcolor/builtin.hpp"
#include "dpcolor/pattern_match.hpp"
#include "dpcolor/plane_graph.hpp"

namespace dpcolor {

struct HypothesisVerdict {
  bool satisfied = false;
  std::vector<std::string> failures;
  std::string note;

  std::string summary() const {
    if (satisfied) return note.empty() ? "satisfied" : "satisfied (" + note + ")";
    std::string s = "violated: ";
    for (std::size_t i = 0; i < failures.size(); ++i) s += (i ? "; " : "") + failures[i];
    return s;
  }
};

/// Forbidden cycle lengths plus a lower bound on the distance between triangles.
inline HypothesisVerdict check_hypothesis(const std::map<int, std::size_t>& cycle_counts, std::optional<int> dtri,
                                          const std::vector<int>& forbidden, int min_dtri) {
  HypothesisVerdict v;
  for (int len : forbidden) {
    auto it = cycle_counts.find(len);
    if (it != cycle_counts.end() && it->second > 0) v.failures.push_back("contains " + std::to_string(len) + "-cycles");
  }
  if (dtri && *dtri < min_dtri) {
    std::string why = "triangle distance " + std::to_string(*dtri) + " < " + std::to_string(min_dtri);
    if (*dtri == 0) why += " (intersecting triangles)";
    v.failures.push_back(why);
  }
  v.satisfied = v.failures.empty();
  if (v.satisfied && !dtri) v.note = "vacuously, no triangles";
  return v;
}

struct StructureReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  /// Number of cycles of each length 3..10.
  std::map<int, std::size_t> cycle_counts;
  std::optional<int> triangle_distance;
  std::optional<std::vector<VertexId>> c0;
  std::optional<bool> c0_chordless;
  /// Whether C0 is the outer cycle of a bad 9-cycle template, when |C0| = 9.
  std::optional<bool> c0_bad_nine;
  std::optional<PatternMatch> c0_bad_nine_match;
  /// Separating 3-, 6-, 7-, 8-cycles and separating good 9-cycles.
  std::vector<CycleRef> separating_small;
  /// Separating 7- to 10-cycles.
  std::vector<CycleRef> separating_large;
  HypothesisVerdict no_4_5_cycles_dtri_ge_3;
  HypothesisVerdict no_4_5_6_cycles_dtri_ge_2;
  /// C0 has an admissible length for the respective theorem.
  std::optional<bool> c0_admissible_small;
  std::optional<bool> c0_admissible_large;
};

inline StructureReport analyze_structure(const PlaneGraph& g) {
  StructureReport r;
  r.vertices = g.graph().num_vertices();
  r.edges = g.graph().num_edges();
  r.faces = trace_embedding(g).faces.size();
  for (int len = 3; len <= 10; ++len) r.cycle_counts[len] = cycles_of_length(g, len).size();
  r.triangle_distance = triangle_distance(g);
  const std::vector<Configuration> templates = bad9_templates();
  auto good_nine = [&](const CycleRef& c) { return !classify_9cycle(g, c, templates).bad(); };

  for (int len = 3; len <= 10; ++len) {
    for (const CycleRef& c : cycles_of_length(g, len)) {
      if (!is_separating(g, c)) continue;
      const bool small = len == 3 || len == 6 || len == 7 || len == 8 || (len == 9 && good_nine(c));
      if (small) r.separating_small.push_back(c);
      if (len >= 7) r.separating_large.push_back(c);
    }
  }
  if (g.outer()) {
    r.c0 = *g.outer();
    const CycleRef c{*g.outer()};
    r.c0_chordless = !has_chord(g, c);
    const std::size_t n = c.length();
    if (n == 9) {
      NineCycleVerdict v = classify_9cycle(g, c, templates);
      r.c0_bad_nine = v.bad();
      r.c0_bad_nine_match = v.match;
    }
    r.c0_admissible_small = n == 3 || n == 6 || n == 7 || n == 8 || (n == 9 && !*r.c0_bad_nine);
    r.c0_admissible_large = n >= 7 && n <= 10;
  }
  r.no_4_5_cycles_dtri_ge_3 = check_hypothesis(r.cycle_counts, r.triangle_distance, {4, 5}, 3);
  r.no_4_5_6_cycles_dtri_ge_2 = check_hypothesis(r.cycle_counts, r.triangle_distance, {4, 5, 6}, 2);
  return r;
}

}  // namespace dpcolor
