#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dpcolor/configuration.hpp"
#include "dpcolor/error.hpp"
#include "dpcolor/plane_graph.hpp"

namespace dpcolor {

/// A template occurrence: template vertex -> host vertex.
struct PatternMatch {
  std::string template_name;
  std::map<VertexId, VertexId> mapping;
};

/// Finds an induced copy of `tmpl` whose pinned outer cycle maps onto `c` (any
/// of the 2|c| rotations and reflections) and whose other vertices lie inside c.
inline std::optional<PatternMatch> match_pinned_cycle(const PlaneGraph& g, const CycleRef& c, const Configuration& tmpl) {
  if (!tmpl.outer || tmpl.outer->size() != c.length()) return std::nullopt;
  validate_cycle(g.graph(), c.vertices);
  const Graph& host = g.graph();
  const Graph pattern = tmpl.pattern();
  const std::vector<VertexId>& outer = *tmpl.outer;
  const std::set<VertexId> outer_set(outer.begin(), outer.end());
  std::vector<VertexId> rest;
  for (VertexId v = 0; v < static_cast<VertexId>(tmpl.size()); ++v) {
    if (!outer_set.count(v)) rest.push_back(v);
  }
  const std::set<VertexId> candidates = cycle_sides(g, c).first;
  const std::size_t n = c.length();

  for (std::size_t shift = 0; shift < n; ++shift) {
    for (int dir : {1, -1}) {
      std::map<VertexId, VertexId> map;
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = dir == 1 ? (shift + i) % n : (shift + n - i) % n;
        map[outer[i]] = c.vertices[j];
      }
      auto consistent = [&](VertexId t, VertexId h) {
        for (const auto& [t2, h2] : map) {
          if (t2 == t) continue;
          if (pattern.has_edge(t, t2) != host.has_edge(h, h2)) return false;
        }
        return true;
      };
      bool ok = true;
      for (VertexId t : outer) ok = ok && consistent(t, map[t]);
      if (!ok) continue;

      std::set<VertexId> used;
      auto place = [&](auto&& self, std::size_t i) -> bool {
        if (i == rest.size()) return true;
        const VertexId t = rest[i];
        for (VertexId h : candidates) {
          if (used.count(h) || host.degree(h) < pattern.degree(t)) continue;
          map[t] = h;
          if (consistent(t, h)) {
            used.insert(h);
            if (self(self, i + 1)) return true;
            used.erase(h);
          }
          map.erase(t);
        }
        return false;
      };
      if (place(place, 0)) return PatternMatch{tmpl.name, map};
    }
  }
  return std::nullopt;
}

enum class NineCycleClass { kGood, kBad };

struct NineCycleVerdict {
  NineCycleClass verdict = NineCycleClass::kGood;
  std::optional<PatternMatch> match;

  bool bad() const { return verdict == NineCycleClass::kBad; }
};

inline NineCycleVerdict classify_9cycle(const PlaneGraph& g, const CycleRef& c, const std::vector<Configuration>& templates) {
  if (c.length() != 9) throw Error(ErrorCode::kInvalidArgument, "classify_9cycle needs a cycle of length 9");
  validate_cycle(g.graph(), c.vertices);
  for (const Configuration& t : templates) {
    if (auto m = match_pinned_cycle(g, c, t)) return {NineCycleClass::kBad, m};
  }
  return {};
}

}  // namespace dpcolor
