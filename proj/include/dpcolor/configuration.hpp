#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dpcolor/error.hpp"
#include "dpcolor/graph.hpp"

namespace dpcolor {

/// Host-side requirement on a pattern vertex.
struct VertexConstraint {
  /// Degree in the host; with `exact == false` it is a lower bound.
  int degree = 0;
  bool exact = false;
  /// Not on the outer cycle.
  bool internal = false;

  friend bool operator==(const VertexConstraint&, const VertexConstraint&) = default;
};

/// A pattern graph H with boundary B and per-vertex host constraints.
/// Vertices are 0..n-1; `names` carries the labels used in files and reports.
struct Configuration {
  std::string name;
  std::string description;
  std::vector<std::string> names;
  std::vector<Edge> edges;
  std::vector<VertexId> boundary;
  std::map<VertexId, VertexConstraint> constraints;
  /// Degeneracy order of the non-boundary vertices, when the proof gives one.
  std::optional<std::vector<VertexId>> order;
  /// Cycles that must bound faces in the host.
  std::vector<std::vector<VertexId>> faces;
  /// Pinned outer cycle (9-cycle templates).
  std::optional<std::vector<VertexId>> outer;

  std::size_t size() const { return names.size(); }

  VertexId id_of(const std::string& label) const {
    auto it = std::find(names.begin(), names.end(), label);
    if (it == names.end()) throw Error(ErrorCode::kUnknownName, "configuration " + name + " has no vertex " + label);
    return static_cast<VertexId>(it - names.begin());
  }

  std::vector<VertexId> ids_of(const std::vector<std::string>& labels) const {
    std::vector<VertexId> out;
    for (const auto& s : labels) out.push_back(id_of(s));
    return out;
  }

  const std::string& label(VertexId v) const { return names.at(static_cast<std::size_t>(v)); }

  bool is_boundary(VertexId v) const { return std::find(boundary.begin(), boundary.end(), v) != boundary.end(); }

  std::vector<VertexId> interior() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < static_cast<VertexId>(size()); ++v) {
      if (!is_boundary(v)) out.push_back(v);
    }
    return out;
  }

  Graph pattern() const {
    Graph g;
    for (VertexId v = 0; v < static_cast<VertexId>(size()); ++v) g.add_vertex(v);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
  }

  /// Checks the structural invariants; throws kInvalidArgument on failure.
  void validate() const {
    const auto n = static_cast<VertexId>(size());
    if (n == 0) throw Error(ErrorCode::kInvalidArgument, "configuration " + name + " is empty");
    std::set<std::string> distinct(names.begin(), names.end());
    if (distinct.size() != names.size()) throw Error(ErrorCode::kInvalidArgument, "duplicate vertex label in " + name);
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v >= n) throw Error(ErrorCode::kInvalidArgument, "edge out of range in " + name);
    }
    Graph h = pattern();
    if (!h.connected()) throw Error(ErrorCode::kInvalidArgument, "pattern of " + name + " is not connected");
    for (VertexId b : boundary) {
      if (b < 0 || b >= n) throw Error(ErrorCode::kInvalidArgument, "boundary vertex out of range in " + name);
    }
    for (const auto& [v, c] : constraints) {
      if (v < 0 || v >= n) throw Error(ErrorCode::kInvalidArgument, "constraint on unknown vertex in " + name);
      if (c.degree < h.degree(v)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "degree constraint of " + label(v) + " in " + name + " is below its pattern degree");
      }
    }
    if (order) {
      std::vector<VertexId> sorted = *order;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != interior()) {
        throw Error(ErrorCode::kInvalidArgument, "order of " + name + " is not a permutation of the non-boundary vertices");
      }
    }
  }
};

/// A configuration placed in a self-contained host: H plus one fresh pendant
/// per unit of missing exact degree. `outside` is V(G) - H, with the declared
/// boundary first.
struct MaterializedConfiguration {
  Graph host;
  std::vector<VertexId> inside;
  std::vector<VertexId> outside;
  /// pendant -> the pattern vertex it hangs from
  std::map<VertexId, VertexId> pendant_of;
};

inline MaterializedConfiguration materialize(const Configuration& cfg) {
  cfg.validate();
  MaterializedConfiguration out;
  out.host = cfg.pattern();
  out.inside = cfg.interior();
  out.outside = cfg.boundary;
  VertexId next = static_cast<VertexId>(cfg.size());
  for (VertexId v : out.inside) {
    auto it = cfg.constraints.find(v);
    if (it == cfg.constraints.end() || !it->second.exact) continue;
    for (int i = out.host.degree(v); i < it->second.degree; ++i) {
      out.host.add_edge(v, next);
      out.outside.push_back(next);
      out.pendant_of[next] = v;
      ++next;
    }
  }
  return out;
}

}  // namespace dpcolor
