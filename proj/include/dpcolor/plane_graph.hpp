#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dpcolor/error.hpp"
#include "dpcolor/graph.hpp"

namespace dpcolor {

/// A cycle given as its cyclic vertex sequence.
struct CycleRef {
  std::vector<VertexId> vertices;

  std::size_t length() const { return vertices.size(); }
  friend bool operator==(const CycleRef&, const CycleRef&) = default;
};

struct Face {
  int id = 0;
  /// Boundary walk: walk[i] -> walk[i+1] (cyclically) are the darts of the face.
  std::vector<VertexId> walk;

  int degree() const { return static_cast<int>(walk.size()); }

  std::set<VertexId> vertex_set() const { return {walk.begin(), walk.end()}; }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < walk.size(); ++i) out.emplace_back(walk[i], walk[(i + 1) % walk.size()]);
    return out;
  }
};

/// Canonical form of a cyclic sequence: smallest rotation, direction with the
/// smaller second element.
inline std::vector<VertexId> canonical_cycle(const std::vector<VertexId>& seq) {
  if (seq.size() < 2) return seq;
  const std::size_t n = seq.size();
  std::vector<VertexId> best;
  for (int dir : {1, -1}) {
    for (std::size_t start = 0; start < n; ++start) {
      std::vector<VertexId> cand;
      cand.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t idx = dir == 1 ? (start + i) % n : (start + n - i) % n;
        cand.push_back(seq[idx]);
      }
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  return best;
}

inline bool same_cycle(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  return a.size() == b.size() && canonical_cycle(a) == canonical_cycle(b);
}

/// Simple graph together with a rotation system (counterclockwise neighbor
/// order at every vertex) and an optional designated outer cycle.
class PlaneGraph {
 public:
  using Rotation = std::map<VertexId, std::vector<VertexId>>;

  PlaneGraph() = default;

  static PlaneGraph from_rotation(Rotation rotation, std::optional<std::vector<VertexId>> outer = std::nullopt) {
    PlaneGraph g;
    for (const auto& [v, nbrs] : rotation) {
      if (v < 0) throw Error(ErrorCode::kInvalidArgument, "vertex ids must be nonnegative");
      g.graph_.add_vertex(v);
      std::set<VertexId> seen;
      for (VertexId w : nbrs) {
        if (w == v) throw Error(ErrorCode::kMalformedRotation, "loop at vertex " + std::to_string(v));
        if (!seen.insert(w).second) {
          throw Error(ErrorCode::kMalformedRotation,
                      "neighbor " + std::to_string(w) + " repeated in rotation of " + std::to_string(v));
        }
        auto it = rotation.find(w);
        if (it == rotation.end() || std::count(it->second.begin(), it->second.end(), v) != 1) {
          throw Error(ErrorCode::kMalformedRotation,
                      "asymmetric rotation entry " + std::to_string(v) + "->" + std::to_string(w));
        }
      }
    }
    for (const auto& [v, nbrs] : rotation) {
      for (VertexId w : nbrs) {
        if (v < w) g.graph_.add_edge(v, w);
      }
    }
    g.rotation_ = std::move(rotation);
    if (outer) g.set_outer(*outer);
    return g;
  }

  /// Builds the rotation system of a straight-line drawing by sorting
  /// neighbors by angle. Intended for hand-built fixtures.
  static PlaneGraph from_points(const std::map<VertexId, std::pair<double, double>>& points,
                                const std::vector<Edge>& edges,
                                std::optional<std::vector<VertexId>> outer = std::nullopt) {
    Rotation rot;
    for (const auto& [v, _] : points) rot[v];
    for (const Edge& e : edges) {
      if (!points.count(e.u) || !points.count(e.v)) {
        throw Error(ErrorCode::kInvalidArgument, "edge " + edge_key(e) + " references a vertex without a point");
      }
      rot[e.u].push_back(e.v);
      rot[e.v].push_back(e.u);
    }
    for (auto& [v, nbrs] : rot) {
      const auto [x0, y0] = points.at(v);
      std::sort(nbrs.begin(), nbrs.end(), [&](VertexId a, VertexId b) {
        const auto [xa, ya] = points.at(a);
        const auto [xb, yb] = points.at(b);
        return std::atan2(ya - y0, xa - x0) < std::atan2(yb - y0, xb - x0);
      });
    }
    return from_rotation(std::move(rot), std::move(outer));
  }

  const Graph& graph() const { return graph_; }
  const Rotation& rotation() const { return rotation_; }
  const std::vector<VertexId>& rotation(VertexId v) const { return rotation_.at(v); }
  const std::optional<std::vector<VertexId>>& outer() const { return outer_; }

  std::vector<VertexId> vertices() const { return graph_.vertices(); }
  std::vector<Edge> edges() const { return graph_.edges(); }
  int degree(VertexId v) const { return graph_.degree(v); }
  bool has_edge(VertexId a, VertexId b) const { return graph_.has_edge(a, b); }

  void set_outer(const std::vector<VertexId>& cycle);
  void clear_outer() { outer_.reset(); }

 private:
  Graph graph_;
  Rotation rotation_;
  std::optional<std::vector<VertexId>> outer_;
};

/// Faces plus the face lying to the traversal side of every dart.
struct Embedding {
  std::vector<Face> faces;
  std::map<std::pair<VertexId, VertexId>, int> dart_face;

  int face_of(VertexId from, VertexId to) const { return dart_face.at({from, to}); }

  /// Faces on the two sides of an edge (equal for a bridge).
  std::pair<int, int> sides(const Edge& e) const { return {face_of(e.u, e.v), face_of(e.v, e.u)}; }
};

inline Embedding trace_embedding(const PlaneGraph& g) {
  const Graph& graph = g.graph();
  if (!graph.connected()) throw Error(ErrorCode::kDisconnected, "face tracing requires connected graph");
  Embedding emb;
  // next dart after (u -> v): leave v toward the neighbor preceding u in v's rotation
  auto next = [&](VertexId u, VertexId v) {
    const auto& rot = g.rotation(v);
    const auto pos = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), u) - rot.begin());
    return rot[(pos + rot.size() - 1) % rot.size()];
  };
  for (VertexId start : graph.vertices()) {
    for (VertexId first : g.rotation(start)) {
      if (emb.dart_face.count({start, first})) continue;
      Face face;
      face.id = static_cast<int>(emb.faces.size());
      VertexId u = start;
      VertexId v = first;
      while (!emb.dart_face.count({u, v})) {
        emb.dart_face[{u, v}] = face.id;
        face.walk.push_back(u);
        VertexId w = next(u, v);
        u = v;
        v = w;
      }
      if (u != start || v != first) {
        throw Error(ErrorCode::kMalformedRotation, "face walk did not close");
      }
      emb.faces.push_back(std::move(face));
    }
  }
  const long euler = static_cast<long>(graph.num_vertices()) - static_cast<long>(graph.num_edges()) +
                     static_cast<long>(emb.faces.size());
  if (graph.num_edges() > 0 && euler != 2) {
    throw Error(ErrorCode::kMalformedRotation,
                "rotation system is not planar (V - E + F = " + std::to_string(euler) + ")");
  }
  return emb;
}

inline std::vector<Face> trace_faces(const PlaneGraph& g) { return trace_embedding(g).faces; }

/// Id of the face whose boundary walk is exactly `cycle`, if any.
inline std::optional<int> find_face(const Embedding& emb, const std::vector<VertexId>& cycle) {
  for (const Face& f : emb.faces) {
    if (same_cycle(f.walk, cycle)) return f.id;
  }
  return std::nullopt;
}

inline void validate_cycle(const Graph& g, const std::vector<VertexId>& cycle) {
  if (cycle.size() < 3) throw Error(ErrorCode::kNotACycle, "a cycle needs at least 3 vertices");
  std::set<VertexId> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != cycle.size()) throw Error(ErrorCode::kNotACycle, "cycle repeats a vertex");
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    VertexId a = cycle[i];
    VertexId b = cycle[(i + 1) % cycle.size()];
    if (!g.has_edge(a, b)) throw Error(ErrorCode::kNotACycle, "cycle uses non-edge " + edge_key(Edge(a, b)));
  }
}

inline void PlaneGraph::set_outer(const std::vector<VertexId>& cycle) {
  validate_cycle(graph_, cycle);
  if (graph_.connected()) {
    Embedding emb = trace_embedding(*this);
    if (!find_face(emb, cycle)) {
      throw Error(ErrorCode::kNotOuterFace, "designated outer cycle is not a face boundary");
    }
  }
  outer_ = cycle;
}

/// Every simple cycle with exactly k vertices, once each, in canonical form.
inline std::vector<CycleRef> cycles_of_length(const Graph& g, int k) {
  if (k < 3 || k > 12) throw Error(ErrorCode::kInvalidArgument, "cycle length must lie in [3, 12]");
  std::vector<CycleRef> out;
  std::vector<VertexId> path;
  std::set<VertexId> on_path;
  // the start is the smallest vertex of the cycle; path[1] < path.back() fixes direction
  auto dfs = [&](auto&& self, VertexId v) -> void {
    if (static_cast<int>(path.size()) == k) {
      if (g.has_edge(v, path.front()) && path[1] < path.back()) out.push_back(CycleRef{path});
      return;
    }
    for (VertexId w : g.neighbors(v)) {
      if (w <= path.front() || on_path.count(w)) continue;
      path.push_back(w);
      on_path.insert(w);
      self(self, w);
      on_path.erase(w);
      path.pop_back();
    }
  };
  for (VertexId s : g.vertices()) {
    path = {s};
    on_path = {s};
    dfs(dfs, s);
  }
  std::sort(out.begin(), out.end(), [](const CycleRef& a, const CycleRef& b) { return a.vertices < b.vertices; });
  return out;
}

inline std::vector<CycleRef> cycles_of_length(const PlaneGraph& g, int k) { return cycles_of_length(g.graph(), k); }

/// Smallest distance between two distinct triangles; nullopt means infinity.
inline std::optional<int> triangle_distance(const Graph& g) {
  std::vector<CycleRef> triangles = cycles_of_length(g, 3);
  if (triangles.size() < 2) return std::nullopt;
  std::map<VertexId, std::map<VertexId, int>> dist;
  for (const CycleRef& t : triangles) {
    for (VertexId v : t.vertices) {
      if (!dist.count(v)) dist[v] = g.distances_from(v);
    }
  }
  std::optional<int> best;
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    for (std::size_t j = i + 1; j < triangles.size(); ++j) {
      for (VertexId a : triangles[i].vertices) {
        for (VertexId b : triangles[j].vertices) {
          auto it = dist[a].find(b);
          if (it == dist[a].end()) continue;
          if (!best || it->second < *best) best = it->second;
        }
      }
    }
  }
  return best;
}

inline std::optional<int> triangle_distance(const PlaneGraph& g) { return triangle_distance(g.graph()); }

inline bool has_chord(const Graph& g, const CycleRef& c) {
  validate_cycle(g, c.vertices);
  const std::size_t n = c.length();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (g.has_edge(c.vertices[i], c.vertices[j])) return true;
    }
  }
  return false;
}

inline bool has_chord(const PlaneGraph& g, const CycleRef& c) { return has_chord(g.graph(), c); }

/// The vertex sets strictly on either side of a cycle. When the graph has a
/// designated outer cycle, `first` is the interior and `second` the exterior.
inline std::pair<std::set<VertexId>, std::set<VertexId>> cycle_sides(const PlaneGraph& g, const CycleRef& c) {
  validate_cycle(g.graph(), c.vertices);
  Embedding emb = trace_embedding(g);
  std::set<Edge> cycle_edges;
  for (std::size_t i = 0; i < c.length(); ++i) cycle_edges.emplace(c.vertices[i], c.vertices[(i + 1) % c.length()]);

  // flood faces across edges that are not on the cycle
  std::vector<int> side(emb.faces.size(), -1);
  int classes = 0;
  for (std::size_t f0 = 0; f0 < emb.faces.size(); ++f0) {
    if (side[f0] != -1) continue;
    std::vector<int> stack{static_cast<int>(f0)};
    side[f0] = classes;
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (const Edge& e : emb.faces[static_cast<std::size_t>(f)].edges()) {
        if (cycle_edges.count(e)) continue;
        auto [a, b] = emb.sides(e);
        for (int h : {a, b}) {
          if (side[static_cast<std::size_t>(h)] == -1) {
            side[static_cast<std::size_t>(h)] = classes;
            stack.push_back(h);
          }
        }
      }
    }
    ++classes;
  }
  if (classes != 2) throw Error(ErrorCode::kInternal, "cycle does not split the faces into two regions");

  int outer_class = 1;
  if (g.outer()) {
    auto outer_face = find_face(emb, *g.outer());
    if (outer_face) outer_class = side[static_cast<std::size_t>(*outer_face)];
  }
  std::set<VertexId> on_cycle(c.vertices.begin(), c.vertices.end());
  std::set<VertexId> inside;
  std::set<VertexId> outside;
  for (const Face& f : emb.faces) {
    for (VertexId v : f.walk) {
      if (on_cycle.count(v)) continue;
      (side[static_cast<std::size_t>(f.id)] == outer_class ? outside : inside).insert(v);
    }
  }
  return {inside, outside};
}

inline bool is_separating(const PlaneGraph& g, const CycleRef& c) {
  auto [inside, outside] = cycle_sides(g, c);
  return !inside.empty() && !outside.empty();
}

/// Deletes vertices; the outer designation survives only if untouched.
inline PlaneGraph remove_vertices(const PlaneGraph& g, const std::set<VertexId>& drop) {
  PlaneGraph::Rotation rot;
  for (const auto& [v, nbrs] : g.rotation()) {
    if (drop.count(v)) continue;
    auto& out = rot[v];
    for (VertexId w : nbrs) {
      if (!drop.count(w)) out.push_back(w);
    }
  }
  std::optional<std::vector<VertexId>> outer;
  if (g.outer() && std::none_of(g.outer()->begin(), g.outer()->end(), [&](VertexId v) { return drop.count(v) != 0; })) {
    outer = g.outer();
  }
  PlaneGraph out = PlaneGraph::from_rotation(std::move(rot));
  if (outer) {
    try {
      out.set_outer(*outer);
    } catch (const Error&) {
      // the old outer cycle may stop being a face once vertices are gone
    }
  }
  return out;
}

/// Merges v into u through a face incident to both. The merged vertex keeps id u.
inline PlaneGraph identify(const PlaneGraph& g, VertexId u, VertexId v) {
  const Graph& graph = g.graph();
  if (!graph.has_vertex(u) || !graph.has_vertex(v)) throw Error(ErrorCode::kInvalidArgument, "unknown vertex");
  if (u == v) throw Error(ErrorCode::kSameVertex, "cannot identify a vertex with itself");
  if (graph.has_edge(u, v)) throw Error(ErrorCode::kAdjacent, "identified vertices are adjacent");
  for (VertexId w : graph.neighbors(u)) {
    if (graph.has_edge(w, v)) {
      throw Error(ErrorCode::kCommonNeighbor, "common neighbor " + std::to_string(w) + " would create a parallel edge");
    }
  }
  Embedding emb = trace_embedding(g);

  // corner of u in face f: arriving dart a->u, leaving u->b; the corner is the
  // counterclockwise wedge from b to a, so the rotation after it starts at a.
  auto corner_start = [&](const Face& f, VertexId x) -> std::optional<VertexId> {
    const std::size_t n = f.walk.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (f.walk[i] == x) return f.walk[(i + n - 1) % n];
    }
    return std::nullopt;
  };
  std::optional<std::pair<VertexId, VertexId>> starts;
  for (const Face& f : emb.faces) {
    auto a = corner_start(f, u);
    auto c = corner_start(f, v);
    if (a && c) {
      starts = {{*a, *c}};
      break;
    }
  }
  if (!starts) throw Error(ErrorCode::kNoCommonFace, "identified vertices share no face");
  if (graph.degree(u) == 0 || graph.degree(v) == 0) throw Error(ErrorCode::kInternal, "isolated vertex in connected graph");

  auto rotated_from = [&](VertexId x, VertexId first) {
    const auto& rot = g.rotation(x);
    auto pos = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), first) - rot.begin());
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < rot.size(); ++i) out.push_back(rot[(pos + i) % rot.size()]);
    return out;
  };
  std::vector<VertexId> merged = rotated_from(u, starts->first);
  std::vector<VertexId> tail = rotated_from(v, starts->second);
  merged.insert(merged.end(), tail.begin(), tail.end());

  PlaneGraph::Rotation rot;
  for (const auto& [x, nbrs] : g.rotation()) {
    if (x == v) continue;
    if (x == u) {
      rot[u] = merged;
      continue;
    }
    auto& out = rot[x];
    for (VertexId w : nbrs) out.push_back(w == v ? u : w);
  }
  PlaneGraph result = PlaneGraph::from_rotation(std::move(rot));
  if (g.outer()) {
    std::vector<VertexId> outer = *g.outer();
    if (std::find(outer.begin(), outer.end(), v) == outer.end()) {
      try {
        result.set_outer(outer);
      } catch (const Error&) {
      }
    }
  }
  return result;
}

}  // namespace dpcolor
