#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dpcolor/error.hpp"

namespace dpcolor {

using VertexId = int;
using Color = int;

/// Undirected edge, always stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {}

  VertexId other(VertexId w) const { return w == u ? v : u; }
  bool has(VertexId w) const { return w == u || w == v; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string edge_key(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

/// Simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;

  Graph(std::vector<VertexId> vertices, const std::vector<Edge>& edges) {
    for (VertexId v : vertices) add_vertex(v);
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }

  void add_vertex(VertexId v) {
    if (v < 0) throw Error(ErrorCode::kInvalidArgument, "vertex ids must be nonnegative");
    adj_.try_emplace(v);
  }

  void add_edge(VertexId a, VertexId b) {
    if (a == b) throw Error(ErrorCode::kInvalidArgument, "loop at vertex " + std::to_string(a));
    add_vertex(a);
    add_vertex(b);
    auto& na = adj_[a];
    auto it = std::lower_bound(na.begin(), na.end(), b);
    if (it != na.end() && *it == b) {
      throw Error(ErrorCode::kInvalidArgument, "parallel edge " + edge_key(Edge(a, b)));
    }
    na.insert(it, b);
    auto& nb = adj_[b];
    nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
    ++edge_count_;
  }

  bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }

  bool has_edge(VertexId a, VertexId b) const {
    auto it = adj_.find(a);
    if (it == adj_.end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), b);
  }

  const std::vector<VertexId>& neighbors(VertexId v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw Error(ErrorCode::kInvalidArgument, "unknown vertex " + std::to_string(v));
    return it->second;
  }

  int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    out.reserve(adj_.size());
    for (const auto& [v, _] : adj_) out.push_back(v);
    return out;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (const auto& [v, nbrs] : adj_) {
      for (VertexId w : nbrs) {
        if (v < w) out.emplace_back(v, w);
      }
    }
    return out;
  }

  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const { return edge_count_; }

  Graph induced(const std::set<VertexId>& keep) const {
    Graph out;
    for (VertexId v : keep) out.add_vertex(v);
    for (const Edge& e : edges()) {
      if (keep.count(e.u) && keep.count(e.v)) out.add_edge(e.u, e.v);
    }
    return out;
  }

  Graph without(const std::set<VertexId>& drop) const {
    std::set<VertexId> keep;
    for (const auto& [v, _] : adj_) {
      if (!drop.count(v)) keep.insert(v);
    }
    return induced(keep);
  }

  /// Breadth-first distances from `source`; unreachable vertices are absent.
  std::map<VertexId, int> distances_from(VertexId source) const {
    std::map<VertexId, int> dist;
    std::queue<VertexId> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
      VertexId v = frontier.front();
      frontier.pop();
      for (VertexId w : neighbors(v)) {
        if (dist.emplace(w, dist[v] + 1).second) frontier.push(w);
      }
    }
    return dist;
  }

  bool connected() const {
    if (adj_.empty()) return true;
    return distances_from(adj_.begin()->first).size() == adj_.size();
  }

 private:
  std::map<VertexId, std::vector<VertexId>> adj_;
  std::size_t edge_count_ = 0;
};

}  // namespace dpcolor
