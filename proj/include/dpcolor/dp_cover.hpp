#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dpcolor/error.hpp"
#include "dpcolor/graph.hpp"

namespace dpcolor {

/// Partial map vertex -> chosen color.
using PartialColoring = std::map<VertexId, Color>;

class ListAssignment {
 public:
  ListAssignment() = default;

  static ListAssignment uniform(const std::vector<VertexId>& vertices, int k) {
    ListAssignment l;
    std::vector<Color> colors(static_cast<std::size_t>(k));
    std::iota(colors.begin(), colors.end(), 1);
    for (VertexId v : vertices) l.set(v, colors);
    return l;
  }

  void set(VertexId v, std::vector<Color> colors) {
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    lists_[v] = std::move(colors);
  }

  bool has(VertexId v) const { return lists_.count(v) != 0; }

  const std::vector<Color>& at(VertexId v) const {
    auto it = lists_.find(v);
    if (it == lists_.end()) throw Error(ErrorCode::kInvalidArgument, "vertex " + std::to_string(v) + " has no list");
    return it->second;
  }

  bool contains(VertexId v, Color c) const {
    const auto& l = at(v);
    return std::binary_search(l.begin(), l.end(), c);
  }

  std::size_t size_of(VertexId v) const { return at(v).size(); }

  std::size_t min_size() const {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& [_, l] : lists_) best = std::min(best, l.size());
    return lists_.empty() ? 0 : best;
  }

  bool is_k_assignment(std::size_t k) const { return min_size() >= k; }

  const std::map<VertexId, std::vector<Color>>& entries() const { return lists_; }

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  std::map<VertexId, std::vector<Color>> lists_;
};

/// Per-edge matchings. Pairs are stored as (color at edge.u, color at edge.v).
class MatchingAssignment {
 public:
  using Pairs = std::vector<std::pair<Color, Color>>;

  /// Pairs are given from the perspective of `from`: (color at from, color at to).
  void set(VertexId from, VertexId to, Pairs pairs) {
    Edge e(from, to);
    if (from != e.u) {
      for (auto& p : pairs) std::swap(p.first, p.second);
    }
    std::sort(pairs.begin(), pairs.end());
    matchings_[e] = std::move(pairs);
  }

  const Pairs& pairs(const Edge& e) const {
    static const Pairs kEmpty;
    auto it = matchings_.find(e);
    return it == matchings_.end() ? kEmpty : it->second;
  }

  /// Pairs as (color at from, color at to).
  Pairs oriented(VertexId from, VertexId to) const {
    Pairs out = pairs(Edge(from, to));
    if (from > to) {
      for (auto& p : out) std::swap(p.first, p.second);
    }
    return out;
  }

  bool has(const Edge& e) const { return matchings_.count(e) != 0; }

  const std::map<Edge, Pairs>& entries() const { return matchings_; }

  friend bool operator==(const MatchingAssignment&, const MatchingAssignment&) = default;

 private:
  std::map<Edge, Pairs> matchings_;
};

struct CoverNode {
  VertexId vertex;
  Color color;
};

/// The cover graph: a clique on {v} x L(v) per host vertex plus the matching
/// edges between groups of adjacent host vertices. Nodes of one host vertex
/// are contiguous and sorted by color.
class CoverGraph {
 public:
  const std::vector<VertexId>& host_vertices() const { return vertices_; }
  const std::vector<Edge>& host_edges() const { return edges_; }
  const ListAssignment& lists() const { return lists_; }
  const MatchingAssignment& matchings() const { return matchings_; }

  std::size_t num_host_vertices() const { return vertices_.size(); }
  std::size_t num_nodes() const { return nodes_.size(); }

  std::size_t clique_edge_count() const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      std::size_t s = group_size(static_cast<int>(i));
      total += s * (s - 1) / 2;
    }
    return total;
  }

  std::size_t cross_edge_count() const { return cross_count_; }
  std::size_t num_edges() const { return clique_edge_count() + cross_count_; }

  int index_of(VertexId v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return -1;
    return static_cast<int>(it - vertices_.begin());
  }

  int group_begin(int vertex_index) const { return offset_[static_cast<std::size_t>(vertex_index)]; }
  int group_end(int vertex_index) const { return offset_[static_cast<std::size_t>(vertex_index) + 1]; }
  std::size_t group_size(int vertex_index) const {
    return static_cast<std::size_t>(group_end(vertex_index) - group_begin(vertex_index));
  }

  const CoverNode& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  int owner(int id) const { return owner_[static_cast<std::size_t>(id)]; }
  const std::vector<int>& cross(int id) const { return cross_[static_cast<std::size_t>(id)]; }

  std::optional<int> node_of(VertexId v, Color c) const {
    int i = index_of(v);
    if (i < 0) return std::nullopt;
    for (int n = group_begin(i); n < group_end(i); ++n) {
      if (nodes_[static_cast<std::size_t>(n)].color == c) return n;
    }
    return std::nullopt;
  }

  bool adjacent(int a, int b) const {
    if (a == b) return false;
    if (owner(a) == owner(b)) return true;
    const auto& c = cross(a);
    return std::find(c.begin(), c.end(), b) != c.end();
  }

  friend CoverGraph build_cover(const Graph& g, const ListAssignment& l, const MatchingAssignment& m);

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<int> offset_;
  std::vector<CoverNode> nodes_;
  std::vector<int> owner_;
  std::vector<std::vector<int>> cross_;
  std::size_t cross_count_ = 0;
  ListAssignment lists_;
  MatchingAssignment matchings_;
};

inline CoverGraph build_cover(const Graph& g, const ListAssignment& l, const MatchingAssignment& m) {
  CoverGraph cov;
  cov.vertices_ = g.vertices();
  cov.edges_ = g.edges();
  cov.offset_.push_back(0);
  for (std::size_t i = 0; i < cov.vertices_.size(); ++i) {
    VertexId v = cov.vertices_[i];
    if (!l.has(v)) throw Error(ErrorCode::kInvalidArgument, "vertex " + std::to_string(v) + " has no list");
    for (Color c : l.at(v)) {
      cov.nodes_.push_back({v, c});
      cov.owner_.push_back(static_cast<int>(i));
    }
    cov.offset_.push_back(static_cast<int>(cov.nodes_.size()));
  }
  cov.cross_.resize(cov.nodes_.size());
  for (const auto& [e, _] : m.entries()) {
    if (!g.has_edge(e.u, e.v)) {
      throw Error(ErrorCode::kInvalidMatching, "matching given for non-edge " + edge_key(e));
    }
  }
  for (const Edge& e : cov.edges_) {
    const auto& pairs = m.pairs(e);
    std::set<Color> seen_u;
    std::set<Color> seen_v;
    for (const auto& [cu, cv] : pairs) {
      if (!l.contains(e.u, cu) || !l.contains(e.v, cv)) {
        throw Error(ErrorCode::kUnlistedColor, "edge " + edge_key(e) + " matches an unlisted color");
      }
      if (!seen_u.insert(cu).second || !seen_v.insert(cv).second) {
        throw Error(ErrorCode::kInvalidMatching, "pairs on edge " + edge_key(e) + " are not a matching");
      }
      int a = *cov.node_of(e.u, cu);
      int b = *cov.node_of(e.v, cv);
      cov.cross_[static_cast<std::size_t>(a)].push_back(b);
      cov.cross_[static_cast<std::size_t>(b)].push_back(a);
      ++cov.cross_count_;
    }
  }
  cov.lists_ = l;
  cov.matchings_ = m;
  return cov;
}

struct ColoringCheck {
  bool ok = false;
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// Checks that `a` colors vertices from their lists with no cover edge inside
/// the chosen set. With `require_complete`, every host vertex must be colored.
inline ColoringCheck check_coloring(const CoverGraph& cov, const PartialColoring& a, bool require_complete) {
  std::vector<int> chosen;
  for (const auto& [v, c] : a) {
    if (cov.index_of(v) < 0) return {false, "vertex " + std::to_string(v) + " is not in the graph"};
    auto node = cov.node_of(v, c);
    if (!node) return {false, "color " + std::to_string(c) + " not in list of vertex " + std::to_string(v)};
    chosen.push_back(*node);
  }
  for (int n : chosen) {
    for (int w : cov.cross(n)) {
      VertexId wv = cov.node(w).vertex;
      auto it = a.find(wv);
      if (it != a.end() && it->second == cov.node(w).color) {
        return {false, "conflict on edge " + edge_key(Edge(cov.node(n).vertex, wv))};
      }
    }
  }
  if (require_complete && a.size() != cov.num_host_vertices()) return {false, "incomplete"};
  return {true, ""};
}

inline ColoringCheck is_dp_coloring(const CoverGraph& cov, const PartialColoring& a) {
  return check_coloring(cov, a, true);
}

/// M_uv = {(c, c) : c in L(u) and L(v)}: list coloring as a DP instance.
inline MatchingAssignment from_lists(const ListAssignment& l, const Graph& g) {
  MatchingAssignment m;
  for (const Edge& e : g.edges()) {
    MatchingAssignment::Pairs pairs;
    const auto& lu = l.at(e.u);
    const auto& lv = l.at(e.v);
    std::vector<Color> common;
    std::set_intersection(lu.begin(), lu.end(), lv.begin(), lv.end(), std::back_inserter(common));
    for (Color c : common) pairs.emplace_back(c, c);
    m.set(e.u, e.v, std::move(pairs));
  }
  return m;
}

/// Colors of each uncolored vertex that survive the colored neighbors.
inline ListAssignment residual_lists(const CoverGraph& cov, const PartialColoring& phi) {
  ListAssignment out;
  for (std::size_t i = 0; i < cov.num_host_vertices(); ++i) {
    VertexId u = cov.host_vertices()[i];
    if (phi.count(u)) continue;
    std::vector<Color> remaining;
    for (int n = cov.group_begin(static_cast<int>(i)); n < cov.group_end(static_cast<int>(i)); ++n) {
      bool blocked = false;
      for (int w : cov.cross(n)) {
        auto it = phi.find(cov.node(w).vertex);
        if (it != phi.end() && it->second == cov.node(w).color) {
          blocked = true;
          break;
        }
      }
      if (!blocked) remaining.push_back(cov.node(n).color);
    }
    out.set(u, std::move(remaining));
  }
  return out;
}

/// Equivalent instance plus the per-vertex color bijection old -> new.
struct StraightenResult {
  ListAssignment lists;
  MatchingAssignment matchings;
  std::map<VertexId, std::map<Color, Color>> relabel;

  PartialColoring to_new(const PartialColoring& old_coloring) const {
    PartialColoring out;
    for (const auto& [v, c] : old_coloring) out[v] = relabel.at(v).at(c);
    return out;
  }

  PartialColoring to_old(const PartialColoring& new_coloring) const {
    PartialColoring out;
    for (const auto& [v, c] : new_coloring) {
      for (const auto& [from, to] : relabel.at(v)) {
        if (to == c) out[v] = from;
      }
    }
    return out;
  }
};

/// Renames lists so every selected edge becomes straight. The selection must be
/// a forest of edges carrying perfect matchings between equal-size lists. Each
/// tree keeps the colors of its root: the first listed root it contains, else
/// its smallest vertex.
inline StraightenResult straighten(const Graph& g, const ListAssignment& l, const MatchingAssignment& m,
                                   const std::vector<Edge>& selected, const std::vector<VertexId>& roots = {}) {
  std::map<VertexId, std::vector<std::pair<VertexId, Edge>>> forest;
  std::map<VertexId, VertexId> parent;  // union-find for cycle detection
  auto find = [&](VertexId x) {
    while (parent.count(x) && parent[x] != x) x = parent[x];
    return x;
  };
  for (const Edge& e : selected) {
    if (!g.has_edge(e.u, e.v)) throw Error(ErrorCode::kInvalidArgument, "selected non-edge " + edge_key(e));
    for (VertexId x : {e.u, e.v}) parent.try_emplace(x, x);
    VertexId ru = find(e.u);
    VertexId rv = find(e.v);
    if (ru == rv) throw Error(ErrorCode::kCycleInSelection, "cannot straighten a cycle");
    parent[ru] = rv;
    const auto& pairs = m.pairs(e);
    if (l.size_of(e.u) != l.size_of(e.v) || pairs.size() != l.size_of(e.u)) {
      throw Error(ErrorCode::kNonPerfectMatching, "edge " + edge_key(e) + " does not carry a perfect matching");
    }
    forest[e.u].push_back({e.v, e});
    forest[e.v].push_back({e.u, e});
  }

  StraightenResult out;
  for (VertexId v : g.vertices()) {
    std::map<Color, Color> identity;
    for (Color c : l.at(v)) identity[c] = c;
    out.relabel[v] = identity;
  }

  std::set<VertexId> done;
  std::vector<VertexId> starts = roots;
  for (const auto& [v, _] : forest) starts.push_back(v);
  for (VertexId root : starts) {
    if (!forest.count(root) || done.count(root)) continue;
    std::vector<VertexId> stack{root};
    done.insert(root);
    while (!stack.empty()) {
      VertexId p = stack.back();
      stack.pop_back();
      for (const auto& [w, e] : forest[p]) {
        if (done.count(w)) continue;
        done.insert(w);
        std::map<Color, Color> sigma;
        for (const auto& [cp, cw] : m.oriented(p, w)) sigma[cw] = out.relabel[p].at(cp);
        out.relabel[w] = sigma;
        stack.push_back(w);
      }
    }
  }

  for (VertexId v : g.vertices()) {
    std::vector<Color> renamed;
    for (Color c : l.at(v)) renamed.push_back(out.relabel[v].at(c));
    out.lists.set(v, renamed);
  }
  for (const Edge& e : g.edges()) {
    MatchingAssignment::Pairs pairs;
    for (const auto& [cu, cv] : m.pairs(e)) pairs.emplace_back(out.relabel[e.u].at(cu), out.relabel[e.v].at(cv));
    out.matchings.set(e.u, e.v, std::move(pairs));
  }
  return out;
}

inline bool is_straight(const MatchingAssignment& m, const Edge& e) {
  const auto& pairs = m.pairs(e);
  return std::all_of(pairs.begin(), pairs.end(), [](const auto& p) { return p.first == p.second; });
}

/// Matching assignment built from one permutation per edge: color c at e.u is
/// matched to perm[c-1] at e.v, lists {1..k}.
inline MatchingAssignment permutation_matchings(const std::vector<Edge>& edges,
                                                const std::vector<std::vector<Color>>& perms) {
  MatchingAssignment m;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    MatchingAssignment::Pairs pairs;
    for (std::size_t c = 0; c < perms[i].size(); ++c) pairs.emplace_back(static_cast<Color>(c + 1), perms[i][c]);
    m.set(edges[i].u, edges[i].v, std::move(pairs));
  }
  return m;
}

}  // namespace dpcolor
