#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dpcolor/error.hpp"
#include "dpcolor/plane_graph.hpp"

namespace dpcolor {

enum class RuleSet { kSection2, kSection3 };

inline std::string to_string(RuleSet r) { return r == RuleSet::kSection2 ? "section-2" : "section-3"; }

inline RuleSet parse_rule_set(const std::string& s) {
  if (s == "section-2") return RuleSet::kSection2;
  if (s == "section-3") return RuleSet::kSection3;
  throw Error(ErrorCode::kInvalidArgument, "unknown rule set " + s + " (expected section-2 or section-3)");
}

/// A vertex or a face; the outer face is a face like any other.
struct ElementRef {
  bool is_face = false;
  int id = 0;

  static ElementRef vertex(VertexId v) { return {false, v}; }
  static ElementRef face(int f) { return {true, f}; }

  friend auto operator<=>(const ElementRef&, const ElementRef&) = default;
};

/// Doubled charge as a reduced fraction string: 3 -> "3/2", -4 -> "-2".
inline std::string format_half(long long doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

struct Transfer {
  ElementRef from;
  ElementRef to;
  long long amount2 = 0;
  std::string rule;
};

/// Exact charges in doubled units plus the log of every transfer.
class ChargeLedger {
 public:
  ChargeLedger() = default;
  ChargeLedger(std::map<VertexId, long long> vertex2, std::vector<long long> face2, int outer)
      : vertex_initial_(vertex2), vertex_(std::move(vertex2)), face_initial_(face2), face_(std::move(face2)),
        outer_(outer) {}

  int outer_face() const { return outer_; }
  ElementRef outer() const { return ElementRef::face(outer_); }
  std::size_t num_faces() const { return face_.size(); }
  const std::map<VertexId, long long>& vertex_charges2() const { return vertex_; }
  const std::vector<long long>& face_charges2() const { return face_; }

  long long charge2(ElementRef e) const { return e.is_face ? face_.at(idx(e)) : vertex_.at(e.id); }
  long long initial2(ElementRef e) const { return e.is_face ? face_initial_.at(idx(e)) : vertex_initial_.at(e.id); }

  long long total2() const {
    long long t = 0;
    for (const auto& [_, c] : vertex_) t += c;
    for (long long c : face_) t += c;
    return t;
  }

  std::vector<ElementRef> elements() const {
    std::vector<ElementRef> out;
    for (const auto& [v, _] : vertex_) out.push_back(ElementRef::vertex(v));
    for (std::size_t f = 0; f < face_.size(); ++f) out.push_back(ElementRef::face(static_cast<int>(f)));
    return out;
  }

  /// Moves charge; `listed` transfers must use one of the rule amounts.
  void transfer(ElementRef from, ElementRef to, long long amount2, const std::string& rule, bool listed = true) {
    if (amount2 <= 0) throw Error(ErrorCode::kInternal, "non-positive transfer under " + rule);
    static const std::set<long long> kAmounts{1, 2, 3, 4, 6};
    if (listed && !kAmounts.count(amount2)) {
      throw Error(ErrorCode::kInternal, "amount " + format_half(amount2) + " is not a rule amount (" + rule + ")");
    }
    if (from == to) throw Error(ErrorCode::kInternal, "self transfer under " + rule);
    const long long before = total2();
    ref(from) -= amount2;
    ref(to) += amount2;
    if (total2() != before) throw Error(ErrorCode::kInternal, "transfer did not conserve charge");
    log_.push_back({from, to, amount2, rule});
  }

  const std::vector<Transfer>& log() const { return log_; }

  /// Sum of logged amounts from `from` to `to` under rules with the given prefix.
  long long sent2(ElementRef from, ElementRef to, const std::string& rule_prefix = "") const {
    long long s = 0;
    for (const Transfer& t : log_) {
      if (t.from == from && t.to == to && t.rule.rfind(rule_prefix, 0) == 0) s += t.amount2;
    }
    return s;
  }

 private:
  static std::size_t idx(ElementRef e) { return static_cast<std::size_t>(e.id); }
  long long& ref(ElementRef e) { return e.is_face ? face_.at(idx(e)) : vertex_.at(e.id); }

  std::map<VertexId, long long> vertex_initial_;
  std::map<VertexId, long long> vertex_;
  std::vector<long long> face_initial_;
  std::vector<long long> face_;
  int outer_ = 0;
  std::vector<Transfer> log_;
};

struct VertexTags {
  int degree = 0;
  bool internal = false;
  bool light = false;
  std::vector<int> incident_faces;
  /// 3-faces not containing the vertex but containing a neighbor.
  std::vector<int> adjacent_triangles;
  std::vector<int> roof_of;
  std::vector<int> rich_to;

  friend bool operator==(const VertexTags&, const VertexTags&) = default;
};

struct FaceTags {
  int degree = 0;
  bool outer = false;
  bool internal = false;
  bool triangle = false;
  bool bad = false;
  /// A bad 6-face meeting C0 that is adjacent to an internal 3-face.
  bool special6 = false;
  /// A 7-face meeting C0 that is adjacent to two internal 3-faces.
  bool special7 = false;
  bool all_three = false;
  bool five_three_one_four = false;
  int heavy = 0;
  std::vector<VertexId> vertices;
  std::vector<int> adjacent_faces;
  std::vector<VertexId> base_of;

  friend bool operator==(const FaceTags&, const FaceTags&) = default;
};

struct StructuralTags {
  int outer = 0;
  std::map<VertexId, VertexTags> vertices;
  std::vector<FaceTags> faces;

  /// Membership in F_k: a k-face other than C0 sharing a vertex with C0.
  bool in_f(int f, int k) const {
    const FaceTags& t = faces.at(static_cast<std::size_t>(f));
    return !t.outer && !t.internal && t.degree == k;
  }
  bool is_triangle(int f) const { return faces.at(static_cast<std::size_t>(f)).triangle; }
  bool internal_triangle(int f) const {
    const FaceTags& t = faces.at(static_cast<std::size_t>(f));
    return t.triangle && t.internal;
  }
  bool is_333(int f) const {
    const FaceTags& t = faces.at(static_cast<std::size_t>(f));
    return t.triangle && t.all_three;
  }

  friend bool operator==(const StructuralTags&, const StructuralTags&) = default;
};

namespace detail {

/// Embedding plus the id of the face bounded by `c0`.
struct OuterContext {
  Embedding emb;
  int outer = 0;
  std::set<VertexId> c0;
};

inline OuterContext resolve_outer(const PlaneGraph& g, const std::vector<VertexId>& c0) {
  OuterContext ctx;
  ctx.emb = trace_embedding(g);
  auto f = find_face(ctx.emb, c0);
  if (!f) throw Error(ErrorCode::kNotOuterFace, "C0 is not a face boundary");
  if (g.outer() && !same_cycle(*g.outer(), c0)) {
    throw Error(ErrorCode::kNotOuterFace, "C0 differs from the designated outer face");
  }
  ctx.outer = *f;
  ctx.c0.insert(c0.begin(), c0.end());
  return ctx;
}

inline std::vector<VertexId> designated_outer(const PlaneGraph& g) {
  if (!g.outer()) throw Error(ErrorCode::kNotOuterFace, "graph has no designated outer face");
  return *g.outer();
}

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace detail

inline ChargeLedger initial_charges(const PlaneGraph& g, const std::vector<VertexId>& c0) {
  const detail::OuterContext ctx = detail::resolve_outer(g, c0);
  std::map<VertexId, long long> v2;
  for (VertexId v : g.vertices()) v2[v] = 2 * (2LL * g.degree(v) - 6);
  std::vector<long long> f2;
  for (const Face& f : ctx.emb.faces) {
    f2.push_back(f.id == ctx.outer ? 2LL * (f.degree() + 6) : 2LL * (f.degree() - 6));
  }
  ChargeLedger ledger(std::move(v2), std::move(f2), ctx.outer);
  if (ledger.total2() != 0) {
    throw Error(ErrorCode::kInternal, "initial charges sum to " + format_half(ledger.total2()));
  }
  return ledger;
}

inline ChargeLedger initial_charges(const PlaneGraph& g) { return initial_charges(g, detail::designated_outer(g)); }

inline StructuralTags compute_tags(const PlaneGraph& g, const std::vector<VertexId>& c0) {
  const detail::OuterContext ctx = detail::resolve_outer(g, c0);
  const Graph& graph = g.graph();
  StructuralTags tags;
  tags.outer = ctx.outer;
  for (const Face& f : ctx.emb.faces) {
    FaceTags t;
    t.degree = f.degree();
    t.outer = f.id == ctx.outer;
    t.vertices = f.walk;
    detail::sort_unique(t.vertices);
    t.internal = !t.outer && std::none_of(t.vertices.begin(), t.vertices.end(),
                                          [&](VertexId v) { return ctx.c0.count(v) != 0; });
    t.triangle = !t.outer && t.degree == 3;
    int threes = 0;
    int fours = 0;
    for (VertexId v : f.walk) {
      const int d = graph.degree(v);
      threes += d == 3;
      fours += d == 4;
      t.heavy += d >= 4;
    }
    t.all_three = threes == t.degree;
    t.five_three_one_four = t.degree == 6 && threes == 5 && fours == 1;
    for (const Edge& e : f.edges()) {
      auto [a, b] = ctx.emb.sides(e);
      const int other = a == f.id ? b : a;
      if (other != f.id) t.adjacent_faces.push_back(other);
    }
    detail::sort_unique(t.adjacent_faces);
    tags.faces.push_back(std::move(t));
  }

  for (VertexId v : graph.vertices()) {
    VertexTags& vt = tags.vertices[v];
    vt.degree = graph.degree(v);
    vt.internal = !ctx.c0.count(v);
  }
  for (const FaceTags& ft : tags.faces) {
    const int id = static_cast<int>(&ft - tags.faces.data());
    for (VertexId v : ft.vertices) {
      tags.vertices[v].incident_faces.push_back(id);
      if (ft.triangle) tags.vertices[v].light = true;
    }
    if (!ft.triangle) continue;
    std::set<VertexId> adj;
    for (VertexId u : ft.vertices) {
      for (VertexId w : graph.neighbors(u)) adj.insert(w);
    }
    for (VertexId w : adj) {
      if (!std::binary_search(ft.vertices.begin(), ft.vertices.end(), w)) tags.vertices[w].adjacent_triangles.push_back(id);
    }
  }

  for (std::size_t f = 0; f < tags.faces.size(); ++f) {
    FaceTags& ft = tags.faces[f];
    int adjacent_triangles = 0;
    int adjacent_internal_triangles = 0;
    for (int h : ft.adjacent_faces) {
      adjacent_triangles += tags.is_triangle(h);
      adjacent_internal_triangles += tags.internal_triangle(h);
    }
    ft.bad = !ft.outer && ft.degree == 6 && adjacent_triangles > 0;
    ft.special6 = ft.bad && !ft.internal && adjacent_internal_triangles >= 1;
    ft.special7 = !ft.outer && !ft.internal && ft.degree == 7 && adjacent_internal_triangles >= 2;
    // roofs of (3,3,3,3,3,3)-faces
    if (!ft.outer && ft.degree == 6 && ft.all_three && ft.vertices.size() == 6) {
      for (int h : ft.adjacent_faces) {
        if (!tags.is_triangle(h)) continue;
        for (VertexId r : tags.faces[static_cast<std::size_t>(h)].vertices) {
          if (std::binary_search(ft.vertices.begin(), ft.vertices.end(), r)) continue;
          ft.base_of.push_back(r);
          tags.vertices[r].roof_of.push_back(static_cast<int>(f));
        }
      }
      detail::sort_unique(ft.base_of);
    }
  }

  // rich 4-vertices: on a 7+-face, not on a 3-face adjacent to it
  for (std::size_t f = 0; f < tags.faces.size(); ++f) {
    const FaceTags& ft = tags.faces[f];
    if (ft.outer || ft.degree < 7) continue;
    for (VertexId v : ft.vertices) {
      VertexTags& vt = tags.vertices[v];
      if (vt.degree != 4) continue;
      const bool on_adjacent_triangle = std::any_of(vt.incident_faces.begin(), vt.incident_faces.end(), [&](int h) {
        return tags.is_triangle(h) && std::binary_search(ft.adjacent_faces.begin(), ft.adjacent_faces.end(), h);
      });
      if (!on_adjacent_triangle) vt.rich_to.push_back(static_cast<int>(f));
    }
  }
  for (auto& [_, vt] : tags.vertices) {
    detail::sort_unique(vt.incident_faces);
    detail::sort_unique(vt.adjacent_triangles);
    detail::sort_unique(vt.roof_of);
    detail::sort_unique(vt.rich_to);
  }
  return tags;
}

inline StructuralTags compute_tags(const PlaneGraph& g) { return compute_tags(g, detail::designated_outer(g)); }

/// Ambiguities met while firing rules on graphs outside the hypotheses.
struct RuleNote {
  std::string rule;
  ElementRef element;
  std::string message;
};

namespace detail {

inline bool shares_3_4plus_edge(const PlaneGraph& g, const Embedding& emb, int f, int t) {
  for (const Edge& e : emb.faces[static_cast<std::size_t>(t)].edges()) {
    auto [a, b] = emb.sides(e);
    if (a != f && b != f) continue;
    const int du = g.degree(e.u);
    const int dv = g.degree(e.v);
    if ((du == 3 && dv >= 4) || (dv == 3 && du >= 4)) return true;
  }
  return false;
}

inline void transfer_boundary(ChargeLedger& ledger, const StructuralTags& tags, const std::string& rule) {
  const ElementRef c0 = ledger.outer();
  for (VertexId v : tags.faces.at(static_cast<std::size_t>(tags.outer)).vertices) {
    const long long mu = ledger.initial2(ElementRef::vertex(v));
    if (mu > 0) ledger.transfer(ElementRef::vertex(v), c0, mu, rule, false);
    if (mu < 0) ledger.transfer(c0, ElementRef::vertex(v), -mu, rule, false);
  }
}

inline void apply_section2(ChargeLedger& ledger, const PlaneGraph& g, const Embedding& emb, const StructuralTags& tags,
                           std::vector<RuleNote>& notes) {
  const ElementRef c0 = ledger.outer();
  // R1
  for (const auto& [v, vt] : tags.vertices) {
    if (!vt.internal || vt.degree < 4) continue;
    const ElementRef me = ElementRef::vertex(v);
    for (int f : vt.incident_faces) {
      if (tags.is_triangle(f)) ledger.transfer(me, ElementRef::face(f), 3, "R1a");
    }
    if (vt.light) {
      std::vector<int> six_four;
      for (int f : vt.incident_faces) {
        if (tags.faces[static_cast<std::size_t>(f)].five_three_one_four) six_four.push_back(f);
      }
      if (!vt.roof_of.empty()) {
        ledger.transfer(me, ElementRef::face(vt.roof_of.front()), 1, "R1b");
        if (vt.roof_of.size() > 1 || !six_four.empty()) {
          notes.push_back({"R1b", me, "roof with more than one candidate face; paid the lowest base only"});
        }
      } else if (!six_four.empty()) {
        ledger.transfer(me, ElementRef::face(six_four.front()), 1, "R1b");
        if (six_four.size() > 1) notes.push_back({"R1b", me, "on several (3,3,3,3,3,4)-faces; paid the lowest only"});
      }
    }
    for (int t : vt.adjacent_triangles) {
      if (tags.is_333(t)) ledger.transfer(me, ElementRef::face(t), vt.degree == 4 ? 2 : 4, "R1c");
    }
    if (vt.degree >= 5 || !vt.light) {
      for (int f : vt.incident_faces) {
        const FaceTags& ft = tags.faces[static_cast<std::size_t>(f)];
        if (ft.outer || ft.degree != 6) continue;
        const bool next_to_adjacent = std::any_of(vt.adjacent_triangles.begin(), vt.adjacent_triangles.end(), [&](int t) {
          return std::binary_search(ft.adjacent_faces.begin(), ft.adjacent_faces.end(), t);
        });
        if (!next_to_adjacent) ledger.transfer(me, ElementRef::face(f), 1, "R1d");
      }
    }
  }
  // R2
  for (std::size_t f = 0; f < tags.faces.size(); ++f) {
    const FaceTags& ft = tags.faces[f];
    if (ft.outer) continue;
    const ElementRef me = ElementRef::face(static_cast<int>(f));
    if (ft.degree >= 7 || (ft.degree == 6 && !ft.internal)) {
      for (int t : ft.adjacent_faces) {
        if (tags.internal_triangle(t)) ledger.transfer(me, ElementRef::face(t), 2, "R2a");
      }
      const long long rest = ledger.charge2(me);
      if (rest > 0) ledger.transfer(me, c0, rest, "R2c", false);
    } else if (ft.degree == 6 && ft.internal) {
      const bool free_heavy = std::any_of(ft.vertices.begin(), ft.vertices.end(), [&](VertexId v) {
        const VertexTags& vt = tags.vertices.at(v);
        return vt.degree >= 4 && std::none_of(vt.adjacent_triangles.begin(), vt.adjacent_triangles.end(),
                                              [&](int t) { return tags.is_333(t); });
      });
      for (int t : ft.adjacent_faces) {
        if (!tags.internal_triangle(t)) continue;
        if (shares_3_4plus_edge(g, emb, static_cast<int>(f), t) || free_heavy || ft.all_three) {
          ledger.transfer(me, ElementRef::face(t), 1, "R2b");
        }
      }
    }
  }
  // R3
  transfer_boundary(ledger, tags, "R3");
  for (std::size_t f = 0; f < tags.faces.size(); ++f) {
    if (tags.in_f(static_cast<int>(f), 3)) ledger.transfer(c0, ElementRef::face(static_cast<int>(f)), 6, "R3");
  }
  for (std::size_t f = 0; f < tags.faces.size(); ++f) {
    if (tags.faces[f].special6) ledger.transfer(c0, ElementRef::face(static_cast<int>(f)), 2, "R3");
  }
}

inline void apply_section3(ChargeLedger& ledger, const Embedding& emb, const StructuralTags& tags) {
  const ElementRef c0 = ledger.outer();
  // R1
  for (std::size_t t = 0; t < tags.faces.size(); ++t) {
    const FaceTags& tt = tags.faces[t];
    if (!tt.triangle || !tt.internal) continue;
    const ElementRef me = ElementRef::face(static_cast<int>(t));
    int heavy = 0;
    for (VertexId v : tt.vertices) {
      if (tags.vertices.at(v).degree >= 4) {
        ledger.transfer(ElementRef::vertex(v), me, 3, "R1");
        ++heavy;
      }
    }
    const long long need2 = std::max(0, 6 - 3 * heavy);
    if (need2 == 0) continue;
    // one share per edge, from the face across it
    for (const Edge& e : emb.faces[t].edges()) {
      auto [a, b] = emb.sides(e);
      const int across = a == me.id ? b : a;
      if (across == me.id) throw Error(ErrorCode::kInternal, "3-face bounded by a bridge");
      ledger.transfer(ElementRef::face(across), me, need2 / 3, "R1");
    }
  }
  // R2
  for (std::size_t f = 0; f < tags.faces.size(); ++f) {
    const FaceTags& ft = tags.faces[f];
    if (!ft.internal || ft.degree != 7) continue;
    for (VertexId v : ft.vertices) {
      const VertexTags& vt = tags.vertices.at(v);
      const bool rich = vt.degree == 4 && std::binary_search(vt.rich_to.begin(), vt.rich_to.end(), static_cast<int>(f));
      if (rich || vt.degree >= 5) ledger.transfer(ElementRef::vertex(v), ElementRef::face(static_cast<int>(f)), 1, "R2");
    }
  }
  // R3
  for (std::size_t f = 0; f < tags.faces.size(); ++f) {
    const FaceTags& ft = tags.faces[f];
    if (ft.outer || ft.degree < 7) continue;
    const ElementRef me = ElementRef::face(static_cast<int>(f));
    const long long rest = ledger.charge2(me);
    if (rest > 0) ledger.transfer(me, c0, rest, "R3", false);
  }
  // R4
  transfer_boundary(ledger, tags, "R4");
  for (std::size_t f = 0; f < tags.faces.size(); ++f) {
    if (tags.in_f(static_cast<int>(f), 3)) ledger.transfer(c0, ElementRef::face(static_cast<int>(f)), 6, "R4");
  }
  for (std::size_t f = 0; f < tags.faces.size(); ++f) {
    if (tags.faces[f].special7) ledger.transfer(c0, ElementRef::face(static_cast<int>(f)), 2, "R4");
  }
}

}  // namespace detail

/// Runs one rule set on a freshly initialized ledger. Ambiguous firings on
/// graphs outside the hypotheses are resolved deterministically and noted.
inline ChargeLedger apply_rules(ChargeLedger ledger, const PlaneGraph& g, const std::vector<VertexId>& c0,
                                const StructuralTags& tags, RuleSet rules, std::vector<RuleNote>* notes = nullptr) {
  const detail::OuterContext ctx = detail::resolve_outer(g, c0);
  if (!ledger.log().empty()) throw Error(ErrorCode::kInvalidArgument, "rules need a freshly initialized ledger");
  if (ctx.outer != ledger.outer_face() || ledger.num_faces() != ctx.emb.faces.size()) {
    throw Error(ErrorCode::kInvalidArgument, "ledger does not belong to this graph");
  }
  if (!(tags == compute_tags(g, c0))) throw Error(ErrorCode::kInternal, "structural tags are inconsistent with the graph");
  std::vector<RuleNote> local;
  if (rules == RuleSet::kSection2) {
    detail::apply_section2(ledger, g, ctx.emb, tags, local);
  } else {
    detail::apply_section3(ledger, ctx.emb, tags);
  }
  if (ledger.total2() != 0) throw Error(ErrorCode::kInternal, "charge not conserved");
  if (notes) notes->insert(notes->end(), local.begin(), local.end());
  return ledger;
}

/// Lower bound on what a 7+-face adjacent to C0 passes on, given its longest
/// charge-friendly path.
struct FriendlyPathCheck {
  int face = 0;
  int degree = 0;
  int path_vertices = 0;
  long long bound2 = 0;
  long long given2 = 0;

  bool holds() const { return given2 >= bound2; }
};

struct OuterFaceAudit {
  RuleSet rules = RuleSet::kSection2;
  int d_c0 = 0;
  int f3 = 0;
  /// Special 6-faces under section-2, special 7-faces under section-3.
  int f_special = 0;
  int e_c0 = 0;
  int e_prime = 0;
  long long vertex_sum2 = 0;
  long long outflow2 = 0;
  long long x2 = 0;
  long long mu_star2 = 0;
  std::vector<FriendlyPathCheck> friendly_paths;

  bool bound_holds() const {
    return std::all_of(friendly_paths.begin(), friendly_paths.end(), [](const auto& c) { return c.holds(); });
  }
};

inline OuterFaceAudit outer_audit(const ChargeLedger& ledger, const PlaneGraph& g, const std::vector<VertexId>& c0,
                                  const StructuralTags& tags, RuleSet rules) {
  const detail::OuterContext ctx = detail::resolve_outer(g, c0);
  const Graph& graph = g.graph();
  const ElementRef outer = ledger.outer();
  const std::string boundary_rule = rules == RuleSet::kSection2 ? "R3" : "R4";
  const std::string remainder_rule = rules == RuleSet::kSection2 ? "R2c" : "R3";

  OuterFaceAudit a;
  a.rules = rules;
  a.d_c0 = static_cast<int>(c0.size());
  for (std::size_t f = 0; f < tags.faces.size(); ++f) {
    a.f3 += tags.in_f(static_cast<int>(f), 3);
    a.f_special += rules == RuleSet::kSection2 ? tags.faces[f].special6 : tags.faces[f].special7;
  }
  for (const Edge& e : graph.edges()) {
    if ((ctx.c0.count(e.u) != 0) == (ctx.c0.count(e.v) != 0)) continue;
    ++a.e_c0;
    auto [s, t] = ctx.emb.sides(e);
    if (!tags.is_triangle(s) && !tags.is_triangle(t)) ++a.e_prime;
  }
  for (VertexId v : c0) a.vertex_sum2 += 2 * (2LL * graph.degree(v) - 6);
  for (const Transfer& t : ledger.log()) {
    if (t.from == outer && t.to.is_face) a.outflow2 += t.amount2;
    if (t.to == outer && t.from.is_face) {
      if (t.rule != remainder_rule) throw Error(ErrorCode::kInternal, "C0 received face charge under " + t.rule);
      a.x2 += t.amount2;
    }
  }
  a.mu_star2 = ledger.charge2(outer);
  const long long expected = 2LL * (a.d_c0 + 6) + a.vertex_sum2 - a.outflow2 + a.x2;
  if (expected != a.mu_star2 || a.outflow2 != 6LL * a.f3 + 2LL * a.f_special) {
    throw Error(ErrorCode::kInternal, "outer-face identity fails: ledger " + format_half(a.mu_star2) + ", formula " +
                                          format_half(expected));
  }

  if (rules == RuleSet::kSection3) {
    for (std::size_t f = 0; f < tags.faces.size(); ++f) {
      const FaceTags& ft = tags.faces[f];
      if (ft.outer || ft.degree < 7) continue;
      const Face& face = ctx.emb.faces[f];
      const ElementRef me = ElementRef::face(static_cast<int>(f));
      bool touches = false;
      for (const Edge& e : face.edges()) {
        auto [s, t] = ctx.emb.sides(e);
        touches = touches || s == ledger.outer_face() || t == ledger.outer_face();
      }
      if (!touches) continue;
      // vertices on triangles that drew charge from this face
      std::set<VertexId> blocked;
      for (const Transfer& t : ledger.log()) {
        if (t.from == me && t.rule == "R1") {
          for (VertexId v : tags.faces.at(static_cast<std::size_t>(t.to.id)).vertices) blocked.insert(v);
        }
      }
      const int n = face.degree();
      int best = 0;
      if (blocked.empty()) {
        best = n;
      } else {
        int run = 0;
        for (int i = 0; i < 2 * n; ++i) {
          run = blocked.count(face.walk[static_cast<std::size_t>(i % n)]) ? 0 : run + 1;
          best = std::max(best, std::min(run, n));
        }
      }
      FriendlyPathCheck c;
      c.face = static_cast<int>(f);
      c.degree = n;
      c.path_vertices = best;
      const int slack = n + 1 - best;
      const int floor_div = slack >= 0 ? slack / 3 : -((-slack + 2) / 3);
      c.bound2 = 2LL * (n - 6 - floor_div);
      c.given2 = ledger.sent2(me, outer, "R3");
      a.friendly_paths.push_back(c);
    }
  }
  return a;
}

struct ChargeViolation {
  ElementRef element;
  long long charge2 = 0;
  std::string structure;
};

struct NonnegativityReport {
  std::vector<ChargeViolation> negative;
  long long c0_charge2 = 0;
  long long total2 = 0;

  bool c0_positive() const { return c0_charge2 > 0; }
  bool clean() const { return negative.empty() && c0_positive(); }
};

inline std::string describe_element(const StructuralTags& tags, ElementRef e) {
  if (!e.is_face) {
    const VertexTags& vt = tags.vertices.at(e.id);
    return "vertex of degree " + std::to_string(vt.degree) + (vt.internal ? ", internal" : ", on C0") +
           (vt.light ? ", light" : "");
  }
  const FaceTags& ft = tags.faces.at(static_cast<std::size_t>(e.id));
  if (ft.outer) return "outer face C0";
  std::string degrees;
  for (VertexId v : ft.vertices) degrees += (degrees.empty() ? "" : ",") + std::to_string(tags.vertices.at(v).degree);
  return std::to_string(ft.degree) + "-face (" + degrees + ")" + (ft.internal ? ", internal" : ", meets C0") +
         (ft.bad ? ", bad" : "");
}

inline NonnegativityReport audit_nonnegativity(const ChargeLedger& ledger, const StructuralTags& tags) {
  NonnegativityReport r;
  for (ElementRef e : ledger.elements()) {
    if (e == ledger.outer()) continue;
    const long long c = ledger.charge2(e);
    if (c < 0) r.negative.push_back({e, c, describe_element(tags, e)});
  }
  r.c0_charge2 = ledger.charge2(ledger.outer());
  r.total2 = ledger.total2();
  return r;
}

/// Everything one discharging run produces.
struct DischargeResult {
  RuleSet rules = RuleSet::kSection2;
  StructuralTags tags;
  ChargeLedger ledger;
  OuterFaceAudit audit;
  NonnegativityReport nonnegativity;
  std::vector<RuleNote> notes;
};

inline DischargeResult discharge(const PlaneGraph& g, const std::vector<VertexId>& c0, RuleSet rules) {
  DischargeResult r;
  r.rules = rules;
  r.tags = compute_tags(g, c0);
  r.ledger = apply_rules(initial_charges(g, c0), g, c0, r.tags, rules, &r.notes);
  r.audit = outer_audit(r.ledger, g, c0, r.tags, rules);
  r.nonnegativity = audit_nonnegativity(r.ledger, r.tags);
  return r;
}

inline DischargeResult discharge(const PlaneGraph& g, RuleSet rules) {
  return discharge(g, detail::designated_outer(g), rules);
}

}  // namespace dpcolor
