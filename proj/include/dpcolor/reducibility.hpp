#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "dpcolor/configuration.hpp"
#include "dpcolor/dp_cover.hpp"
#include "dpcolor/error.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/solver.hpp"

namespace dpcolor {

/// Outcome of the near-2-degenerate ordering check; `condition` is 0 when the
/// order passes, else the number (1-3) of the first violated condition.
struct OrderCheck {
  bool ok = false;
  int condition = 0;
  std::optional<VertexId> vertex;
  std::string message;

  explicit operator bool() const { return ok; }
};

/// Checks the three ordering conditions for H = the ordered vertices of g.
inline OrderCheck check_order(const Graph& g, const std::vector<VertexId>& order, int k) {
  std::set<VertexId> in_h(order.begin(), order.end());
  if (in_h.size() != order.size()) throw Error(ErrorCode::kInvalidArgument, "order repeats a vertex");
  for (VertexId v : order) {
    if (!g.has_vertex(v)) throw Error(ErrorCode::kInvalidArgument, "order names unknown vertex " + std::to_string(v));
  }
  if (order.empty()) throw Error(ErrorCode::kInvalidArgument, "order is empty");
  auto fail = [](int condition, VertexId v, std::string msg) { return OrderCheck{false, condition, v, std::move(msg)}; };

  const VertexId first = order.front();
  const VertexId last = order.back();
  if (order.size() < 2 || !g.has_edge(first, last)) return fail(1, first, "first and last vertices are not adjacent");
  for (VertexId w : g.neighbors(first)) {
    if (!in_h.count(w)) return fail(1, first, "first vertex has a neighbor outside H");
  }
  if (g.degree(last) > k) return fail(2, last, "last vertex has degree above k");
  const auto& last_nbrs = g.neighbors(last);
  if (std::all_of(last_nbrs.begin(), last_nbrs.end(), [&](VertexId w) { return in_h.count(w) != 0; })) {
    return fail(2, last, "last vertex has no neighbor outside H");
  }
  std::set<VertexId> earlier{first};
  for (std::size_t i = 1; i + 1 < order.size(); ++i) {
    const VertexId v = order[i];
    int seen = 0;
    for (VertexId w : g.neighbors(v)) seen += (earlier.count(w) || !in_h.count(w)) ? 1 : 0;
    if (seen > k - 1) return fail(3, v, "vertex has " + std::to_string(seen) + " earlier or outside neighbors");
    earlier.insert(v);
  }
  return OrderCheck{true, 0, std::nullopt, ""};
}

inline bool check_near_2_degenerate(const Graph& g, const std::vector<VertexId>& order, int k) {
  return check_order(g, order, k).ok;
}

namespace detail {

inline bool color_blocked(const CoverGraph& cov, const PartialColoring& a, int node) {
  for (int w : cov.cross(node)) {
    auto it = a.find(cov.node(w).vertex);
    if (it != a.end() && it->second == cov.node(w).color) return true;
  }
  return false;
}

inline std::optional<Color> first_free(const CoverGraph& cov, const PartialColoring& a, VertexId v) {
  const int i = cov.index_of(v);
  for (int n = cov.group_begin(i); n < cov.group_end(i); ++n) {
    if (!color_blocked(cov, a, n)) return cov.node(n).color;
  }
  return std::nullopt;
}

/// The greedy extension itself; the order is assumed to be valid.
inline std::optional<PartialColoring> greedy_color(const CoverGraph& cov, const std::vector<VertexId>& order,
                                                   const PartialColoring& phi) {
  PartialColoring a = phi;
  const VertexId first = order.front();
  const VertexId last = order.back();

  // colors of `last` already forbidden by its colored neighbors
  std::set<Color> forbidden;
  const int li = cov.index_of(last);
  for (int n = cov.group_begin(li); n < cov.group_end(li); ++n) {
    if (color_blocked(cov, a, n)) forbidden.insert(cov.node(n).color);
  }
  // give `first` a color whose partner at `last` is already forbidden or absent
  const MatchingAssignment::Pairs link = cov.matchings().oriented(first, last);
  std::optional<Color> pick;
  for (Color c : cov.lists().at(first)) {
    auto it = std::find_if(link.begin(), link.end(), [c](const auto& p) { return p.first == c; });
    if (it == link.end() || forbidden.count(it->second)) {
      pick = c;
      break;
    }
  }
  if (!pick) pick = cov.lists().at(first).front();
  a[first] = *pick;

  for (std::size_t i = 1; i < order.size(); ++i) {
    auto c = first_free(cov, a, order[i]);
    if (!c) return std::nullopt;
    a[order[i]] = *c;
  }
  return a;
}

}  // namespace detail

/// Extends a coloring of G - H to G along a near-2-degenerate order of H.
inline PartialColoring greedy_extend(const Graph& g, const std::vector<VertexId>& order, int k,
                                     const ListAssignment& l, const MatchingAssignment& m, const PartialColoring& phi) {
  OrderCheck check = check_order(g, order, k);
  if (!check) {
    throw Error(ErrorCode::kInvalidArgument,
                "ordering violates condition (" + std::to_string(check.condition) + "): " + check.message);
  }
  std::set<VertexId> in_h(order.begin(), order.end());
  for (VertexId v : g.vertices()) {
    if (!in_h.count(v) && !phi.count(v)) {
      throw Error(ErrorCode::kInvalidColoring, "vertex " + std::to_string(v) + " outside H is uncolored");
    }
  }
  for (const auto& [v, _] : phi) {
    if (in_h.count(v)) throw Error(ErrorCode::kInvalidColoring, "vertex " + std::to_string(v) + " of H is precolored");
  }
  CoverGraph cov = build_cover(g, l, m);
  ColoringCheck valid = check_coloring(cov, phi, false);
  if (!valid) throw Error(ErrorCode::kInvalidColoring, "coloring of G - H is invalid: " + valid.reason);
  auto out = detail::greedy_color(cov, order, phi);
  if (!out || !is_dp_coloring(cov, *out)) {
    throw Error(ErrorCode::kHypothesisViolated, "lemma hypothesis violated: no free color during greedy extension");
  }
  return *out;
}

struct ReducibilityOptions {
  int k = 3;
  /// Also run greedy_extend along the configuration's order on every instance.
  bool run_greedy = true;
  /// Straighten a spanning forest of the host first (without loss of generality).
  bool straighten_forest = true;
  /// When set, sample this many unreduced matching assignments instead.
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 20180101;
  std::uint64_t max_instances = 20'000'000;
  unsigned threads = 0;
};

struct ReducibilityReport {
  std::string name;
  int k = 3;
  std::optional<OrderCheck> order_check;
  /// Every (matching assignment, outside coloring) pair extends.
  bool reducible = true;
  std::uint64_t matching_assignments = 0;
  std::uint64_t instances = 0;
  std::uint64_t unsat = 0;
  std::uint64_t greedy_runs = 0;
  std::uint64_t greedy_failures = 0;
  std::vector<Edge> straightened;
  std::vector<Edge> enumerated;
  std::optional<MatchingAssignment> counterexample;
  std::optional<PartialColoring> outside_coloring;

  /// Greedy extension succeeded exactly where the oracle found a coloring.
  bool greedy_agrees() const { return greedy_runs > 0 && greedy_failures == 0 && unsat == 0; }
};

namespace detail {

/// Spanning forest of the host, pattern edges first.
inline std::vector<Edge> spanning_forest(const Graph& host, const std::set<VertexId>& inside) {
  std::vector<Edge> edges = host.edges();
  std::stable_partition(edges.begin(), edges.end(),
                        [&](const Edge& e) { return inside.count(e.u) && inside.count(e.v); });
  std::map<VertexId, VertexId> parent;
  auto find = [&](VertexId x) {
    while (parent.count(x) && parent[x] != x) x = parent[x];
    return x;
  };
  std::vector<Edge> forest;
  for (const Edge& e : edges) {
    parent.try_emplace(e.u, e.u);
    parent.try_emplace(e.v, e.v);
    VertexId a = find(e.u);
    VertexId b = find(e.v);
    if (a == b) continue;
    parent[a] = b;
    forest.push_back(e);
  }
  std::sort(forest.begin(), forest.end());
  return forest;
}

/// All valid colorings of `outside` (lists {1..k}), lexicographic.
inline std::vector<PartialColoring> outside_colorings(const CoverGraph& cov, const std::vector<VertexId>& outside,
                                                      int k) {
  std::vector<PartialColoring> out;
  PartialColoring phi;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == outside.size()) {
      out.push_back(phi);
      return;
    }
    for (Color c = 1; c <= k; ++c) {
      phi[outside[i]] = c;
      if (!color_blocked(cov, phi, *cov.node_of(outside[i], c))) self(self, i + 1);
    }
    phi.erase(outside[i]);
  };
  rec(rec, 0);
  return out;
}

}  // namespace detail

/// Runs the reducibility oracle (and, when the configuration carries an order,
/// the greedy extension) over every perfect-matching assignment with lists
/// {1..k} and every valid coloring of the vertices outside H.
inline ReducibilityReport verify_configuration(const Configuration& cfg, const ReducibilityOptions& opts = {}) {
  const int k = opts.k;
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  MaterializedConfiguration mat = materialize(cfg);
  const Graph& host = mat.host;
  const std::set<VertexId> inside(mat.inside.begin(), mat.inside.end());

  ReducibilityReport report;
  report.name = cfg.name;
  report.k = k;
  std::optional<std::vector<VertexId>> order = cfg.order;
  if (order) report.order_check = check_order(host, *order, k);
  const bool greedy = opts.run_greedy && order && report.order_check->ok;

  const std::vector<Edge> all_edges = host.edges();
  if (opts.straighten_forest && !opts.samples) report.straightened = detail::spanning_forest(host, inside);
  for (const Edge& e : all_edges) {
    if (!std::binary_search(report.straightened.begin(), report.straightened.end(), e)) report.enumerated.push_back(e);
  }
  const auto perms = detail::all_permutations(k);
  const std::uint64_t radix = perms.size();

  std::uint64_t total = 0;
  if (opts.samples) {
    total = *opts.samples;
  } else {
    total = detail::checked_power(radix, report.enumerated.size(), opts.max_instances);
    const std::uint64_t colorings =
        detail::checked_power(static_cast<std::uint64_t>(k), mat.outside.size(), opts.max_instances);
    if (total > opts.max_instances || colorings > opts.max_instances ||
        total > opts.max_instances / std::max<std::uint64_t>(colorings, 1)) {
      throw Error(ErrorCode::kSizeGuard, "configuration " + cfg.name + " exceeds the oracle size guard");
    }
  }

  auto decode = [&](std::uint64_t index) {
    std::vector<Edge> edges;
    std::vector<std::vector<Color>> chosen;
    for (const Edge& e : report.straightened) {
      edges.push_back(e);
      chosen.push_back(perms[0]);
    }
    if (opts.samples) {
      std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                        static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
      std::mt19937_64 rng(seq);
      std::uniform_int_distribution<std::uint64_t> pick(0, radix - 1);
      for (const Edge& e : report.enumerated) {
        edges.push_back(e);
        chosen.push_back(perms[pick(rng)]);
      }
    } else {
      for (const Edge& e : report.enumerated) {
        edges.push_back(e);
        chosen.push_back(perms[index % radix]);
        index /= radix;
      }
    }
    return permutation_matchings(edges, chosen);
  };

  const ListAssignment lists = ListAssignment::uniform(host.vertices(), k);
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total, 1)));
  const std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> first_failure{none};
  std::mutex mu;
  std::optional<PartialColoring> failing_phi;
  std::uint64_t instances = 0;
  std::uint64_t unsat = 0;
  std::uint64_t greedy_runs = 0;
  std::uint64_t greedy_failures = 0;
  std::uint64_t examined = 0;

  auto worker = [&](unsigned t) {
    std::uint64_t l_instances = 0, l_unsat = 0, l_runs = 0, l_fail = 0, l_examined = 0;
    std::optional<PartialColoring> l_phi;
    std::uint64_t l_first = none;
    for (std::uint64_t i = t; i < total; i += threads) {
      MatchingAssignment m = decode(i);
      CoverGraph cov = build_cover(host, lists, m);
      ++l_examined;
      for (const PartialColoring& phi : detail::outside_colorings(cov, mat.outside, k)) {
        ++l_instances;
        bool sat = solve(cov, phi).sat();
        if (!sat) {
          ++l_unsat;
          if (l_first == none) {
            l_first = i;
            l_phi = phi;
          }
        }
        if (greedy) {
          ++l_runs;
          auto ext = detail::greedy_color(cov, *order, phi);
          if (!ext || !is_dp_coloring(cov, *ext)) ++l_fail;
        }
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    instances += l_instances;
    unsat += l_unsat;
    greedy_runs += l_runs;
    greedy_failures += l_fail;
    examined += l_examined;
    if (l_first < first_failure.load()) {
      first_failure.store(l_first);
      failing_phi = l_phi;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
  worker(0);
  for (auto& th : pool) th.join();

  report.matching_assignments = examined;
  report.instances = instances;
  report.unsat = unsat;
  report.greedy_runs = greedy_runs;
  report.greedy_failures = greedy_failures;
  report.reducible = unsat == 0;
  if (first_failure.load() != none) {
    report.counterexample = decode(first_failure.load());
    report.outside_coloring = failing_phi;
  }
  return report;
}

/// Oracle verdict only: every outside coloring extends for every assignment.
inline bool brute_verify_reducible(const Configuration& cfg, int k) {
  ReducibilityOptions opts;
  opts.k = k;
  opts.run_greedy = false;
  return verify_configuration(cfg, opts).reducible;
}

}  // namespace dpcolor
