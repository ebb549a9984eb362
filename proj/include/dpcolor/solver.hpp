#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "dpcolor/dp_cover.hpp"
#include "dpcolor/error.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/plane_graph.hpp"

namespace dpcolor {

enum class SolveStatus { kSat, kUnsat };

struct SolveStats {
  std::uint64_t nodes_expanded = 0;
  double seconds = 0.0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::kUnsat;
  PartialColoring witness;
  SolveStats stats;

  bool sat() const { return status == SolveStatus::kSat; }
};

namespace detail {

// Minimum-remaining-values search with forward checking over the cover graph.
class CoverSearch {
 public:
  explicit CoverSearch(const CoverGraph& cov)
      : cov_(cov),
        chosen_(cov.num_host_vertices(), -1),
        blocked_(cov.num_nodes(), 0),
        available_(cov.num_host_vertices(), 0) {
    for (std::size_t i = 0; i < cov.num_host_vertices(); ++i) {
      available_[i] = static_cast<int>(cov.group_size(static_cast<int>(i)));
    }
  }

  void pin(int node) {
    chosen_[static_cast<std::size_t>(cov_.owner(node))] = node;
    ++assigned_;
    block_neighbors(node, +1);
  }

  bool run() { return descend(); }

  std::uint64_t nodes() const { return expanded_; }

  PartialColoring coloring() const {
    PartialColoring out;
    for (int n : chosen_) {
      if (n >= 0) out[cov_.node(n).vertex] = cov_.node(n).color;
    }
    return out;
  }

 private:
  void block_neighbors(int node, int delta) {
    for (int w : cov_.cross(node)) {
      auto& b = blocked_[static_cast<std::size_t>(w)];
      if (delta > 0) {
        if (b++ == 0) --available_[static_cast<std::size_t>(cov_.owner(w))];
      } else {
        if (--b == 0) ++available_[static_cast<std::size_t>(cov_.owner(w))];
      }
    }
  }

  bool descend() {
    if (assigned_ == chosen_.size()) return true;
    int pick = -1;
    for (std::size_t i = 0; i < chosen_.size(); ++i) {
      if (chosen_[i] >= 0) continue;
      if (available_[i] == 0) return false;
      if (pick < 0 || available_[i] < available_[static_cast<std::size_t>(pick)]) pick = static_cast<int>(i);
    }
    for (int n = cov_.group_begin(pick); n < cov_.group_end(pick); ++n) {
      if (blocked_[static_cast<std::size_t>(n)] > 0) continue;
      ++expanded_;
      chosen_[static_cast<std::size_t>(pick)] = n;
      ++assigned_;
      block_neighbors(n, +1);
      if (descend()) return true;
      block_neighbors(n, -1);
      --assigned_;
      chosen_[static_cast<std::size_t>(pick)] = -1;
    }
    return false;
  }

  const CoverGraph& cov_;
  std::vector<int> chosen_;
  std::vector<int> blocked_;
  std::vector<int> available_;
  std::size_t assigned_ = 0;
  std::uint64_t expanded_ = 0;
};

}  // namespace detail

/// Exact search for a DP-coloring extending `pinned`. Deterministic: vertices
/// by fewest remaining colors (ties to the smallest id), colors ascending.
inline SolveResult solve(const CoverGraph& cov, const PartialColoring& pinned = {}) {
  auto start = std::chrono::steady_clock::now();
  ColoringCheck check = check_coloring(cov, pinned, false);
  if (!check) throw Error(ErrorCode::kInvalidColoring, "pinned coloring is invalid: " + check.reason);
  detail::CoverSearch search(cov);
  for (const auto& [v, c] : pinned) search.pin(*cov.node_of(v, c));
  SolveResult result;
  if (search.run()) {
    result.status = SolveStatus::kSat;
    result.witness = search.coloring();
  }
  result.stats.nodes_expanded = search.nodes();
  result.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

/// Decides whether a coloring `phi` of the cycle `c0` extends to all of g.
inline SolveResult extend(const Graph& g, const ListAssignment& l, const MatchingAssignment& m, const CycleRef& c0,
                          const PartialColoring& phi) {
  validate_cycle(g, c0.vertices);
  std::set<VertexId> cycle(c0.vertices.begin(), c0.vertices.end());
  for (const auto& [v, _] : phi) {
    if (!cycle.count(v)) throw Error(ErrorCode::kInvalidColoring, "precoloring colors a vertex off the cycle");
  }
  if (phi.size() != cycle.size()) throw Error(ErrorCode::kInvalidColoring, "precoloring must color every cycle vertex");
  CoverGraph cov = build_cover(g, l, m);
  ColoringCheck check = check_coloring(cov, phi, false);
  if (!check) throw Error(ErrorCode::kInvalidColoring, "precoloring is invalid on the cycle: " + check.reason);
  return solve(cov, phi);
}

enum class Verdict { kColorable, kCounterexample };

struct CertifyOptions {
  /// Sampling mode: number of random matching assignments to test.
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 20180101;
  /// Fix the first edge's matching to the identity.
  bool fix_first_edge = false;
  /// Exhaustive mode refuses instance spaces larger than this.
  std::uint64_t max_instances = 20'000'000;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct CertifyResult {
  Verdict verdict = Verdict::kColorable;
  std::optional<MatchingAssignment> counterexample;
  std::optional<PartialColoring> precoloring;
  std::uint64_t examined = 0;
  bool sampled = false;
  std::uint64_t solver_nodes = 0;

  bool colorable() const { return verdict == Verdict::kColorable; }
};

namespace detail {

inline std::vector<std::vector<Color>> all_permutations(int k) {
  std::vector<Color> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<Color>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > cap / std::max<std::uint64_t>(base, 1)) return cap + 1;
    r *= base;
  }
  return r;
}

struct InstanceOutcome {
  bool ok = true;
  std::optional<PartialColoring> failing_precoloring;
  std::uint64_t nodes = 0;
};

/// Runs `check(matchings)` over the perfect-matching assignments of g, either
/// exhaustively or by sampling. Reports the first failing assignment (lowest
/// index in exhaustive mode) deterministically.
template <typename Check>
CertifyResult certify_over_assignments(const Graph& g, int k, const CertifyOptions& opts, Check check) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  const std::vector<Edge> edges = g.edges();
  const auto perms = all_permutations(k);
  const std::uint64_t radix = perms.size();
  const std::size_t free_edges = (opts.fix_first_edge && !edges.empty()) ? edges.size() - 1 : edges.size();

  CertifyResult result;
  std::uint64_t total = 0;
  if (opts.samples) {
    total = *opts.samples;
    result.sampled = true;
  } else {
    total = checked_power(radix, free_edges, opts.max_instances);
    if (total > opts.max_instances) {
      throw Error(ErrorCode::kSizeGuard, "exhaustive enumeration exceeds " + std::to_string(opts.max_instances) +
                                             " matching assignments; use sampling mode");
    }
  }

  auto decode = [&](std::uint64_t index) {
    std::vector<std::vector<Color>> chosen(edges.size());
    if (opts.samples) {
      std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                        static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
      std::mt19937_64 rng(seq);
      std::uniform_int_distribution<std::uint64_t> pick(0, radix - 1);
      for (std::size_t e = 0; e < edges.size(); ++e) chosen[e] = perms[pick(rng)];
      if (opts.fix_first_edge && !edges.empty()) chosen[0] = perms[0];
    } else {
      std::size_t e = 0;
      if (opts.fix_first_edge && !edges.empty()) chosen[e++] = perms[0];
      for (; e < edges.size(); ++e) {
        chosen[e] = perms[index % radix];
        index /= radix;
      }
    }
    return permutation_matchings(edges, chosen);
  };

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total, 1)));
  std::atomic<std::uint64_t> first_failure{std::numeric_limits<std::uint64_t>::max()};
  std::atomic<std::uint64_t> examined{0};
  std::atomic<std::uint64_t> nodes{0};
  std::mutex mu;
  std::optional<PartialColoring> failing_pre;

  auto worker = [&](unsigned t) {
    std::uint64_t local_examined = 0;
    std::uint64_t local_nodes = 0;
    for (std::uint64_t i = t; i < total; i += threads) {
      if (i > first_failure.load(std::memory_order_relaxed)) break;
      MatchingAssignment m = decode(i);
      InstanceOutcome out = check(m);
      ++local_examined;
      local_nodes += out.nodes;
      if (!out.ok) {
        std::lock_guard<std::mutex> lock(mu);
        if (i < first_failure.load()) {
          first_failure.store(i);
          failing_pre = out.failing_precoloring;
        }
        break;
      }
    }
    examined += local_examined;
    nodes += local_nodes;
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
  worker(0);
  for (auto& th : pool) th.join();

  result.examined = examined.load();
  result.solver_nodes = nodes.load();
  if (first_failure.load() != std::numeric_limits<std::uint64_t>::max()) {
    // workers race past the failure; report the deterministic prefix length
    result.examined = first_failure.load() + 1;
    result.verdict = Verdict::kCounterexample;
    result.counterexample = decode(first_failure.load());
    result.precoloring = failing_pre;
  }
  return result;
}

}  // namespace detail

/// DP-k-colorability over all matching assignments with lists {1..k} and
/// perfect matchings on every edge (sampling mode when opts.samples is set).
inline CertifyResult certify_dp_k(const Graph& g, int k, const CertifyOptions& opts = {}) {
  const ListAssignment lists = ListAssignment::uniform(g.vertices(), k);
  return detail::certify_over_assignments(g, k, opts, [&](const MatchingAssignment& m) {
    CoverGraph cov = build_cover(g, lists, m);
    SolveResult r = solve(cov);
    return detail::InstanceOutcome{r.sat(), std::nullopt, r.stats.nodes_expanded};
  });
}

/// All valid colorings of the cycle under the cover, in lexicographic order.
inline std::vector<PartialColoring> cycle_colorings(const CoverGraph& cov, const CycleRef& c0) {
  std::vector<PartialColoring> out;
  PartialColoring phi;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == c0.length()) {
      out.push_back(phi);
      return;
    }
    VertexId v = c0.vertices[i];
    for (Color c : cov.lists().at(v)) {
      phi[v] = c;
      if (check_coloring(cov, phi, false)) self(self, i + 1);
    }
    phi.erase(v);
  };
  rec(rec, 0);
  return out;
}

/// Every valid precoloring of c0 extends, for every enumerated assignment.
inline CertifyResult certify_extension(const Graph& g, const CycleRef& c0, int k, const CertifyOptions& opts = {}) {
  validate_cycle(g, c0.vertices);
  const ListAssignment lists = ListAssignment::uniform(g.vertices(), k);
  return detail::certify_over_assignments(g, k, opts, [&](const MatchingAssignment& m) {
    CoverGraph cov = build_cover(g, lists, m);
    detail::InstanceOutcome out;
    for (const PartialColoring& phi : cycle_colorings(cov, c0)) {
      SolveResult r = solve(cov, phi);
      out.nodes += r.stats.nodes_expanded;
      if (!r.sat()) {
        out.ok = false;
        out.failing_precoloring = phi;
        break;
      }
    }
    return out;
  });
}

}  // namespace dpcolor
