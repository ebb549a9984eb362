#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "dpcolor/plane_graph.hpp"

namespace dpcolor::testing {

using Points = std::map<VertexId, std::pair<double, double>>;

inline std::pair<double, double> polar(double radius, double angle) {
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

/// C_n drawn on a circle; vertices 0..n-1, outer face designated.
inline PlaneGraph cycle_graph(int n, bool designate_outer = true) {
  Points pts;
  std::vector<Edge> edges;
  std::vector<VertexId> cyc;
  for (int i = 0; i < n; ++i) {
    pts[i] = polar(10.0, std::numbers::pi / 2 - 2 * std::numbers::pi * i / n);
    edges.emplace_back(i, (i + 1) % n);
    cyc.push_back(i);
  }
  return PlaneGraph::from_points(pts, edges, designate_outer ? std::optional(cyc) : std::nullopt);
}

inline PlaneGraph k4() {
  Points pts{{0, {0, 10}}, {1, {-9, -5}}, {2, {9, -5}}, {3, {0, 0}}};
  return PlaneGraph::from_points(pts, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}}, std::vector<VertexId>{0, 1, 2});
}

inline PlaneGraph cube() {
  Points pts{{0, {-2, -2}}, {1, {2, -2}}, {2, {2, 2}}, {3, {-2, 2}},
             {4, {-1, -1}}, {5, {1, -1}}, {6, {1, 1}}, {7, {-1, 1}}};
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
  return PlaneGraph::from_points(pts, e, std::vector<VertexId>{0, 1, 2, 3});
}

/// Outer triangle 0,1,2; inner triangle 3,4,5 rotated; every outer vertex
/// joined to two inner ones.
inline PlaneGraph octahedron() {
  Points pts;
  for (int i = 0; i < 3; ++i) pts[i] = polar(10, std::numbers::pi / 2 + 2 * std::numbers::pi * i / 3);
  for (int i = 0; i < 3; ++i) pts[3 + i] = polar(3, -std::numbers::pi / 2 + 2 * std::numbers::pi * i / 3);
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
  // inner vertex 3+i sits opposite outer vertex i
  for (int i = 0; i < 3; ++i) {
    e.emplace_back(3 + i, (i + 1) % 3);
    e.emplace_back(3 + i, (i + 2) % 3);
  }
  return PlaneGraph::from_points(pts, e, std::vector<VertexId>{0, 1, 2});
}

/// Random connected plane graph on a w x h grid: a random spanning tree of the
/// grid edges, extra grid edges with probability p, and at most one diagonal
/// per cell with probability q.
inline PlaneGraph random_grid_graph(std::mt19937& rng, int w, int h, double p, double q) {
  Points pts;
  auto id = [w](int x, int y) { return y * w + x; };
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) pts[id(x, y)] = {x, y};
  }
  std::vector<Edge> grid;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (x + 1 < w) grid.emplace_back(id(x, y), id(x + 1, y));
      if (y + 1 < h) grid.emplace_back(id(x, y), id(x, y + 1));
    }
  }
  std::shuffle(grid.begin(), grid.end(), rng);
  std::map<VertexId, VertexId> parent;
  auto find = [&](VertexId x) {
    while (parent.count(x) && parent[x] != x) x = parent[x];
    return x;
  };
  std::bernoulli_distribution extra(p);
  std::bernoulli_distribution diag(q);
  std::bernoulli_distribution flip(0.5);
  std::vector<Edge> edges;
  for (const Edge& e : grid) {
    VertexId a = find(e.u);
    VertexId b = find(e.v);
    if (a != b) {
      parent[a] = b;
      parent.try_emplace(b, b);
      edges.push_back(e);
    } else if (extra(rng)) {
      edges.push_back(e);
    }
  }
  for (int y = 0; y + 1 < h; ++y) {
    for (int x = 0; x + 1 < w; ++x) {
      if (!diag(rng)) continue;
      if (flip(rng)) {
        edges.emplace_back(id(x, y), id(x + 1, y + 1));
      } else {
        edges.emplace_back(id(x + 1, y), id(x, y + 1));
      }
    }
  }
  return PlaneGraph::from_points(pts, edges);
}

/// Like random_grid_graph, but the grid perimeter is always present and
/// designated as the outer face.
inline PlaneGraph random_framed_grid(std::mt19937& rng, int w, int h, double p, double q) {
  PlaneGraph inner = random_grid_graph(rng, w, h, p, q);
  Points pts;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) pts[y * w + x] = {x, y};
  }
  std::set<Edge> edges;
  for (const Edge& e : inner.edges()) edges.insert(e);
  std::vector<VertexId> frame;
  for (int x = 0; x < w; ++x) frame.push_back(x);
  for (int y = 1; y < h; ++y) frame.push_back(y * w + w - 1);
  for (int x = w - 2; x >= 0; --x) frame.push_back((h - 1) * w + x);
  for (int y = h - 2; y >= 1; --y) frame.push_back(y * w);
  for (std::size_t i = 0; i < frame.size(); ++i) edges.emplace(frame[i], frame[(i + 1) % frame.size()]);
  return PlaneGraph::from_points(pts, {edges.begin(), edges.end()}, frame);
}

inline std::pair<double, double> polar_deg(double radius, double degrees) {
  return polar(radius, degrees * std::numbers::pi / 180.0);
}

/// C9 (vertices 0..8) around a triangle 9,10,11 joined to 0, 3 and 6.
inline PlaneGraph bad_nine_cycle() {
  Points pts;
  std::vector<Edge> e;
  std::vector<VertexId> c0;
  for (int i = 0; i < 9; ++i) {
    pts[i] = polar_deg(10, 90 - 40.0 * i);
    e.emplace_back(i, (i + 1) % 9);
    c0.push_back(i);
  }
  for (int j = 0; j < 3; ++j) {
    pts[9 + j] = polar_deg(4, 90 - 120.0 * j);
    e.emplace_back(9 + j, 3 * j);
    e.emplace_back(9 + j, 9 + (j + 1) % 3);
  }
  return PlaneGraph::from_points(pts, e, c0);
}

/// C10 (vertices 0..9) split by the path 0-10-11-12-5; triangle 10,11,13 with
/// 13 joined to 3 through 14, 15. Faces: the triangle, two 8-faces, a 9-face.
inline PlaneGraph friendly_path_instance() {
  Points pts;
  std::vector<Edge> e;
  std::vector<VertexId> c0;
  for (int i = 0; i < 10; ++i) {
    pts[i] = polar_deg(10, 90 - 36.0 * i);
    e.emplace_back(i, (i + 1) % 10);
    c0.push_back(i);
  }
  pts[10] = {0, 5};
  pts[11] = {0, 0};
  pts[12] = {0, -5};
  pts[13] = {3, 2.5};
  pts[14] = {5, 0};
  pts[15] = {7, -1.5};
  for (Edge x : {Edge(0, 10), Edge(10, 11), Edge(11, 12), Edge(12, 5), Edge(10, 13), Edge(11, 13), Edge(13, 14),
                 Edge(14, 15), Edge(15, 3)}) {
    e.push_back(x);
  }
  return PlaneGraph::from_points(pts, e, c0);
}

/// A 5-vertex 0 on the triangle 0,1,2 and on four 6-faces 0,n_i,a,b,c,n_{i+1};
/// the flower sits inside the 5-cycle 21..25, each 20+i joined to n_i = i.
inline PlaneGraph five_vertex_flower() {
  Points pts{{0, {0, 0}}};
  std::vector<Edge> e;
  for (int i = 1; i <= 5; ++i) {
    const double a = 90 - 72.0 * (i - 1);
    pts[i] = polar_deg(2, a);
    pts[20 + i] = polar_deg(8, a);
    e.emplace_back(0, i);
    e.emplace_back(i, 20 + i);
    e.emplace_back(20 + i, 20 + i % 5 + 1);
  }
  e.emplace_back(1, 2);
  VertexId next = 6;
  for (int i = 2; i <= 5; ++i) {
    const int j = i % 5 + 1;
    const double a = 90 - 72.0 * (i - 1);
    VertexId prev = i;
    for (int s = 1; s <= 3; ++s) {
      pts[next] = polar_deg(3.5, a - 18.0 * s);
      e.emplace_back(prev, next);
      prev = next++;
    }
    e.emplace_back(prev, j);
  }
  return PlaneGraph::from_points(pts, e, std::vector<VertexId>{21, 22, 23, 24, 25});
}

/// Two triangles sharing vertex 0; no designated outer cycle.
inline PlaneGraph bowtie() {
  Points pts{{0, {0, 0}}, {1, {-2, 1}}, {2, {-2, -1}}, {3, {2, 1}}, {4, {2, -1}}};
  return PlaneGraph::from_points(pts, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
}

/// C7 with an interior vertex 7 hanging off vertex 0.
inline PlaneGraph c7_pendant_interior() {
  Points pts;
  std::vector<Edge> e;
  std::vector<VertexId> c0;
  for (int i = 0; i < 7; ++i) {
    pts[i] = polar_deg(10, 90 - 360.0 * i / 7);
    e.emplace_back(i, (i + 1) % 7);
    c0.push_back(i);
  }
  pts[7] = polar_deg(5, 90);
  e.emplace_back(0, 7);
  return PlaneGraph::from_points(pts, e, c0);
}

namespace detail {

inline void add_c7(Points& pts, std::vector<Edge>& e, std::vector<VertexId>& c0) {
  for (int i = 0; i < 7; ++i) {
    pts[i] = polar_deg(10, 90 - 360.0 * i / 7);
    e.emplace_back(i, (i + 1) % 7);
    c0.push_back(i);
  }
}

}  // namespace detail

/// C7 split by the path 0-7-8-9-3: cycles of length 7, 7 and 8 only.
inline PlaneGraph theorem_instance_split() {
  Points pts;
  std::vector<Edge> e;
  std::vector<VertexId> c0;
  detail::add_c7(pts, e, c0);
  pts[7] = polar_deg(5, 60);
  pts[8] = polar_deg(2, 0);
  pts[9] = polar_deg(5, -60);
  for (Edge x : {Edge(0, 7), Edge(7, 8), Edge(8, 9), Edge(9, 3)}) e.push_back(x);
  return PlaneGraph::from_points(pts, e, c0);
}

/// C7 with triangles 0,1,7 and 3,4,8 inside; the triangles are at distance 2.
inline PlaneGraph theorem_instance_triangles() {
  Points pts;
  std::vector<Edge> e;
  std::vector<VertexId> c0;
  detail::add_c7(pts, e, c0);
  pts[7] = polar_deg(7, 90 - 360.0 / 14);
  pts[8] = polar_deg(7, 90 - 360.0 * 7 / 14);
  for (Edge x : {Edge(0, 7), Edge(1, 7), Edge(3, 8), Edge(4, 8)}) e.push_back(x);
  return PlaneGraph::from_points(pts, e, c0);
}

/// C7 with a center 7 joined to 0, 2 and 4 by paths of length 3.
inline PlaneGraph theorem_instance_spokes() {
  Points pts;
  std::vector<Edge> e;
  std::vector<VertexId> c0;
  detail::add_c7(pts, e, c0);
  pts[7] = {0, 0};
  VertexId next = 8;
  for (int target : {0, 2, 4}) {
    const double a = 90 - 360.0 * target / 7;
    pts[next] = polar_deg(3, a);
    pts[next + 1] = polar_deg(6.5, a);
    e.emplace_back(7, next);
    e.emplace_back(next, next + 1);
    e.emplace_back(next + 1, target);
    next += 2;
  }
  return PlaneGraph::from_points(pts, e, c0);
}

}  // namespace dpcolor::testing
