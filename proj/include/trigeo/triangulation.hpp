// Copyright 2026 The Trigeo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trigeo/geometry.hpp"
#include "trigeo/report.hpp"

namespace trigeo {

// Chord between two non-adjacent polygon vertices, stored with i < j.
struct Diagonal {
  int i = 0;
  int j = 0;

  Diagonal() = default;
  Diagonal(int a, int b) : i(std::min(a, b)), j(std::max(a, b)) {}
  friend bool operator==(Diagonal a, Diagonal b) { return a.i == b.i && a.j == b.j; }
  friend bool operator<(Diagonal a, Diagonal b) { return a.i != b.i ? a.i < b.i : a.j < b.j; }
};

enum class TriangulationMethod { EarClip, Monotone };

inline const char* to_string(TriangulationMethod m) {
  return m == TriangulationMethod::EarClip ? "earclip" : "monotone";
}

// Diagonal triangulation of a simple polygon: n-2 index triangles cut by
// n-3 diagonals, all indices referring to the source polygon's ring.
struct Triangulation {
  SimplePolygon source;
  std::vector<std::array<int, 3>> triangles;
  std::vector<Diagonal> diagonals;
  TriangulationMethod method = TriangulationMethod::EarClip;
};

struct EarReport {
  std::vector<int> ear_indices;
};

// Adjacency of triangles across shared edges. For a diagonal triangulation
// this is a tree whose node degree never exceeds three.
struct DualGraph {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adjacency;

  int max_degree() const {
    std::size_t best = 0;
    for (const auto& a : adjacency) best = std::max(best, a.size());
    return static_cast<int>(best);
  }

  bool connected() const {
    if (node_count == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(node_count), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int visited = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adjacency[static_cast<std::size_t>(u)]) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          ++visited;
          q.push(v);
        }
      }
    }
    return visited == node_count;
  }

  bool is_tree() const {
    return connected() && static_cast<int>(edges.size()) == node_count - 1;
  }
};

namespace detail {

// Ear predicate over a live ring described by prev/next links. Containment
// is tested against every other live vertex; boundary contact disqualifies.
template <typename PrevFn, typename NextFn, typename AliveFn>
bool ring_is_ear(const SimplePolygon& poly, int candidate, PrevFn prev, NextFn next,
                 AliveFn alive, const Tolerance& tol) {
  int p = prev(candidate);
  int nx = next(candidate);
  Point2 a = poly[p];
  Point2 b = poly[candidate];
  Point2 c = poly[nx];
  if (orientation(a, b, c, tol) != Orientation::CCW) return false;
  for (int w = 0; w < poly.size(); ++w) {
    if (!alive(w) || w == p || w == candidate || w == nx) continue;
    Point2 q = poly[w];
    if (orientation(a, b, q, tol) != Orientation::CW &&
        orientation(b, c, q, tol) != Orientation::CW &&
        orientation(c, a, q, tol) != Orientation::CW)
      return false;
  }
  return true;
}

// Diagonals of a triangulation are exactly the triangle edges that are not
// ring edges; each interior edge appears twice, so a set dedups them.
inline std::vector<Diagonal> diagonals_from_triangles(
    int n, const std::vector<std::array<int, 3>>& triangles) {
  std::set<Diagonal> out;
  for (const auto& t : triangles) {
    for (int e = 0; e < 3; ++e) {
      int u = t[static_cast<std::size_t>(e)];
      int v = t[static_cast<std::size_t>((e + 1) % 3)];
      int lo = std::min(u, v);
      int hi = std::max(u, v);
      bool ring_edge = (hi - lo == 1) || (lo == 0 && hi == n - 1);
      if (!ring_edge) out.insert(Diagonal(lo, hi));
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace detail

// A vertex is an ear when the turn at it is convex and the triangle of its
// neighbours holds no other vertex, not even on its boundary.
inline bool is_ear(const SimplePolygon& poly, int i, const Tolerance& tol) {
  if (i < 0 || i >= poly.size()) throw std::out_of_range("is_ear: vertex index out of range");
  return detail::ring_is_ear(
      poly, i, [&](int v) { return poly.prev(v); }, [&](int v) { return poly.next(v); },
      [](int) { return true; }, tol);
}

inline bool is_ear(const SimplePolygon& poly, int i) {
  return is_ear(poly, i, poly.tolerance());
}

inline EarReport find_ears(const SimplePolygon& poly) {
  EarReport report;
  for (int i = 0; i < poly.size(); ++i) {
    if (is_ear(poly, i)) report.ear_indices.push_back(i);
  }
  return report;
}

// O(n^2) ear clipping. The live ring is a doubly linked list over the source
// indices; at each step the lowest-index live ear is clipped, which makes
// the output deterministic for bit-equal inputs.
inline Triangulation triangulate_earclip(const SimplePolygon& poly) {
  int n = poly.size();
  const Tolerance& tol = poly.tolerance();
  std::vector<int> prev(static_cast<std::size_t>(n)), next(static_cast<std::size_t>(n));
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  for (int i = 0; i < n; ++i) {
    prev[static_cast<std::size_t>(i)] = i == 0 ? n - 1 : i - 1;
    next[static_cast<std::size_t>(i)] = i + 1 == n ? 0 : i + 1;
  }

  Triangulation out{poly, {}, {}, TriangulationMethod::EarClip};
  out.triangles.reserve(static_cast<std::size_t>(n - 2));

  auto prev_fn = [&](int v) { return prev[static_cast<std::size_t>(v)]; };
  auto next_fn = [&](int v) { return next[static_cast<std::size_t>(v)]; };
  auto alive_fn = [&](int v) { return alive[static_cast<std::size_t>(v)] != 0; };

  int remaining = n;
  while (remaining > 3) {
    int ear = -1;
    for (int i = 0; i < n; ++i) {
      if (!alive[static_cast<std::size_t>(i)]) continue;
      if (detail::ring_is_ear(poly, i, prev_fn, next_fn, alive_fn, tol)) {
        ear = i;
        break;
      }
    }
    if (ear < 0)
      throw std::runtime_error(
          "triangulate_earclip: no ear found with " + std::to_string(remaining) +
          " vertices remaining; input is not a valid simple polygon at this tolerance");
    int p = prev_fn(ear);
    int nx = next_fn(ear);
    out.triangles.push_back({p, ear, nx});
    out.diagonals.emplace_back(p, nx);
    alive[static_cast<std::size_t>(ear)] = 0;
    next[static_cast<std::size_t>(p)] = nx;
    prev[static_cast<std::size_t>(nx)] = p;
    --remaining;
  }

  int first = 0;
  while (!alive[static_cast<std::size_t>(first)]) ++first;
  out.triangles.push_back({first, next_fn(first), next_fn(next_fn(first))});
  return out;
}

namespace detail {

// --- Monotone decomposition (sweep from top to bottom) ---

// Strict processing order: higher y first, ties left to right, then by
// ring index.
inline bool sweep_before(Point2 a, int ia, Point2 b, int ib) {
  if (a.y != b.y) return a.y > b.y;
  if (a.x != b.x) return a.x < b.x;
  return ia < ib;
}

enum class VertexClass { Start, End, Split, Merge, Regular };

// Status-tree edge, directed downward (top above bot in sweep order). The id
// names the ring vertex owning the edge (its upper endpoint).
struct SweepEdge {
  Point2 top, bot;
  int id = -1;
};

// Orders non-crossing downward edges west to east. Only edges whose y-spans
// overlap the current sweep line ever coexist, so testing one edge's upper
// endpoint against the other edge's supporting line suffices.
struct SweepEdgeLess {
  // 1 when q is east of the downward-directed edge, -1 west, 0 on the line.
  static int side(const SweepEdge& e, Point2 q) {
    double c = cross(e.top, e.bot, q);
    return c > 0.0 ? 1 : (c < 0.0 ? -1 : 0);
  }

  static int spatial(const SweepEdge& a, const SweepEdge& b) {
    bool ah = a.top.y == a.bot.y;
    bool bh = b.top.y == b.bot.y;
    if (ah && bh) {
      if (a.top.x != b.top.x) return a.top.x < b.top.x ? -1 : 1;
      return 0;
    }
    if (bh) {
      int s = side(a, b.top);
      return s == 1 ? -1 : (s == -1 ? 1 : 0);
    }
    if (ah) {
      int s = side(b, a.top);
      return s == -1 ? -1 : (s == 1 ? 1 : 0);
    }
    if (sweep_before(b.top, b.id, a.top, a.id)) {
      int s = side(b, a.top);
      return s == -1 ? -1 : (s == 1 ? 1 : 0);
    }
    int s = side(a, b.top);
    return s == 1 ? -1 : (s == -1 ? 1 : 0);
  }

  bool operator()(const SweepEdge& a, const SweepEdge& b) const {
    if (a.id == b.id) return false;
    int s = spatial(a, b);
    if (s != 0) return s < 0;
    return a.id < b.id;
  }
};

// Plane sweep over the original ring that emits the partition diagonals.
// Pure de Berg: each status edge is owned by its upper endpoint, helpers
// name original vertices, and no ring surgery happens here.
class MonotoneSweep {
 public:
  explicit MonotoneSweep(const SimplePolygon& poly) : poly_(poly) {
    int n = poly.size();
    classes_.resize(static_cast<std::size_t>(n));
    helpers_.assign(static_cast<std::size_t>(n), -1);
    tree_pos_.assign(static_cast<std::size_t>(n), tree_.end());
    for (int i = 0; i < n; ++i) classes_[static_cast<std::size_t>(i)] = classify(i);
  }

  std::vector<Diagonal> run() {
    int n = poly_.size();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sweep_before(poly_[a], a, poly_[b], b); });
    for (int idx : order) handle(idx);
    return std::move(diagonals_);
  }

 private:
  using Tree = std::set<SweepEdge, SweepEdgeLess>;

  VertexClass classify(int i) const {
    Point2 v = poly_[i];
    int ip = poly_.prev(i);
    int in = poly_.next(i);
    bool prev_below = sweep_before(v, i, poly_[ip], ip);
    bool next_below = sweep_before(v, i, poly_[in], in);
    double turn = cross(poly_[ip], v, poly_[in]);
    if (prev_below && next_below) return turn > 0.0 ? VertexClass::Start : VertexClass::Split;
    if (!prev_below && !next_below) return turn > 0.0 ? VertexClass::End : VertexClass::Merge;
    return VertexClass::Regular;
  }

  void insert_edge(int vid) {
    SweepEdge e{poly_[vid], poly_[poly_.next(vid)], vid};
    tree_pos_[static_cast<std::size_t>(vid)] = tree_.insert(e).first;
  }

  void erase_edge(int vid) {
    auto it = tree_pos_[static_cast<std::size_t>(vid)];
    if (it != tree_.end()) {
      tree_.erase(it);
      tree_pos_[static_cast<std::size_t>(vid)] = tree_.end();
    }
  }

  // Edge in the status tree directly west of point p, or end().
  Tree::iterator edge_left_of(Point2 p) {
    SweepEdge probe{p, p, -2};
    auto it = tree_.lower_bound(probe);
    if (it == tree_.begin()) return tree_.end();
    return std::prev(it);
  }

  bool helper_is_merge(int vid) const {
    int h = helpers_[static_cast<std::size_t>(vid)];
    return h >= 0 && classes_[static_cast<std::size_t>(h)] == VertexClass::Merge;
  }

  void connect_to_helper_if_merge(int vid, int edge_owner) {
    if (helper_is_merge(edge_owner))
      diagonals_.emplace_back(vid, helpers_[static_cast<std::size_t>(edge_owner)]);
  }

  void handle(int vid) {
    switch (classes_[static_cast<std::size_t>(vid)]) {
      case VertexClass::Start:
        insert_edge(vid);
        helpers_[static_cast<std::size_t>(vid)] = vid;
        break;
      case VertexClass::End: {
        int pe = poly_.prev(vid);
        connect_to_helper_if_merge(vid, pe);
        erase_edge(pe);
        break;
      }
      case VertexClass::Split: {
        auto it = edge_left_of(poly_[vid]);
        if (it == tree_.end())
          throw std::runtime_error("monotone: split vertex with no left edge");
        diagonals_.emplace_back(vid, helpers_[static_cast<std::size_t>(it->id)]);
        helpers_[static_cast<std::size_t>(it->id)] = vid;
        insert_edge(vid);
        helpers_[static_cast<std::size_t>(vid)] = vid;
        break;
      }
      case VertexClass::Merge: {
        int pe = poly_.prev(vid);
        connect_to_helper_if_merge(vid, pe);
        erase_edge(pe);
        auto it = edge_left_of(poly_[vid]);
        if (it == tree_.end())
          throw std::runtime_error("monotone: merge vertex with no left edge");
        connect_to_helper_if_merge(vid, it->id);
        helpers_[static_cast<std::size_t>(it->id)] = vid;
        break;
      }
      case VertexClass::Regular: {
        int pe = poly_.prev(vid);
        bool interior_right = sweep_before(poly_[pe], pe, poly_[vid], vid);
        if (interior_right) {
          connect_to_helper_if_merge(vid, pe);
          erase_edge(pe);
          insert_edge(vid);
          helpers_[static_cast<std::size_t>(vid)] = vid;
        } else {
          auto it = edge_left_of(poly_[vid]);
          if (it == tree_.end())
            throw std::runtime_error("monotone: regular vertex with no left edge");
          connect_to_helper_if_merge(vid, it->id);
          helpers_[static_cast<std::size_t>(it->id)] = vid;
        }
        break;
      }
    }
  }

  const SimplePolygon& poly_;
  std::vector<VertexClass> classes_;
  std::vector<int> helpers_;
  std::vector<Diagonal> diagonals_;
  Tree tree_;
  std::vector<Tree::iterator> tree_pos_;
};

// Splits a CCW ring along non-crossing diagonals into its interior faces by
// walking the induced planar subdivision. Darts at each vertex are sorted by
// angle; the successor of a dart is the clockwise neighbour of its twin,
// which traces every interior face counterclockwise.
inline std::vector<std::vector<int>> split_by_diagonals(const SimplePolygon& poly,
                                                        const std::vector<Diagonal>& diagonals) {
  int n = poly.size();
  struct Dart {
    int from, to, twin;
  };
  std::vector<Dart> darts;
  darts.reserve(2 * (static_cast<std::size_t>(n) + diagonals.size()));
  for (int i = 0; i < n; ++i) {
    int j = poly.next(i);
    darts.push_back({i, j, static_cast<int>(darts.size()) + 1});
    darts.push_back({j, i, static_cast<int>(darts.size()) - 1});
  }
  for (const Diagonal& d : diagonals) {
    darts.push_back({d.i, d.j, static_cast<int>(darts.size()) + 1});
    darts.push_back({d.j, d.i, static_cast<int>(darts.size()) - 1});
  }

  std::vector<std::vector<int>> outgoing(static_cast<std::size_t>(n));
  for (int d = 0; d < static_cast<int>(darts.size()); ++d)
    outgoing[static_cast<std::size_t>(darts[static_cast<std::size_t>(d)].from)].push_back(d);
  std::vector<int> slot(darts.size(), 0);
  for (int v = 0; v < n; ++v) {
    auto& list = outgoing[static_cast<std::size_t>(v)];
    std::sort(list.begin(), list.end(), [&](int a, int b) {
      Point2 da = poly[darts[static_cast<std::size_t>(a)].to] - poly[v];
      Point2 db = poly[darts[static_cast<std::size_t>(b)].to] - poly[v];
      return std::atan2(da.y, da.x) < std::atan2(db.y, db.x);
    });
    for (std::size_t k = 0; k < list.size(); ++k) slot[static_cast<std::size_t>(list[k])] =
        static_cast<int>(k);
  }

  auto successor = [&](int d) {
    int twin = darts[static_cast<std::size_t>(d)].twin;
    int v = darts[static_cast<std::size_t>(d)].to;
    const auto& list = outgoing[static_cast<std::size_t>(v)];
    int k = static_cast<int>(list.size());
    return list[static_cast<std::size_t>((slot[static_cast<std::size_t>(twin)] + k - 1) % k)];
  };

  std::vector<char> visited(darts.size(), 0);
  std::vector<std::vector<int>> faces;
  for (int d0 = 0; d0 < static_cast<int>(darts.size()); ++d0) {
    if (visited[static_cast<std::size_t>(d0)]) continue;
    std::vector<int> face;
    bool outer = false;
    int d = d0;
    do {
      visited[static_cast<std::size_t>(d)] = 1;
      if (d == 1) outer = true;  // twin of ring edge 0 borders the outer face
      face.push_back(darts[static_cast<std::size_t>(d)].from);
      d = successor(d);
    } while (d != d0);
    if (!outer) faces.push_back(std::move(face));
  }
  return faces;
}

// Stack triangulation of one y-monotone ring (indices into the source
// polygon). Emits CCW triangles.
inline void triangulate_monotone_ring(const SimplePolygon& poly, const std::vector<int>& ring,
                                      std::vector<std::array<int, 3>>& out) {
  int k = static_cast<int>(ring.size());
  if (k < 3) throw std::runtime_error("monotone: degenerate ring");
  auto at = [&](int i) { return poly[ring[static_cast<std::size_t>(i)]]; };
  auto emit = [&](int a, int b, int c) {
    std::array<int, 3> t{ring[static_cast<std::size_t>(a)], ring[static_cast<std::size_t>(b)],
                         ring[static_cast<std::size_t>(c)]};
    if (cross(poly[t[0]], poly[t[1]], poly[t[2]]) < 0.0) std::swap(t[1], t[2]);
    out.push_back(t);
  };
  if (k == 3) {
    emit(0, 1, 2);
    return;
  }

  auto before = [&](int a, int b) {
    return sweep_before(at(a), ring[static_cast<std::size_t>(a)], at(b),
                        ring[static_cast<std::size_t>(b)]);
  };

  int top = 0, bottom = 0;
  for (int i = 1; i < k; ++i) {
    if (before(i, top)) top = i;
    if (before(bottom, i)) bottom = i;
  }

  // Merge the two chains into one top-to-bottom order. side: +1 for the
  // chain reached via next pointers (west chain of a CCW ring), -1 for the
  // other, 0 for the two extremes.
  std::vector<int> order(static_cast<std::size_t>(k));
  std::vector<int> side(static_cast<std::size_t>(k), 0);
  order[0] = top;
  int left = (top + 1) % k;
  int right = (top + k - 1) % k;
  for (int i = 1; i < k - 1; ++i) {
    bool take_left;
    if (left == bottom) {
      take_left = false;
    } else if (right == bottom) {
      take_left = true;
    } else {
      take_left = before(left, right);
    }
    if (take_left) {
      order[static_cast<std::size_t>(i)] = left;
      side[static_cast<std::size_t>(left)] = 1;
      left = (left + 1) % k;
    } else {
      order[static_cast<std::size_t>(i)] = right;
      side[static_cast<std::size_t>(right)] = -1;
      right = (right + k - 1) % k;
    }
  }
  order[static_cast<std::size_t>(k - 1)] = bottom;

  std::vector<int> stack;
  stack.reserve(static_cast<std::size_t>(k));
  stack.push_back(order[0]);
  stack.push_back(order[1]);
  for (int i = 2; i < k - 1; ++i) {
    int v = order[static_cast<std::size_t>(i)];
    if (side[static_cast<std::size_t>(v)] != side[static_cast<std::size_t>(stack.back())]) {
      for (std::size_t j = 0; j + 1 < stack.size(); ++j)
        emit(stack[j], stack[j + 1], v);
      int prev_top = stack.back();
      stack.clear();
      stack.push_back(prev_top);
      stack.push_back(v);
    } else {
      int last = stack.back();
      stack.pop_back();
      while (!stack.empty()) {
        int s1 = stack.back();
        double turn = cross(at(v), at(last), at(s1));
        bool convex = side[static_cast<std::size_t>(v)] == 1 ? turn < 0.0 : turn > 0.0;
        if (!convex) break;
        emit(v, last, s1);
        last = s1;
        stack.pop_back();
      }
      stack.push_back(last);
      stack.push_back(v);
    }
  }
  for (std::size_t j = 0; j + 1 < stack.size(); ++j)
    emit(stack[j], stack[j + 1], order[static_cast<std::size_t>(k - 1)]);
}

}  // namespace detail

// O(n log n) triangulation: sweep-line decomposition into y-monotone pieces,
// then linear stack triangulation of each piece. Triangle sets may differ
// from ear clipping but counts and total area always agree.
inline Triangulation triangulate_monotone(const SimplePolygon& poly) {
  Triangulation out{poly, {}, {}, TriangulationMethod::Monotone};
  std::vector<Diagonal> partition = detail::MonotoneSweep(poly).run();
  std::vector<std::vector<int>> rings = detail::split_by_diagonals(poly, partition);
  out.triangles.reserve(static_cast<std::size_t>(poly.size() - 2));
  for (const auto& ring : rings) detail::triangulate_monotone_ring(poly, ring, out.triangles);
  out.diagonals = detail::diagonals_from_triangles(poly.size(), out.triangles);
  return out;
}

inline DualGraph dual_graph(const Triangulation& t) {
  DualGraph g;
  g.node_count = static_cast<int>(t.triangles.size());
  g.adjacency.resize(t.triangles.size());
  std::map<std::pair<int, int>, std::vector<int>> by_edge;
  for (std::size_t ti = 0; ti < t.triangles.size(); ++ti) {
    const auto& tri = t.triangles[ti];
    for (int e = 0; e < 3; ++e) {
      int u = tri[static_cast<std::size_t>(e)];
      int v = tri[static_cast<std::size_t>((e + 1) % 3)];
      by_edge[{std::min(u, v), std::max(u, v)}].push_back(static_cast<int>(ti));
    }
  }
  for (const auto& [edge, tris] : by_edge) {
    if (tris.size() == 2) {
      g.edges.emplace_back(tris[0], tris[1]);
      g.adjacency[static_cast<std::size_t>(tris[0])].push_back(tris[1]);
      g.adjacency[static_cast<std::size_t>(tris[1])].push_back(tris[0]);
    }
  }
  return g;
}

// Structural audit of a candidate triangulation: counts, area conservation,
// pairwise interior disjointness, and per-diagonal validity. Failures are
// report entries, never exceptions.
inline VerificationReport verify_triangulation(const SimplePolygon& poly,
                                               const Triangulation& t) {
  VerificationReport report;
  int n = poly.size();
  const Tolerance& tol = poly.tolerance();

  long bad_indices = 0;
  for (const auto& tri : t.triangles) {
    for (int v : tri)
      if (v < 0 || v >= n) ++bad_indices;
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) ++bad_indices;
  }
  report.add("indices_valid", bad_indices == 0,
             bad_indices ? std::to_string(bad_indices) + " invalid triangle index entries" : "",
             bad_indices);
  if (bad_indices > 0) return report;

  int tri_count = static_cast<int>(t.triangles.size());
  int diag_count = static_cast<int>(t.diagonals.size());
  report.add("triangle_count", tri_count == n - 2,
             "expected " + std::to_string(n - 2) + ", got " + std::to_string(tri_count));
  report.add("diagonal_count", diag_count == n - 3,
             "expected " + std::to_string(n - 3) + ", got " + std::to_string(diag_count));

  double poly_area = signed_area(poly);
  double tri_area = 0.0;
  for (const auto& tri : t.triangles)
    tri_area += 0.5 * std::abs(cross(poly[tri[0]], poly[tri[1]], poly[tri[2]]));
  bool area_ok = std::abs(tri_area - poly_area) <= 1e-9 * std::abs(poly_area);
  report.add("area_conservation", area_ok,
             "polygon " + std::to_string(poly_area) + ", triangles " + std::to_string(tri_area));

  // Pairwise disjointness: proper edge crossings, duplicated triangles, and
  // sampled containment (each centroid against every other triangle).
  long overlaps = 0;
  for (std::size_t i = 0; i < t.triangles.size() && overlaps == 0; ++i) {
    const auto& a = t.triangles[i];
    Point2 centroid = (1.0 / 3.0) * (poly[a[0]] + poly[a[1]] + poly[a[2]]);
    for (std::size_t j = 0; j < t.triangles.size() && overlaps == 0; ++j) {
      if (i == j) continue;
      const auto& b = t.triangles[j];
      if (j > i) {
        std::array<int, 3> sa = a, sb = b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa == sb) {
          ++overlaps;
          break;
        }
        for (int ea = 0; ea < 3 && !overlaps; ++ea) {
          for (int eb = 0; eb < 3; ++eb) {
            if (segments_properly_cross(poly[a[static_cast<std::size_t>(ea)]],
                                        poly[a[static_cast<std::size_t>((ea + 1) % 3)]],
                                        poly[b[static_cast<std::size_t>(eb)]],
                                        poly[b[static_cast<std::size_t>((eb + 1) % 3)]], tol)) {
              ++overlaps;
              break;
            }
          }
        }
        if (overlaps) break;
      }
      Triangle2 tb(poly[b[0]], poly[b[1]], poly[b[2]], tol);
      if (point_in_triangle(centroid, tb, tol) == PointLocation::Inside) ++overlaps;
    }
  }
  report.add("interior_disjoint", overlaps == 0,
             overlaps ? "overlapping triangle interiors detected" : "", overlaps);

  long bad_diagonals = 0;
  for (const Diagonal& d : t.diagonals) {
    if (d.i < 0 || d.j >= n || d.i == d.j) {
      ++bad_diagonals;
      continue;
    }
    bool adjacent = (d.j - d.i == 1) || (d.i == 0 && d.j == n - 1);
    if (adjacent) {
      ++bad_diagonals;
      continue;
    }
    Point2 a = poly[d.i];
    Point2 b = poly[d.j];
    bool crosses = false;
    for (int e = 0; e < n && !crosses; ++e) {
      int u = e;
      int v = poly.next(e);
      if (u == d.i || u == d.j || v == d.i || v == d.j) continue;
      if (segments_intersect(a, b, poly[u], poly[v], tol)) crosses = true;
    }
    Point2 mid = 0.5 * (a + b);
    if (crosses || point_in_polygon(mid, poly) != PointLocation::Inside) ++bad_diagonals;
  }
  report.add("diagonals_valid", bad_diagonals == 0,
             bad_diagonals ? std::to_string(bad_diagonals) + " invalid diagonals" : "",
             bad_diagonals);

  return report;
}

}  // namespace trigeo
