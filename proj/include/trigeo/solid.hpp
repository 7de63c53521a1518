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
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trigeo/geometry.hpp"
#include "trigeo/report.hpp"
#include "trigeo/triangulation.hpp"

namespace trigeo {

struct Box {
  Point3 min_corner;
  Point3 max_corner;

  Box(Point3 lo, Point3 hi) : min_corner(lo), max_corner(hi) {
    if (!is_finite(lo) || !is_finite(hi))
      throw std::invalid_argument("Box: non-finite corner");
    if (!(hi.x > lo.x && hi.y > lo.y && hi.z > lo.z))
      throw std::invalid_argument("Box: max corner must strictly dominate min corner");
  }

  Point3 extent() const { return max_corner - min_corner; }
  double diagonal() const { return distance(min_corner, max_corner); }
  double volume() const {
    Point3 e = extent();
    return e.x * e.y * e.z;
  }
  double surface_area() const {
    Point3 e = extent();
    return 2.0 * (e.x * e.y + e.y * e.z + e.z * e.x);
  }
};

// Which pair of opposite vertical box edges carries the diagonal cut plane.
enum class CutEdgePair { MainDiagonal, AntiDiagonal };

// Triangular prism: base triangle extruded along an axis that is not
// parallel to the base plane. Faces are derived: 2 triangles, 3 quads.
struct Prism {
  std::array<Point3, 3> base;
  Point3 axis;

  Prism(std::array<Point3, 3> base_, Point3 axis_) : base(base_), axis(axis_) {
    for (const Point3& p : base)
      if (!is_finite(p)) throw std::invalid_argument("Prism: non-finite base vertex");
    Point3 n = cross(base[1] - base[0], base[2] - base[0]);
    double nn = norm(n);
    double scale = std::max({distance(base[0], base[1]), distance(base[1], base[2]),
                             distance(base[2], base[0])});
    if (nn <= 1e-12 * scale * scale)
      throw std::invalid_argument("Prism: degenerate base triangle");
    if (std::abs(dot(n, axis)) <= 1e-12 * nn * norm(axis))
      throw std::invalid_argument("Prism: axis parallel to base plane");
    // Keep the base CCW as seen from the far end of the axis, so derived
    // faces wind outward.
    if (dot(n, axis) < 0.0) std::swap(base[1], base[2]);
  }

  double height() const {
    Point3 n = cross(base[1] - base[0], base[2] - base[0]);
    return std::abs(dot(n, axis)) / norm(n);
  }
  double base_area() const {
    return 0.5 * norm(cross(base[1] - base[0], base[2] - base[0]));
  }
  double volume() const { return base_area() * height(); }

  // Sorted edge lengths: three base edges twice (bottom and top copy) plus
  // the three lateral edges. Congruent prisms have equal multisets.
  std::vector<double> edge_length_multiset() const {
    std::vector<double> lengths;
    for (int i = 0; i < 3; ++i) {
      double e = distance(base[static_cast<std::size_t>(i)],
                          base[static_cast<std::size_t>((i + 1) % 3)]);
      lengths.push_back(e);
      lengths.push_back(e);
      lengths.push_back(norm(axis));
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  }
};

// Planar face of a solid, wound so its normal points out of the solid.
struct Face {
  int id = 0;
  std::vector<Point3> ring;
};

// Newell normal of a closed ring, translated to the first vertex to stay
// accurate for rings far from the origin.
inline Point3 ring_normal(const std::vector<Point3>& ring) {
  Point3 n{0, 0, 0};
  if (ring.empty()) return n;
  Point3 ref = ring.front();
  for (std::size_t i = 0; i < ring.size(); ++i) {
    Point3 a = ring[i] - ref;
    Point3 b = ring[(i + 1) % ring.size()] - ref;
    n = n + cross(a, b);
  }
  return n;
}

inline double face_area(const Face& f) { return 0.5 * norm(ring_normal(f.ring)); }

inline std::vector<Face> prism_faces(const Prism& p, int first_id = 0) {
  const auto& b = p.base;
  std::array<Point3, 3> t{b[0] + p.axis, b[1] + p.axis, b[2] + p.axis};
  std::vector<Face> faces;
  faces.push_back({first_id + 0, {b[0], b[2], b[1]}});
  faces.push_back({first_id + 1, {t[0], t[1], t[2]}});
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3;
    faces.push_back({first_id + 2 + i,
                     {b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)],
                      t[static_cast<std::size_t>(j)], t[static_cast<std::size_t>(i)]}});
  }
  return faces;
}

inline std::vector<Face> box_faces(const Box& box, int first_id = 0) {
  Point3 lo = box.min_corner;
  Point3 hi = box.max_corner;
  Point3 a{lo.x, lo.y, lo.z}, b{hi.x, lo.y, lo.z}, c{hi.x, hi.y, lo.z}, d{lo.x, hi.y, lo.z};
  Point3 e{lo.x, lo.y, hi.z}, f{hi.x, lo.y, hi.z}, g{hi.x, hi.y, hi.z}, h{lo.x, hi.y, hi.z};
  return {
      {first_id + 0, {a, d, c, b}},  // bottom, -z
      {first_id + 1, {e, f, g, h}},  // top, +z
      {first_id + 2, {a, b, f, e}},  // -y
      {first_id + 3, {c, d, h, g}},  // +y
      {first_id + 4, {d, a, e, h}},  // -x
      {first_id + 5, {b, c, g, f}},  // +x
  };
}

// Vertical diagonal cut of a box into two congruent triangular prisms whose
// union is the box and whose shared rectangle is the cut plane.
inline std::pair<Prism, Prism> slice_box(const Box& box,
                                         CutEdgePair cut = CutEdgePair::MainDiagonal) {
  Point3 lo = box.min_corner;
  Point3 hi = box.max_corner;
  Point3 a{lo.x, lo.y, lo.z}, b{hi.x, lo.y, lo.z}, c{hi.x, hi.y, lo.z}, d{lo.x, hi.y, lo.z};
  Point3 axis{0.0, 0.0, hi.z - lo.z};
  if (cut == CutEdgePair::MainDiagonal)
    return {Prism({a, b, c}, axis), Prism({a, c, d}, axis)};
  return {Prism({a, b, d}, axis), Prism({b, c, d}, axis)};
}

// 2D chart of one planar face: origin plus an orthonormal in-plane basis
// chosen so the projected ring keeps its winding (CCW for outward faces).
struct FaceChart {
  int face_id = 0;
  Point3 origin;
  Point3 u, v;
  SimplePolygon polygon2d;

  Point2 project(Point3 p) const { return {dot(p - origin, u), dot(p - origin, v)}; }
  Point3 lift(Point2 q) const { return origin + q.x * u + q.y * v; }
};

inline FaceChart make_face_chart(const Face& face) {
  if (face.ring.size() < 3) throw std::invalid_argument("face chart: ring too small");
  Point3 normal = ring_normal(face.ring);
  double nn = norm(normal);
  Point3 origin = face.ring[0];
  double span = 0.0;
  for (const Point3& p : face.ring) span = std::max(span, distance(origin, p));
  if (nn <= 1e-12 * span * span)
    throw std::invalid_argument("face chart: degenerate face " + std::to_string(face.id));
  Point3 w = (1.0 / nn) * normal;

  Point3 first_edge = face.ring[1] - origin;
  Point3 u = first_edge - dot(first_edge, w) * w;
  u = (1.0 / norm(u)) * u;
  Point3 v = cross(w, u);

  std::vector<Point2> flat;
  flat.reserve(face.ring.size());
  for (const Point3& p : face.ring) {
    double off = dot(p - origin, w);
    if (std::abs(off) > 1e-9 * std::max(span, 1e-300))
      throw std::invalid_argument("face chart: face " + std::to_string(face.id) +
                                  " is not planar within tolerance");
    flat.push_back({dot(p - origin, u), dot(p - origin, v)});
  }
  SimplePolygon poly(std::move(flat));
  if (poly.size() != static_cast<int>(face.ring.size()))
    throw std::invalid_argument("face chart: collinear ring vertices on face " +
                                std::to_string(face.id));
  return {face.id, origin, u, v, std::move(poly)};
}

inline std::vector<FaceChart> face_charts(const Prism& p) {
  std::vector<FaceChart> charts;
  for (const Face& f : prism_faces(p)) charts.push_back(make_face_chart(f));
  return charts;
}

struct DecompositionStrategy {
  enum class Kind { SingleSection, MultiSection };
  Kind kind = Kind::SingleSection;
  CutEdgePair cut_pair = CutEdgePair::MainDiagonal;
  int cuts = 0;  // MultiSection: number of parallel cut planes (>= 2)

  static DecompositionStrategy single(CutEdgePair pair = CutEdgePair::MainDiagonal) {
    return {Kind::SingleSection, pair, 0};
  }
  static DecompositionStrategy multi(int cuts) {
    if (cuts < 2)
      throw std::invalid_argument("MultiSection: need at least 2 parallel cuts");
    return {Kind::MultiSection, CutEdgePair::MainDiagonal, cuts};
  }
};

// Triangle soup with per-triangle face provenance. Vertices are merged only
// within one closed solid, so each hull keeps its own watertight boundary
// even where two hulls share a cut face.
struct SurfaceMesh {
  std::vector<Point3> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<int> face_ids;          // one per triangle
  double expected_area = 0.0;         // sum of source face areas, if known

  double total_area() const {
    double area = 0.0;
    for (const auto& t : triangles) {
      const Point3& a = vertices[static_cast<std::size_t>(t[0])];
      const Point3& b = vertices[static_cast<std::size_t>(t[1])];
      const Point3& c = vertices[static_cast<std::size_t>(t[2])];
      area += 0.5 * norm(cross(b - a, c - a));
    }
    return area;
  }
};

namespace detail {

// Accumulates one closed solid at a time; vertices merge within the active
// solid only.
class MeshBuilder {
 public:
  explicit MeshBuilder(double merge_tolerance) : merge_tol_(merge_tolerance) {}

  void begin_solid() { solid_start_ = static_cast<int>(mesh_.vertices.size()); }

  void add_face(const Face& face) {
    FaceChart chart = make_face_chart(face);
    Triangulation tri = triangulate_earclip(chart.polygon2d);
    std::vector<int> ids;
    ids.reserve(face.ring.size());
    for (const Point3& p : face.ring) ids.push_back(vertex_id(p));
    for (const auto& t : tri.triangles)
      mesh_.triangles.push_back({ids[static_cast<std::size_t>(t[0])],
                                 ids[static_cast<std::size_t>(t[1])],
                                 ids[static_cast<std::size_t>(t[2])]});
    for (std::size_t k = 0; k < tri.triangles.size(); ++k) mesh_.face_ids.push_back(face.id);
    mesh_.expected_area += face_area(face);
  }

  SurfaceMesh take() { return std::move(mesh_); }

 private:
  int vertex_id(const Point3& p) {
    for (int i = solid_start_; i < static_cast<int>(mesh_.vertices.size()); ++i) {
      if (distance(mesh_.vertices[static_cast<std::size_t>(i)], p) <= merge_tol_) return i;
    }
    mesh_.vertices.push_back(p);
    return static_cast<int>(mesh_.vertices.size()) - 1;
  }

  SurfaceMesh mesh_;
  double merge_tol_;
  int solid_start_ = 0;
};

inline std::vector<Box> slabs_for_multisection(const Box& box, int cuts) {
  std::vector<Box> slabs;
  double x0 = box.min_corner.x;
  double x1 = box.max_corner.x;
  int pieces = cuts + 1;
  for (int i = 0; i < pieces; ++i) {
    double a = x0 + (x1 - x0) * i / pieces;
    double b = x0 + (x1 - x0) * (i + 1) / pieces;
    slabs.emplace_back(Point3{a, box.min_corner.y, box.min_corner.z},
                       Point3{b, box.max_corner.y, box.max_corner.z});
  }
  return slabs;
}

}  // namespace detail

// Surface mesh of a box, decomposed per the strategy. SingleSection slices
// the box into two prisms along the diagonal cut and meshes each prism hull;
// MultiSection(k) cuts k parallel planes and meshes each of the k+1 slab
// hulls. Cut faces are retained on both sides so each hull stays watertight.
inline SurfaceMesh triangulate_solid_surface(const Box& box,
                                             const DecompositionStrategy& strategy) {
  detail::MeshBuilder builder(1e-9 * box.diagonal());
  if (strategy.kind == DecompositionStrategy::Kind::SingleSection) {
    auto [first, second] = slice_box(box, strategy.cut_pair);
    builder.begin_solid();
    for (const Face& f : prism_faces(first, 0)) builder.add_face(f);
    builder.begin_solid();
    for (const Face& f : prism_faces(second, 5)) builder.add_face(f);
  } else {
    std::vector<Box> slabs = detail::slabs_for_multisection(box, strategy.cuts);
    int id = 0;
    for (const Box& slab : slabs) {
      builder.begin_solid();
      for (const Face& f : box_faces(slab, id)) builder.add_face(f);
      id += 6;
    }
  }
  return builder.take();
}

// Composite solids: a list of boxes meshed independently into one soup.
inline SurfaceMesh triangulate_solids(const std::vector<Box>& boxes,
                                      const DecompositionStrategy& strategy) {
  SurfaceMesh out;
  for (const Box& box : boxes) {
    SurfaceMesh part = triangulate_solid_surface(box, strategy);
    int base = static_cast<int>(out.vertices.size());
    out.vertices.insert(out.vertices.end(), part.vertices.begin(), part.vertices.end());
    for (const auto& t : part.triangles)
      out.triangles.push_back({t[0] + base, t[1] + base, t[2] + base});
    out.face_ids.insert(out.face_ids.end(), part.face_ids.begin(), part.face_ids.end());
    out.expected_area += part.expected_area;
  }
  return out;
}

struct DecompositionCost {
  long triangles = 0;
  long faces = 0;

  friend bool operator<(DecompositionCost a, DecompositionCost b) {
    return a.triangles != b.triangles ? a.triangles < b.triangles : a.faces < b.faces;
  }
  friend bool operator==(DecompositionCost a, DecompositionCost b) {
    return a.triangles == b.triangles && a.faces == b.faces;
  }
};

// Triangle and face counts per strategy, from the face rings alone (each
// k-gon face triangulates into k-2 triangles); no mesh is built.
inline DecompositionCost decomposition_cost(const Box& box,
                                            const DecompositionStrategy& strategy) {
  DecompositionCost cost;
  auto count_faces = [&cost](const std::vector<Face>& faces) {
    for (const Face& f : faces) {
      cost.faces += 1;
      cost.triangles += static_cast<long>(f.ring.size()) - 2;
    }
  };
  if (strategy.kind == DecompositionStrategy::Kind::SingleSection) {
    auto [first, second] = slice_box(box, strategy.cut_pair);
    count_faces(prism_faces(first));
    count_faces(prism_faces(second));
  } else {
    for (const Box& slab : detail::slabs_for_multisection(box, strategy.cuts))
      count_faces(box_faces(slab));
  }
  return cost;
}

// Mesh audit: edge manifoldness (every edge in exactly two triangles), no
// degenerate triangles, and total area against the expected source area.
// Failures are report entries, never exceptions.
inline VerificationReport verify_mesh(const SurfaceMesh& mesh, double expected_area = -1.0) {
  VerificationReport report;
  if (expected_area < 0.0) expected_area = mesh.expected_area;

  long bad_indices = 0;
  int vcount = static_cast<int>(mesh.vertices.size());
  for (const auto& t : mesh.triangles)
    for (int v : t)
      if (v < 0 || v >= vcount) ++bad_indices;
  report.add("indices_valid", bad_indices == 0,
             bad_indices ? std::to_string(bad_indices) + " out-of-range vertex references" : "",
             bad_indices);
  if (bad_indices > 0) return report;

  std::map<std::pair<int, int>, int> edge_use;
  for (const auto& t : mesh.triangles) {
    for (int e = 0; e < 3; ++e) {
      int u = t[static_cast<std::size_t>(e)];
      int v = t[static_cast<std::size_t>((e + 1) % 3)];
      edge_use[{std::min(u, v), std::max(u, v)}] += 1;
    }
  }
  long bad_edges = 0;
  for (const auto& [edge, uses] : edge_use)
    if (uses != 2) ++bad_edges;
  report.add("edge_manifold", bad_edges == 0,
             bad_edges ? std::to_string(bad_edges) + " edges not shared by exactly 2 triangles"
                       : "",
             bad_edges);

  Point3 lo = mesh.vertices.empty() ? Point3{} : mesh.vertices.front();
  Point3 hi = lo;
  for (const Point3& p : mesh.vertices) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  double diag = distance(lo, hi);
  double area_eps = 1e-12 * std::max(diag * diag, 1e-300);
  long degenerate = 0;
  for (const auto& t : mesh.triangles) {
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      ++degenerate;
      continue;
    }
    const Point3& a = mesh.vertices[static_cast<std::size_t>(t[0])];
    const Point3& b = mesh.vertices[static_cast<std::size_t>(t[1])];
    const Point3& c = mesh.vertices[static_cast<std::size_t>(t[2])];
    if (0.5 * norm(cross(b - a, c - a)) <= area_eps) ++degenerate;
  }
  report.add("no_degenerate_triangles", degenerate == 0,
             degenerate ? std::to_string(degenerate) + " degenerate triangles" : "", degenerate);

  if (expected_area > 0.0) {
    double total = mesh.total_area();
    bool ok = std::abs(total - expected_area) <= 1e-9 * expected_area;
    report.add("total_area", ok,
               "expected " + std::to_string(expected_area) + ", got " + std::to_string(total));
  }
  return report;
}

}  // namespace trigeo
