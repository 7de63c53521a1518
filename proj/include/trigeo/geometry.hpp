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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trigeo {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
};

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Point3 operator+(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Point3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Point3 operator*(double s, Point3 p) { return {s * p.x, s * p.y, s * p.z}; }
  friend bool operator==(Point3 a, Point3 b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
};

inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }
inline bool is_finite(Point3 p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 p) { return std::sqrt(p.x * p.x + p.y * p.y); }
inline double distance(Point2 a, Point2 b) { return norm(b - a); }

inline double dot(Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Point3 cross(Point3 a, Point3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Point3 p) { return std::sqrt(dot(p, p)); }
inline double distance(Point3 a, Point3 b) { return norm(b - a); }

// Cross product (q - p) x (r - p); positive for a left turn.
inline double cross(Point2 p, Point2 q, Point2 r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

struct BoundingBox2 {
  Point2 min{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Point2 max{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};

  void expand(Point2 p) {
    min.x = std::min(min.x, p.x);
    min.y = std::min(min.y, p.y);
    max.x = std::max(max.x, p.x);
    max.y = std::max(max.y, p.y);
  }
  bool valid() const { return min.x <= max.x && min.y <= max.y; }
  double diagonal() const { return valid() ? distance(min, max) : 0.0; }
  Point2 center() const { return {0.5 * (min.x + max.x), 0.5 * (min.y + max.y)}; }

  static BoundingBox2 of(std::span<const Point2> pts) {
    BoundingBox2 b;
    for (Point2 p : pts) b.expand(p);
    return b;
  }
};

// Relative tolerance attached to the scale of the active input (its
// bounding-box diagonal). Length comparisons use geometric(); predicates on
// cross products multiply in the relevant edge length as well.
struct Tolerance {
  double epsilon_rel = 1e-9;
  double scale = 1.0;

  double geometric() const { return epsilon_rel * scale; }

  static Tolerance for_span(std::span<const Point2> pts, double epsilon_rel = 1e-9) {
    double d = BoundingBox2::of(pts).diagonal();
    return {epsilon_rel, d > 0.0 ? d : 1.0};
  }
};

enum class Orientation { CCW, CW, Collinear };

// Sign of (q-p) x (r-p), snapped to Collinear inside the tolerance band
// (scaled by the longest edge of the triple).
inline Orientation orientation(Point2 p, Point2 q, Point2 r, const Tolerance& tol = {}) {
  double c = cross(p, q, r);
  double longest = std::max({distance(p, q), distance(p, r), distance(q, r)});
  if (std::abs(c) <= tol.geometric() * longest) return Orientation::Collinear;
  return c > 0.0 ? Orientation::CCW : Orientation::CW;
}

// Shoelace area of a closed ring, with the ring translated to its bounding
// box center and summed with Neumaier compensation. Both keep the result
// accurate for rings far from the origin or with many vertices.
inline double signed_area(std::span<const Point2> ring) {
  if (ring.size() < 3) return 0.0;
  Point2 ref = BoundingBox2::of(ring).center();
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t i = 0, n = ring.size(); i < n; ++i) {
    Point2 a = ring[i] - ref;
    Point2 b = ring[(i + 1) % n] - ref;
    double term = cross(a, b);
    double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
  }
  return 0.5 * (sum + comp);
}

enum class PointLocation { Inside, OnBoundary, Outside };

struct Triangle2 {
  Point2 a, b, c;

  Triangle2(Point2 a_, Point2 b_, Point2 c_, const Tolerance& tol = {}) : a(a_), b(b_), c(c_) {
    if (!is_finite(a) || !is_finite(b) || !is_finite(c))
      throw std::invalid_argument("Triangle2: non-finite vertex");
    if (orientation(a, b, c, tol) == Orientation::Collinear)
      throw std::invalid_argument("Triangle2: degenerate (collinear vertices)");
  }

  double area() const { return 0.5 * std::abs(cross(a, b, c)); }
};

inline PointLocation point_in_triangle(Point2 p, const Triangle2& t, const Tolerance& tol = {}) {
  Orientation w = orientation(t.a, t.b, t.c, tol);
  Orientation s1 = orientation(t.a, t.b, p, tol);
  Orientation s2 = orientation(t.b, t.c, p, tol);
  Orientation s3 = orientation(t.c, t.a, p, tol);
  Orientation opposite = (w == Orientation::CCW) ? Orientation::CW : Orientation::CCW;
  if (s1 == opposite || s2 == opposite || s3 == opposite) return PointLocation::Outside;
  if (s1 == Orientation::Collinear || s2 == Orientation::Collinear ||
      s3 == Orientation::Collinear)
    return PointLocation::OnBoundary;
  return PointLocation::Inside;
}

// |AB| + |BC| - |AC|, the detour cost of visiting B between A and C.
// Zero exactly when B lies on segment AC.
inline double triangle_inequality_gain(Point2 a, Point2 b, Point2 c) {
  double gain = distance(a, b) + distance(b, c) - distance(a, c);
  return std::max(gain, 0.0);
}

namespace detail {

inline bool on_segment_given_collinear(Point2 p, Point2 a, Point2 b, const Tolerance& tol) {
  double eps = tol.geometric();
  return p.x >= std::min(a.x, b.x) - eps && p.x <= std::max(a.x, b.x) + eps &&
         p.y >= std::min(a.y, b.y) - eps && p.y <= std::max(a.y, b.y) + eps;
}

}  // namespace detail

// Any contact between closed segments ab and cd: proper crossing, endpoint
// touch, or collinear overlap.
inline bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d, const Tolerance& tol = {}) {
  Orientation d1 = orientation(c, d, a, tol);
  Orientation d2 = orientation(c, d, b, tol);
  Orientation d3 = orientation(a, b, c, tol);
  Orientation d4 = orientation(a, b, d, tol);
  if (d1 != Orientation::Collinear && d2 != Orientation::Collinear && d1 != d2 &&
      d3 != Orientation::Collinear && d4 != Orientation::Collinear && d3 != d4)
    return true;
  if (d1 == Orientation::Collinear && detail::on_segment_given_collinear(a, c, d, tol)) return true;
  if (d2 == Orientation::Collinear && detail::on_segment_given_collinear(b, c, d, tol)) return true;
  if (d3 == Orientation::Collinear && detail::on_segment_given_collinear(c, a, b, tol)) return true;
  if (d4 == Orientation::Collinear && detail::on_segment_given_collinear(d, a, b, tol)) return true;
  return false;
}

// Strict interior crossing only; shared endpoints and collinear touches do
// not count.
inline bool segments_properly_cross(Point2 a, Point2 b, Point2 c, Point2 d,
                                    const Tolerance& tol = {}) {
  Orientation d1 = orientation(c, d, a, tol);
  Orientation d2 = orientation(c, d, b, tol);
  Orientation d3 = orientation(a, b, c, tol);
  Orientation d4 = orientation(a, b, d, tol);
  return d1 != Orientation::Collinear && d2 != Orientation::Collinear && d1 != d2 &&
         d3 != Orientation::Collinear && d4 != Orientation::Collinear && d3 != d4;
}

// Outcome of a simplicity test over a raw vertex ring.
struct SimplicityCheck {
  bool simple = false;
  // First non-adjacent edge pair that intersects, as (edge i, edge j).
  std::optional<std::pair<int, int>> violating_edges;
  // First coincident vertex pair, if any.
  std::optional<std::pair<int, int>> duplicate_vertices;
};

// O(n^2) pairwise test: duplicate vertices and non-adjacent edge contacts.
inline SimplicityCheck is_simple(std::span<const Point2> ring) {
  SimplicityCheck out;
  int n = static_cast<int>(ring.size());
  if (n < 3) throw std::invalid_argument("is_simple: need at least 3 vertices");
  Tolerance tol = Tolerance::for_span(ring);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (distance(ring[i], ring[j]) <= tol.geometric()) {
        out.duplicate_vertices = {i, j};
        return out;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_intersect(ring[i], ring[(i + 1) % n], ring[j], ring[(j + 1) % n], tol)) {
        out.violating_edges = {i, j};
        return out;
      }
    }
  }
  out.simple = true;
  return out;
}

// Construction-time validation level. TrustSimple skips the quadratic
// duplicate and self-intersection scans; generators that produce provably
// simple rings (regular polygons, star-shaped samples) use it.
enum class Validate { Full, TrustSimple };

// Jordan polygon: closed non-self-intersecting vertex ring, stored
// counterclockwise with collinear runs merged away.
class SimplePolygon {
 public:
  explicit SimplePolygon(std::vector<Point2> vertices, Validate mode = Validate::Full,
                         double epsilon_rel = 1e-9) {
    if (vertices.size() < 3)
      throw std::invalid_argument("SimplePolygon: need at least 3 vertices");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (!is_finite(vertices[i]))
        throw std::invalid_argument("SimplePolygon: non-finite vertex at index " +
                                    std::to_string(i));
    }
    tol_ = Tolerance::for_span(vertices, epsilon_rel);

    // Coincident vertices are a hard error, never merged: silently merging
    // would change n and with it every count derived from it.
    if (mode == Validate::Full) {
      for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
          if (distance(vertices[i], vertices[j]) <= tol_.geometric())
            throw std::invalid_argument("SimplePolygon: duplicate vertices at indices " +
                                        std::to_string(i) + " and " + std::to_string(j));
    } else {
      for (std::size_t i = 0; i < vertices.size(); ++i)
        if (distance(vertices[i], vertices[(i + 1) % vertices.size()]) <= tol_.geometric())
          throw std::invalid_argument("SimplePolygon: duplicate adjacent vertices at index " +
                                      std::to_string(i));
    }

    merge_collinear(vertices);
    if (vertices.size() < 3)
      throw std::invalid_argument("SimplePolygon: degenerate after collinear merge");

    if (mode == Validate::Full) {
      SimplicityCheck check = is_simple(vertices);
      if (!check.simple) {
        if (check.violating_edges)
          throw std::invalid_argument(
              "SimplePolygon: self-intersection between edges " +
              std::to_string(check.violating_edges->first) + " and " +
              std::to_string(check.violating_edges->second));
        throw std::invalid_argument("SimplePolygon: duplicate vertices");
      }
    }

    double area = trigeo::signed_area(vertices);
    if (area < 0.0) std::reverse(vertices.begin(), vertices.end());
    vertices_ = std::move(vertices);
  }

  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Point2>& vertices() const { return vertices_; }
  Point2 vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }
  Point2 operator[](int i) const { return vertices_[static_cast<std::size_t>(i)]; }
  int next(int i) const { return i + 1 == size() ? 0 : i + 1; }
  int prev(int i) const { return i == 0 ? size() - 1 : i - 1; }
  const Tolerance& tolerance() const { return tol_; }
  BoundingBox2 bounds() const { return BoundingBox2::of(vertices_); }

 private:
  void merge_collinear(std::vector<Point2>& v) {
    // Iterate to a fixpoint: removing one vertex can expose a new run.
    bool removed = true;
    while (removed && v.size() > 3) {
      removed = false;
      for (std::size_t i = 0; i < v.size() && v.size() > 3; ++i) {
        std::size_t p = (i + v.size() - 1) % v.size();
        std::size_t nx = (i + 1) % v.size();
        if (orientation(v[p], v[i], v[nx], tol_) == Orientation::Collinear) {
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
          removed = true;
          --i;
        }
      }
    }
    if (v.size() == 3 && orientation(v[0], v[1], v[2], tol_) == Orientation::Collinear)
      v.clear();
  }

  std::vector<Point2> vertices_;
  Tolerance tol_;
};

inline double signed_area(const SimplePolygon& poly) {
  return signed_area(std::span<const Point2>(poly.vertices()));
}

// Crossing-number point location with an explicit boundary band.
inline PointLocation point_in_polygon(Point2 p, const SimplePolygon& poly) {
  const Tolerance& tol = poly.tolerance();
  int n = poly.size();
  for (int i = 0; i < n; ++i) {
    Point2 a = poly[i];
    Point2 b = poly[poly.next(i)];
    if (orientation(a, b, p, tol) == Orientation::Collinear &&
        detail::on_segment_given_collinear(p, a, b, tol))
      return PointLocation::OnBoundary;
  }
  bool inside = false;
  for (int i = 0; i < n; ++i) {
    Point2 a = poly[i];
    Point2 b = poly[poly.next(i)];
    if ((a.y > p.y) != (b.y > p.y)) {
      double x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside ? PointLocation::Inside : PointLocation::Outside;
}

}  // namespace trigeo
