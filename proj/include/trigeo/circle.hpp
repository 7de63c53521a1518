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

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "trigeo/geometry.hpp"

namespace trigeo {

struct Circle {
  Point2 center;
  double radius = 1.0;

  Circle() = default;
  Circle(Point2 c, double r) : center(c), radius(r) {
    if (!is_finite(c) || !std::isfinite(r) || r <= 0.0)
      throw std::invalid_argument("Circle: radius must be positive and finite");
  }

  double area() const { return std::numbers::pi * radius * radius; }
};

// How well the inscribed polygon covers the disc as vertices are added.
// The first entry (n = 3) has no predecessor, so its gain is empty.
struct CoverageEntry {
  int n = 0;
  double ratio = 0.0;
  std::optional<double> marginal_gain;
};

struct CoverageCurve {
  std::vector<CoverageEntry> entries;
};

// Regular n-gon with vertex k at angle phase + 2*pi*k/n on the circumference.
inline SimplePolygon inscribed_polygon(const Circle& c, int n, double phase = 0.0) {
  if (n < 3) throw std::invalid_argument("inscribed_polygon: need at least 3 vertices");
  std::vector<Point2> vertices;
  vertices.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    double angle = phase + 2.0 * std::numbers::pi * k / n;
    vertices.push_back(
        {c.center.x + c.radius * std::cos(angle), c.center.y + c.radius * std::sin(angle)});
  }
  // Regular spacing keeps every consecutive triple strictly convex, so the
  // quadratic simplicity scan is unnecessary even for large n.
  return SimplePolygon(std::move(vertices), Validate::TrustSimple);
}

// Area of an explicit inscribed polygon over the disc area.
inline double coverage_ratio(const Circle& c, const SimplePolygon& polygon) {
  return signed_area(polygon) / c.area();
}

// Area of the regular inscribed n-gon over the disc area, computed from the
// constructed polygon's shoelace area rather than the closed form.
inline double coverage_ratio(const Circle& c, int n) {
  return coverage_ratio(c, inscribed_polygon(c, n));
}

inline CoverageCurve marginal_gain_curve(const Circle& c, int n_max) {
  if (n_max < 4) throw std::invalid_argument("marginal_gain_curve: n_max must be at least 4");
  CoverageCurve curve;
  curve.entries.reserve(static_cast<std::size_t>(n_max - 2));
  double previous = 0.0;
  for (int n = 3; n <= n_max; ++n) {
    double ratio = coverage_ratio(c, n);
    CoverageEntry entry{n, ratio, std::nullopt};
    if (n > 3) entry.marginal_gain = ratio - previous;
    curve.entries.push_back(entry);
    previous = ratio;
  }
  return curve;
}

// Smallest n >= 3 whose coverage ratio reaches the target; the ratio is
// strictly increasing toward 1, so a forward scan terminates.
inline int min_vertices_for_ratio(const Circle& c, double target) {
  if (!(target > 0.0 && target < 1.0))
    throw std::invalid_argument("min_vertices_for_ratio: target must lie in (0, 1)");
  int n = 3;
  while (coverage_ratio(c, n) < target) ++n;
  return n;
}

}  // namespace trigeo
