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
#include <cstdint>
#include <numbers>
#include <vector>

#include "trigeo/geometry.hpp"
#include "trigeo/rng.hpp"

namespace trigeo {

// Random simple polygon, star-shaped around the origin: sorted distinct
// angles with bounded gaps, one random radius per angle. Every cyclic
// angular gap must stay below pi, otherwise the origin leaves the kernel
// and the closing chord can cross earlier edges; with the gap bound the
// construction is provably simple and validation is skipped. Retries with
// a derived seed until no vertex falls to a collinear merge, which keeps
// the returned polygon at exactly n vertices.
inline SimplePolygon random_star_polygon(int n, std::uint64_t seed, double min_radius = 0.3,
                                         double max_radius = 1.0) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    SplitMix64 rng(derive_seed(seed, 0x5741u, attempt));
    std::vector<double> angles(static_cast<std::size_t>(n));
    for (double& a : angles) a = 2.0 * std::numbers::pi * rng.next_unit();
    std::sort(angles.begin(), angles.end());

    double min_gap = 1e-4 * 2.0 * std::numbers::pi / n;
    double max_gap = 0.95 * std::numbers::pi;
    bool gaps_ok = true;
    for (int i = 0; i < n; ++i) {
      double next = (i + 1 < n) ? angles[static_cast<std::size_t>(i + 1)]
                                : angles[0] + 2.0 * std::numbers::pi;
      double gap = next - angles[static_cast<std::size_t>(i)];
      if (gap < min_gap || gap > max_gap) {
        gaps_ok = false;
        break;
      }
    }
    if (!gaps_ok) continue;

    std::vector<Point2> vertices;
    vertices.reserve(static_cast<std::size_t>(n));
    for (double a : angles) {
      double r = min_radius + (max_radius - min_radius) * rng.next_unit();
      vertices.push_back({r * std::cos(a), r * std::sin(a)});
    }
    try {
      SimplePolygon poly(std::move(vertices), Validate::TrustSimple);
      if (poly.size() == n) return poly;
    } catch (const std::invalid_argument&) {
      // fell below 3 vertices or hit a coincidence; retry with the next seed
    }
  }
}

// Random closed ring with no structure at all; almost always self-crosses
// for n >= 4. Used to exercise the negative side of simplicity testing.
inline std::vector<Point2> random_ring(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Point2> vertices;
  vertices.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    vertices.push_back({rng.next_unit(), rng.next_unit()});
  return vertices;
}

// Regular convex n-gon of the given radius; handy as a convex fixture.
inline SimplePolygon regular_polygon(int n, double radius = 1.0, Point2 center = {}) {
  std::vector<Point2> vertices;
  vertices.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    double angle = 2.0 * std::numbers::pi * k / n;
    vertices.push_back({center.x + radius * std::cos(angle), center.y + radius * std::sin(angle)});
  }
  return SimplePolygon(std::move(vertices), Validate::TrustSimple);
}

}  // namespace trigeo
