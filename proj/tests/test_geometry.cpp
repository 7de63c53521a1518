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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "trigeo/geometry.hpp"
#include "trigeo/random_polygon.hpp"
#include "trigeo/rng.hpp"

using namespace trigeo;

TEST_CASE("orientation basic cases") {
  CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == Orientation::CCW);
  CHECK(orientation({0, 0}, {1, 0}, {2, 0}) == Orientation::Collinear);
  CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == Orientation::CW);
}

TEST_CASE("orientation antisymmetry on random triples") {
  SplitMix64 rng(42);
  for (int k = 0; k < 2000; ++k) {
    Point2 p{rng.next_unit() * 10, rng.next_unit() * 10};
    Point2 q{rng.next_unit() * 10, rng.next_unit() * 10};
    Point2 r{rng.next_unit() * 10, rng.next_unit() * 10};
    Orientation o1 = orientation(p, q, r);
    Orientation o2 = orientation(p, r, q);
    if (o1 == Orientation::Collinear) {
      CHECK(o2 == Orientation::Collinear);
    } else {
      CHECK(o1 != o2);
      CHECK(o2 != Orientation::Collinear);
    }
  }
}

TEST_CASE("signed_area fixtures") {
  SimplePolygon square({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(signed_area(square) == Catch::Approx(1.0).epsilon(1e-12));

  SimplePolygon tri({{0, 0}, {4, 0}, {0, 3}});
  CHECK(signed_area(tri) == Catch::Approx(6.0).epsilon(1e-12));

  SimplePolygon hexagon = regular_polygon(6);
  CHECK(signed_area(hexagon) == Catch::Approx(2.598076211353316).epsilon(1e-12));
}

TEST_CASE("signed_area is positive and translation invariant") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    SimplePolygon poly = random_star_polygon(20, seed);
    double base = signed_area(poly);
    CHECK(base > 0.0);
    std::vector<Point2> shifted;
    for (Point2 p : poly.vertices()) shifted.push_back(p + Point2{1e6, -2e6});
    double far = signed_area(std::span<const Point2>(shifted));
    CHECK(far == Catch::Approx(base).epsilon(1e-9));
  }
}

TEST_CASE("is_simple fixtures") {
  std::vector<Point2> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(is_simple(square).simple);

  std::vector<Point2> bowtie{{0, 0}, {2, 2}, {2, 0}, {0, 2}};
  SimplicityCheck check = is_simple(bowtie);
  CHECK_FALSE(check.simple);
  REQUIRE(check.violating_edges.has_value());
  CHECK(check.violating_edges->first == 0);
  CHECK(check.violating_edges->second == 2);

  std::vector<Point2> dup{{0, 0}, {1, 0}, {1, 1}, {0, 0}};
  SimplicityCheck dcheck = is_simple(dup);
  CHECK_FALSE(dcheck.simple);
  REQUIRE(dcheck.duplicate_vertices.has_value());
}

TEST_CASE("is_simple agrees with brute-force oracle") {
  int simple_count = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    SimplePolygon star = random_star_polygon(50, seed);
    CHECK(is_simple(star.vertices()).simple);
    CHECK(oracle::ring_is_simple(star.vertices()));
  }
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    std::vector<Point2> ring = random_ring(12, seed);
    bool expect = oracle::ring_is_simple(ring);
    if (!expect) ++simple_count;
    CHECK(is_simple(ring).simple == expect);
  }
  // Random rings self-intersect almost always; make sure the corpus did.
  CHECK(simple_count > 900);
}

TEST_CASE("point_in_triangle classification") {
  Triangle2 t({0, 0}, {1, 0}, {0, 1});
  CHECK(point_in_triangle({0.25, 0.25}, t) == PointLocation::Inside);
  CHECK(point_in_triangle({0.5, 0.5}, t) == PointLocation::OnBoundary);
  CHECK(point_in_triangle({2, 2}, t) == PointLocation::Outside);
  CHECK(point_in_triangle({0, 0}, t) == PointLocation::OnBoundary);
  CHECK(point_in_triangle({0.5, 0}, t) == PointLocation::OnBoundary);
}

TEST_CASE("triangle_inequality_gain") {
  CHECK(triangle_inequality_gain({0, 0}, {3, 0}, {3, 4}) == Catch::Approx(2.0).epsilon(1e-12));
  CHECK(triangle_inequality_gain({0, 0}, {1, 0}, {2, 0}) == 0.0);
  CHECK(triangle_inequality_gain({0, 0}, {1, 5}, {2, 0}) ==
        Catch::Approx(8.198039027185569).epsilon(1e-12));
}

TEST_CASE("triangle_inequality_gain is non-negative, zero iff between") {
  SplitMix64 rng(7);
  for (int k = 0; k < 5000; ++k) {
    Point2 a{rng.next_unit() * 20 - 10, rng.next_unit() * 20 - 10};
    Point2 b{rng.next_unit() * 20 - 10, rng.next_unit() * 20 - 10};
    Point2 c{rng.next_unit() * 20 - 10, rng.next_unit() * 20 - 10};
    double gain = triangle_inequality_gain(a, b, c);
    CHECK(gain >= 0.0);
    double direct = oracle::dist(a, b) + oracle::dist(b, c) - oracle::dist(a, c);
    CHECK(gain == Catch::Approx(std::max(direct, 0.0)).margin(1e-12));
  }
  // Exact between case.
  CHECK(triangle_inequality_gain({-3, -3}, {0, 0}, {3, 3}) == 0.0);
}

TEST_CASE("polygon construction normalizes orientation") {
  SimplePolygon cw({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
  CHECK(signed_area(cw) > 0.0);
  CHECK(cw.size() == 4);
}

TEST_CASE("polygon construction merges collinear runs") {
  SimplePolygon poly({{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}});
  CHECK(poly.size() == 4);
  for (int i = 0; i < poly.size(); ++i) {
    Orientation o = orientation(poly[poly.prev(i)], poly[i], poly[poly.next(i)],
                                poly.tolerance());
    CHECK(o != Orientation::Collinear);
  }
}

TEST_CASE("polygon construction rejects bad input") {
  CHECK_THROWS_AS(SimplePolygon({{0, 0}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SimplePolygon({{0, 0}, {1, 0}, {1, 0}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SimplePolygon({{0, 0}, {2, 2}, {2, 0}, {0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(SimplePolygon({{0, 0}, {1, 0}, {2, 0}}), std::invalid_argument);
  double nan = std::nan("");
  CHECK_THROWS_AS(SimplePolygon({{0, 0}, {1, nan}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("point_in_polygon on an L-shape") {
  SimplePolygon ell({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
  CHECK(point_in_polygon({0.5, 0.5}, ell) == PointLocation::Inside);
  CHECK(point_in_polygon({1.5, 1.5}, ell) == PointLocation::Outside);
  CHECK(point_in_polygon({1.0, 0.5}, ell) == PointLocation::Inside);
  CHECK(point_in_polygon({1.0, 1.5}, ell) == PointLocation::OnBoundary);
  CHECK(point_in_polygon({5, 5}, ell) == PointLocation::Outside);
}
