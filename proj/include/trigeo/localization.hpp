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
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigeo/geometry.hpp"
#include "trigeo/rng.hpp"

namespace trigeo {

class DegenerateGeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Tower {
  std::string id;
  Point2 pos;
};

struct Tower3 {
  std::string id;
  Point3 pos;
};

namespace detail {

template <typename T>
void validate_towers_common(const std::vector<T>& towers) {
  if (towers.size() < 3)
    throw std::invalid_argument("TowerScene: need at least 3 towers");
  for (const T& t : towers)
    if (!is_finite(t.pos))
      throw std::invalid_argument("TowerScene: non-finite position for tower '" + t.id + "'");
  for (std::size_t i = 0; i < towers.size(); ++i)
    for (std::size_t j = i + 1; j < towers.size(); ++j)
      if (distance(towers[i].pos, towers[j].pos) == 0.0)
        throw std::invalid_argument("TowerScene: towers '" + towers[i].id + "' and '" +
                                    towers[j].id + "' coincide");
}

inline bool all_collinear(const std::vector<Tower>& towers) {
  Point2 a = towers[0].pos;
  Point2 b = a;
  double best = 0.0;
  for (const Tower& t : towers) {
    double d = distance(a, t.pos);
    if (d > best) {
      best = d;
      b = t.pos;
    }
  }
  if (best == 0.0) return true;
  for (const Tower& t : towers) {
    if (std::abs(cross(a, b, t.pos)) > 1e-12 * best * best) return false;
  }
  return true;
}

}  // namespace detail

struct TowerScene {
  std::vector<Tower> towers;

  explicit TowerScene(std::vector<Tower> t) : towers(std::move(t)) {
    detail::validate_towers_common(towers);
    if (detail::all_collinear(towers))
      throw DegenerateGeometryError("TowerScene: towers are collinear");
  }

  Point2 centroid() const {
    Point2 c{0, 0};
    for (const Tower& t : towers) c = c + t.pos;
    return (1.0 / static_cast<double>(towers.size())) * c;
  }

  double diagonal() const {
    BoundingBox2 b;
    for (const Tower& t : towers) b.expand(t.pos);
    return b.diagonal();
  }
};

struct TowerScene3 {
  std::vector<Tower3> towers;

  explicit TowerScene3(std::vector<Tower3> t) : towers(std::move(t)) {
    detail::validate_towers_common(towers);
  }
};

// Measured (or simulated) range per tower, aligned with the scene's tower
// order. sigma/seed record how simulated sets were drawn so a run can be
// replayed from its files.
struct RangeSet {
  std::vector<double> ranges;
  double noise_sigma = 0.0;
  std::uint64_t seed = 0;
  bool simulated = false;
};

// range_i = max(0, |true_pos - tower_i| + g_i) with g_i drawn i.i.d. from
// Gaussian(0, sigma) per tower, in tower order, from a SplitMix64 stream.
inline RangeSet simulate_ranges(const TowerScene& scene, Point2 true_pos, double sigma,
                                std::uint64_t seed) {
  if (sigma < 0.0) throw std::invalid_argument("simulate_ranges: sigma must be non-negative");
  if (!is_finite(true_pos)) throw std::invalid_argument("simulate_ranges: non-finite position");
  RangeSet out;
  out.noise_sigma = sigma;
  out.seed = seed;
  out.simulated = true;
  out.ranges.reserve(scene.towers.size());
  SplitMix64 rng(seed);
  for (const Tower& t : scene.towers) {
    double noise = sigma > 0.0 ? sigma * rng.next_normal() : 0.0;
    out.ranges.push_back(std::max(0.0, distance(true_pos, t.pos) + noise));
  }
  return out;
}

struct PositionEstimate {
  Point2 position;
  std::vector<double> residuals;  // measured - predicted, per tower
  double rms_residual = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<std::string> towers_used;
  std::vector<double> objective_trace;  // accepted sum-of-squares values
};

namespace detail {

struct Sym2 {
  double a = 0, b = 0, c = 0;  // [[a, b], [b, c]]
  double det() const { return a * c - b * b; }
};

inline std::optional<Point2> solve_sym2(const Sym2& m, Point2 rhs) {
  double d = m.det();
  double scale = std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c)});
  if (!(std::abs(d) > 1e-14 * scale * scale)) return std::nullopt;
  return Point2{(m.c * rhs.x - m.b * rhs.y) / d, (m.a * rhs.y - m.b * rhs.x) / d};
}

inline double sum_squared_residuals(const std::vector<Tower>& towers,
                                    const std::vector<double>& ranges, Point2 p) {
  double ssr = 0.0;
  for (std::size_t i = 0; i < towers.size(); ++i) {
    double r = distance(p, towers[i].pos) - ranges[i];
    ssr += r * r;
  }
  return ssr;
}

}  // namespace detail

// Damped Gauss-Newton fit of sum_i (|p - tower_i| - range_i)^2 starting at
// the tower centroid (or the given init). The damping factor shrinks after
// each accepted step and grows on rejection, so the objective never
// increases between accepted iterates.
inline PositionEstimate solve_position(const TowerScene& scene, const RangeSet& ranges,
                                       std::optional<Point2> init = std::nullopt) {
  const std::vector<Tower>& towers = scene.towers;
  if (ranges.ranges.size() != towers.size())
    throw std::invalid_argument("solve_position: one range per tower required");
  for (double r : ranges.ranges)
    if (!(r >= 0.0) || !std::isfinite(r))
      throw std::invalid_argument("solve_position: ranges must be finite and non-negative");

  double diag = scene.diagonal();
  double step_tol = 1e-10 * diag;
  double tiny = 1e-14 * diag;

  PositionEstimate est;
  Point2 p = init.value_or(scene.centroid());
  double lambda = 1e-3;
  double ssr = detail::sum_squared_residuals(towers, ranges.ranges, p);
  est.objective_trace.push_back(ssr);

  const int max_iterations = 100;
  for (int iter = 1; iter <= max_iterations; ++iter) {
    est.iterations = iter;
    detail::Sym2 h;
    Point2 g{0, 0};
    for (std::size_t i = 0; i < towers.size(); ++i) {
      Point2 d = p - towers[i].pos;
      double dist = norm(d);
      if (dist <= tiny) continue;  // gradient of |p - t| is undefined at t
      Point2 u = (1.0 / dist) * d;
      double f = dist - ranges.ranges[i];
      h.a += u.x * u.x;
      h.b += u.x * u.y;
      h.c += u.y * u.y;
      g.x += u.x * f;
      g.y += u.y * f;
    }

    bool accepted = false;
    Point2 step{0, 0};
    while (lambda <= 1e14) {
      auto delta = detail::solve_sym2({h.a + lambda, h.b, h.c + lambda}, {-g.x, -g.y});
      if (!delta) {
        lambda *= 4.0;
        continue;
      }
      Point2 candidate = p + *delta;
      double candidate_ssr = detail::sum_squared_residuals(towers, ranges.ranges, candidate);
      if (candidate_ssr <= ssr) {
        p = candidate;
        ssr = candidate_ssr;
        step = *delta;
        lambda = std::max(lambda / 3.0, 1e-14);
        accepted = true;
        est.objective_trace.push_back(ssr);
        break;
      }
      lambda *= 4.0;
    }
    if (!accepted) {
      est.converged = false;
      break;
    }
    if (norm(step) < step_tol) {
      est.converged = true;
      break;
    }
    if (iter == max_iterations) est.converged = false;
  }

  est.position = p;
  est.residuals.reserve(towers.size());
  double sq = 0.0;
  for (std::size_t i = 0; i < towers.size(); ++i) {
    double r = ranges.ranges[i] - distance(p, towers[i].pos);
    est.residuals.push_back(r);
    sq += r * r;
  }
  est.rms_residual = std::sqrt(sq / static_cast<double>(towers.size()));
  est.towers_used.reserve(towers.size());
  for (const Tower& t : towers) est.towers_used.push_back(t.id);
  return est;
}

struct TwoRoundResult {
  PositionEstimate first_round;  // all towers
  PositionEstimate refined;      // 3 towers with smallest first-round |residual|
};

// Coarse fix from every tower, then a refinement restricted to the three
// towers the first round fitted best (smallest |residual|, ties by id),
// started from the first-round estimate.
inline TwoRoundResult two_round_locate(const TowerScene& scene, const RangeSet& ranges) {
  if (scene.towers.size() < 4)
    throw std::invalid_argument("two_round_locate: need at least 4 towers");
  TwoRoundResult out;
  out.first_round = solve_position(scene, ranges);

  std::vector<std::size_t> order(scene.towers.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    double ra = std::abs(out.first_round.residuals[a]);
    double rb = std::abs(out.first_round.residuals[b]);
    if (ra != rb) return ra < rb;
    return scene.towers[a].id < scene.towers[b].id;
  });

  std::vector<Tower> selected;
  RangeSet sub;
  sub.noise_sigma = ranges.noise_sigma;
  sub.seed = ranges.seed;
  sub.simulated = ranges.simulated;
  for (std::size_t k = 0; k < 3; ++k) {
    selected.push_back(scene.towers[order[k]]);
    sub.ranges.push_back(ranges.ranges[order[k]]);
  }
  TowerScene sub_scene(std::move(selected));
  out.refined = solve_position(sub_scene, sub, out.first_round.position);
  return out;
}

struct AccuracyMapPoint {
  Point2 pos;
  double analytic = 0.0;  // sqrt(trace((J^T J)^-1)) * sigma
  double rmse = std::numeric_limits<double>::quiet_NaN();
  bool degenerate = false;
};

struct AccuracyMap {
  std::vector<AccuracyMapPoint> points;  // row-major, y outer, x inner
  int nx = 0;
  int ny = 0;
  double sigma = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
};

// Predicted and (optionally) simulated position error over a grid. The
// analytic metric is the horizontal dilution of precision scaled by sigma;
// the Monte Carlo metric re-solves from seeded noisy ranges. Grid points
// where J^T J is singular are flagged, not fatal.
inline AccuracyMap accuracy_map(const TowerScene& scene, BoundingBox2 region, double resolution,
                                double sigma, int trials, std::uint64_t seed) {
  if (!(resolution > 0.0)) throw std::invalid_argument("accuracy_map: resolution must be > 0");
  if (trials < 0) throw std::invalid_argument("accuracy_map: trials must be >= 0");
  if (!region.valid()) throw std::invalid_argument("accuracy_map: empty region");

  AccuracyMap map;
  map.sigma = sigma;
  map.trials = trials;
  map.seed = seed;
  map.nx = static_cast<int>(std::floor((region.max.x - region.min.x) / resolution + 1e-9)) + 1;
  map.ny = static_cast<int>(std::floor((region.max.y - region.min.y) / resolution + 1e-9)) + 1;

  for (int iy = 0; iy < map.ny; ++iy) {
    for (int ix = 0; ix < map.nx; ++ix) {
      AccuracyMapPoint pt;
      pt.pos = {region.min.x + ix * resolution, region.min.y + iy * resolution};
      detail::Sym2 h;
      bool at_tower = false;
      for (const Tower& t : scene.towers) {
        Point2 d = pt.pos - t.pos;
        double dist = norm(d);
        if (dist == 0.0) {
          at_tower = true;
          break;
        }
        Point2 u = (1.0 / dist) * d;
        h.a += u.x * u.x;
        h.b += u.x * u.y;
        h.c += u.y * u.y;
      }
      double det = h.det();
      double scale = std::max({std::abs(h.a), std::abs(h.b), std::abs(h.c), 1e-300});
      if (at_tower || !(det > 1e-12 * scale * scale)) {
        pt.degenerate = true;
        pt.analytic = std::numeric_limits<double>::quiet_NaN();
      } else {
        pt.analytic = std::sqrt((h.a + h.c) / det) * sigma;
        if (trials > 0) {
          std::uint64_t grid_index =
              static_cast<std::uint64_t>(iy) * static_cast<std::uint64_t>(map.nx) +
              static_cast<std::uint64_t>(ix);
          double se = 0.0;
          for (int trial = 0; trial < trials; ++trial) {
            std::uint64_t trial_seed =
                derive_seed(seed, grid_index, static_cast<std::uint64_t>(trial));
            RangeSet sim = simulate_ranges(scene, pt.pos, sigma, trial_seed);
            PositionEstimate est = solve_position(scene, sim);
            double err = distance(est.position, pt.pos);
            se += err * err;
          }
          pt.rmse = std::sqrt(se / trials);
        }
      }
      map.points.push_back(pt);
    }
  }
  return map;
}

enum class ProjectionMode { DropZ, HeightCorrected };

// Flattens a 3D tower problem to 2D. DropZ keeps ranges as-is (biased long
// for tall towers); HeightCorrected removes each tower's height against an
// assumed user altitude, clamping at zero when a range is shorter than the
// height difference.
inline std::pair<TowerScene, RangeSet> project_to_2d(const TowerScene3& scene3,
                                                     const RangeSet& ranges, ProjectionMode mode,
                                                     double assumed_user_z = 0.0) {
  if (ranges.ranges.size() != scene3.towers.size())
    throw std::invalid_argument("project_to_2d: one range per tower required");
  std::vector<Tower> towers2d;
  towers2d.reserve(scene3.towers.size());
  for (const Tower3& t : scene3.towers) towers2d.push_back({t.id, {t.pos.x, t.pos.y}});

  RangeSet flat;
  flat.noise_sigma = ranges.noise_sigma;
  flat.seed = ranges.seed;
  flat.simulated = ranges.simulated;
  flat.ranges.reserve(ranges.ranges.size());
  for (std::size_t i = 0; i < ranges.ranges.size(); ++i) {
    double r = ranges.ranges[i];
    if (mode == ProjectionMode::HeightCorrected) {
      double dz = scene3.towers[i].pos.z - assumed_user_z;
      r = std::sqrt(std::max(r * r - dz * dz, 0.0));
    }
    flat.ranges.push_back(r);
  }
  return {TowerScene(std::move(towers2d)), std::move(flat)};
}

// Euclidean range from a 3D tower to a 3D point; the simulation oracle for
// 3D scenes mirrors simulate_ranges but in three coordinates.
inline RangeSet simulate_ranges_3d(const TowerScene3& scene, Point3 true_pos, double sigma,
                                   std::uint64_t seed) {
  if (sigma < 0.0) throw std::invalid_argument("simulate_ranges_3d: sigma must be non-negative");
  RangeSet out;
  out.noise_sigma = sigma;
  out.seed = seed;
  out.simulated = true;
  SplitMix64 rng(seed);
  for (const Tower3& t : scene.towers) {
    double noise = sigma > 0.0 ? sigma * rng.next_normal() : 0.0;
    out.ranges.push_back(std::max(0.0, distance(true_pos, t.pos) + noise));
  }
  return out;
}

}  // namespace trigeo
