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
#include <cstdio>
#include <string>
#include <vector>

#include "trigeo/circle.hpp"
#include "trigeo/geometry.hpp"
#include "trigeo/localization.hpp"
#include "trigeo/solid.hpp"
#include "trigeo/triangulation.hpp"

namespace trigeo {

namespace detail {

// Minimal SVG writer: world coordinates with y flipped, fixed pixel width.
class SvgCanvas {
 public:
  SvgCanvas(BoundingBox2 world, double width_px = 640.0, double margin_frac = 0.08) {
    double w = std::max(world.max.x - world.min.x, 1e-9);
    double h = std::max(world.max.y - world.min.y, 1e-9);
    double margin = margin_frac * std::max(w, h);
    min_ = {world.min.x - margin, world.min.y - margin};
    scale_ = width_px / (w + 2.0 * margin);
    width_ = width_px;
    height_ = (h + 2.0 * margin) * scale_;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                  "viewBox=\"0 0 %.0f %.0f\">\n",
                  width_, height_, width_, height_);
    body_ = buf;
    body_ += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }

  double tx(double x) const { return (x - min_.x) * scale_; }
  double ty(double y) const { return height_ - (y - min_.y) * scale_; }

  void polygon(const std::vector<Point2>& ring, const std::string& fill,
               const std::string& stroke, double stroke_width = 1.5) {
    body_ += "<polygon points=\"";
    for (const Point2& p : ring) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", tx(p.x), ty(p.y));
      body_ += buf;
    }
    body_ += "\" fill=\"" + fill + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
             format(stroke_width) + "\"/>\n";
  }

  void line(Point2 a, Point2 b, const std::string& stroke, double stroke_width = 1.0,
            const std::string& dash = "") {
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\" "
                  "stroke-width=\"%.2f\"%s/>\n",
                  tx(a.x), ty(a.y), tx(b.x), ty(b.y), stroke.c_str(), stroke_width,
                  dash.empty() ? "" : (" stroke-dasharray=\"" + dash + "\"").c_str());
    body_ += buf;
  }

  void circle(Point2 c, double world_radius, const std::string& fill, const std::string& stroke,
              double stroke_width = 1.5) {
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"%s\" stroke=\"%s\" "
                  "stroke-width=\"%.2f\"/>\n",
                  tx(c.x), ty(c.y), world_radius * scale_, fill.c_str(), stroke.c_str(),
                  stroke_width);
    body_ += buf;
  }

  void dot(Point2 c, double px_radius, const std::string& fill) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"%s\"/>\n",
                  tx(c.x), ty(c.y), px_radius, fill.c_str());
    body_ += buf;
  }

  void rect_cell(Point2 center, double world_size, const std::string& fill) {
    double s = world_size * scale_;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" fill=\"%s\"/>\n",
                  tx(center.x) - 0.5 * s, ty(center.y) - 0.5 * s, s, s, fill.c_str());
    body_ += buf;
  }

  void label(Point2 at, const std::string& text) {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%.2f\" y=\"%.2f\" font-size=\"12\" font-family=\"sans-serif\" "
                  "fill=\"#333\">%s</text>\n",
                  tx(at.x) + 6.0, ty(at.y) - 6.0, text.c_str());
    body_ += buf;
  }

  std::string finish() { return body_ + "</svg>\n"; }

 private:
  static std::string format(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
  }

  Point2 min_;
  double scale_ = 1.0;
  double width_ = 0.0;
  double height_ = 0.0;
  std::string body_;
};

inline std::string heat_color(double t) {
  // blue (cold) to red (hot)
  t = std::clamp(t, 0.0, 1.0);
  int r = static_cast<int>(255.0 * t);
  int b = static_cast<int>(255.0 * (1.0 - t));
  int g = static_cast<int>(96.0 * (1.0 - std::abs(2.0 * t - 1.0)));
  char buf[16];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
  return buf;
}

}  // namespace detail

// Polygon outline with triangle fills and dashed diagonals.
inline std::string triangulation_svg(const Triangulation& t) {
  const SimplePolygon& poly = t.source;
  detail::SvgCanvas canvas(poly.bounds());
  for (const auto& tri : t.triangles)
    canvas.polygon({poly[tri[0]], poly[tri[1]], poly[tri[2]]}, "#dce9f7", "#9bb8d8", 0.8);
  for (const Diagonal& d : t.diagonals)
    canvas.line(poly[d.i], poly[d.j], "#5577aa", 1.2, "5,4");
  canvas.polygon(poly.vertices(), "none", "black", 2.0);
  return canvas.finish();
}

// Circle outline with its inscribed polygon.
inline std::string circle_approximation_svg(const Circle& c, const SimplePolygon& inscribed) {
  BoundingBox2 world;
  world.expand({c.center.x - c.radius, c.center.y - c.radius});
  world.expand({c.center.x + c.radius, c.center.y + c.radius});
  detail::SvgCanvas canvas(world);
  canvas.circle(c.center, c.radius, "none", "black", 2.0);
  canvas.polygon(inscribed.vertices(), "#dce9f7", "#5577aa", 1.5);
  for (const Point2& v : inscribed.vertices()) canvas.dot(v, 3.0, "#224466");
  return canvas.finish();
}

// Flattened net of face charts, laid out in a row with small gaps.
inline std::string face_charts_svg(const std::vector<FaceChart>& charts) {
  std::vector<std::vector<Point2>> placed;
  BoundingBox2 world;
  double cursor = 0.0;
  for (const FaceChart& chart : charts) {
    BoundingBox2 b = chart.polygon2d.bounds();
    double gap = 0.15 * std::max(b.max.x - b.min.x, 1e-9);
    std::vector<Point2> ring;
    for (const Point2& p : chart.polygon2d.vertices()) {
      Point2 q{p.x - b.min.x + cursor, p.y - b.min.y};
      ring.push_back(q);
      world.expand(q);
    }
    cursor += (b.max.x - b.min.x) + gap;
    placed.push_back(std::move(ring));
  }
  detail::SvgCanvas canvas(world);
  for (const auto& ring : placed) canvas.polygon(ring, "#eef3e6", "#557744", 1.5);
  return canvas.finish();
}

// Towers, measured range circles, and the estimated (and optionally true)
// position of a localization solve.
inline std::string scene_svg(const TowerScene& scene, const RangeSet& ranges,
                             const PositionEstimate& estimate,
                             std::optional<Point2> true_pos = std::nullopt) {
  BoundingBox2 world;
  for (std::size_t i = 0; i < scene.towers.size(); ++i) {
    const Tower& t = scene.towers[i];
    world.expand(t.pos - Point2{ranges.ranges[i], ranges.ranges[i]});
    world.expand(t.pos + Point2{ranges.ranges[i], ranges.ranges[i]});
  }
  world.expand(estimate.position);
  detail::SvgCanvas canvas(world);
  for (std::size_t i = 0; i < scene.towers.size(); ++i) {
    canvas.circle(scene.towers[i].pos, ranges.ranges[i], "none", "#88aacc", 1.0);
  }
  for (const Tower& t : scene.towers) {
    canvas.dot(t.pos, 5.0, "#224466");
    canvas.label(t.pos, t.id);
  }
  if (true_pos) canvas.dot(*true_pos, 4.0, "#228833");
  canvas.dot(estimate.position, 4.0, "#cc3322");
  return canvas.finish();
}

// Heatmap of the accuracy map's analytic metric (or Monte Carlo RMSE when
// available), plus the towers.
inline std::string accuracy_map_svg(const AccuracyMap& map, const TowerScene& scene,
                                    double cell_size) {
  BoundingBox2 world;
  for (const AccuracyMapPoint& p : map.points) world.expand(p.pos);
  for (const Tower& t : scene.towers) world.expand(t.pos);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  auto metric = [&](const AccuracyMapPoint& p) {
    return map.trials > 0 ? p.rmse : p.analytic;
  };
  for (const AccuracyMapPoint& p : map.points) {
    if (p.degenerate) continue;
    lo = std::min(lo, metric(p));
    hi = std::max(hi, metric(p));
  }
  detail::SvgCanvas canvas(world);
  for (const AccuracyMapPoint& p : map.points) {
    std::string color = p.degenerate
                            ? "#bbbbbb"
                            : detail::heat_color(hi > lo ? (metric(p) - lo) / (hi - lo) : 0.5);
    canvas.rect_cell(p.pos, cell_size, color);
  }
  for (const Tower& t : scene.towers) {
    canvas.dot(t.pos, 5.0, "#111111");
    canvas.label(t.pos, t.id);
  }
  return canvas.finish();
}

}  // namespace trigeo
