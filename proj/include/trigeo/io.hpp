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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "trigeo/circle.hpp"
#include "trigeo/geometry.hpp"
#include "trigeo/localization.hpp"
#include "trigeo/report.hpp"
#include "trigeo/solid.hpp"
#include "trigeo/triangulation.hpp"

namespace trigeo {

using json = nlohmann::json;

namespace detail {

inline const json& require(const json& j, const char* key, const char* context) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string(context) + ": missing field '" + key + "'");
  return j.at(key);
}

inline double number_at(const json& j, const std::string& where) {
  if (!j.is_number())
    throw std::invalid_argument(where + ": expected a number");
  return j.get<double>();
}

}  // namespace detail

// --- polygons: {"vertices": [[x, y], ...]} ---

inline json polygon_to_json(const SimplePolygon& poly) {
  json verts = json::array();
  for (const Point2& p : poly.vertices()) verts.push_back({p.x, p.y});
  return json{{"vertices", verts}};
}

inline std::vector<Point2> vertices_from_json(const json& j, const char* context = "polygon") {
  const json& verts = detail::require(j, "vertices", context);
  if (!verts.is_array() || verts.size() < 3)
    throw std::invalid_argument(std::string(context) + ": 'vertices' must list 3 or more points");
  std::vector<Point2> out;
  out.reserve(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const json& v = verts.at(i);
    std::string where = std::string(context) + ": vertices[" + std::to_string(i) + "]";
    if (!v.is_array() || v.size() != 2)
      throw std::invalid_argument(where + " must be an [x, y] pair");
    out.push_back({detail::number_at(v.at(0), where), detail::number_at(v.at(1), where)});
  }
  return out;
}

inline SimplePolygon polygon_from_json(const json& j) {
  return SimplePolygon(vertices_from_json(j));
}

// --- triangulations: {"method": ..., "triangles": [[i,j,k]...], "diagonals": [[i,j]...]} ---

inline json triangulation_to_json(const Triangulation& t) {
  json tris = json::array();
  for (const auto& tri : t.triangles) tris.push_back({tri[0], tri[1], tri[2]});
  json diags = json::array();
  for (const Diagonal& d : t.diagonals) diags.push_back({d.i, d.j});
  return json{{"method", to_string(t.method)}, {"triangles", tris}, {"diagonals", diags}};
}

inline Triangulation triangulation_from_json(const json& j, SimplePolygon source) {
  Triangulation t{std::move(source), {}, {}, TriangulationMethod::EarClip};
  std::string method = detail::require(j, "method", "triangulation").get<std::string>();
  if (method == "earclip") {
    t.method = TriangulationMethod::EarClip;
  } else if (method == "monotone") {
    t.method = TriangulationMethod::Monotone;
  } else {
    throw std::invalid_argument("triangulation: unknown method '" + method + "'");
  }
  for (const json& tri : detail::require(j, "triangles", "triangulation")) {
    if (!tri.is_array() || tri.size() != 3)
      throw std::invalid_argument("triangulation: each triangle must be an [i, j, k] triple");
    t.triangles.push_back({tri.at(0).get<int>(), tri.at(1).get<int>(), tri.at(2).get<int>()});
  }
  for (const json& d : detail::require(j, "diagonals", "triangulation")) {
    if (!d.is_array() || d.size() != 2)
      throw std::invalid_argument("triangulation: each diagonal must be an [i, j] pair");
    t.diagonals.emplace_back(d.at(0).get<int>(), d.at(1).get<int>());
  }
  return t;
}

// --- boxes: {"min": [x,y,z], "max": [x,y,z]} or {"boxes": [...]} ---

inline Point3 point3_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument(where + " must be an [x, y, z] triple");
  return {detail::number_at(j.at(0), where), detail::number_at(j.at(1), where),
          detail::number_at(j.at(2), where)};
}

inline Box box_from_json(const json& j) {
  return Box(point3_from_json(detail::require(j, "min", "box"), "box: min"),
             point3_from_json(detail::require(j, "max", "box"), "box: max"));
}

inline json box_to_json(const Box& b) {
  return json{{"min", {b.min_corner.x, b.min_corner.y, b.min_corner.z}},
              {"max", {b.max_corner.x, b.max_corner.y, b.max_corner.z}}};
}

inline std::vector<Box> boxes_from_json(const json& j) {
  std::vector<Box> boxes;
  if (j.contains("boxes")) {
    for (const json& b : j.at("boxes")) boxes.push_back(box_from_json(b));
    if (boxes.empty()) throw std::invalid_argument("box: 'boxes' must not be empty");
  } else {
    boxes.push_back(box_from_json(j));
  }
  return boxes;
}

// --- meshes: {"vertices": [[x,y,z]...], "triangles": [[i,j,k]...], ...} ---

inline json mesh_to_json(const SurfaceMesh& m) {
  json verts = json::array();
  for (const Point3& p : m.vertices) verts.push_back({p.x, p.y, p.z});
  json tris = json::array();
  for (const auto& t : m.triangles) tris.push_back({t[0], t[1], t[2]});
  return json{{"vertices", verts},
              {"triangles", tris},
              {"face_ids", m.face_ids},
              {"expected_area", m.expected_area}};
}

inline SurfaceMesh mesh_from_json(const json& j) {
  SurfaceMesh m;
  for (const json& v : detail::require(j, "vertices", "mesh"))
    m.vertices.push_back(point3_from_json(v, "mesh: vertex"));
  for (const json& t : detail::require(j, "triangles", "mesh")) {
    if (!t.is_array() || t.size() != 3)
      throw std::invalid_argument("mesh: each triangle must be an [i, j, k] triple");
    m.triangles.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
  }
  if (j.contains("face_ids")) m.face_ids = j.at("face_ids").get<std::vector<int>>();
  if (j.contains("expected_area")) m.expected_area = j.at("expected_area").get<double>();
  return m;
}

// OBJ-style plain text: `v x y z` then `f i j k` with 1-based indices.
inline std::string mesh_to_obj(const SurfaceMesh& m) {
  std::string out;
  char line[128];
  for (const Point3& p : m.vertices) {
    std::snprintf(line, sizeof(line), "v %.17g %.17g %.17g\n", p.x, p.y, p.z);
    out += line;
  }
  for (const auto& t : m.triangles) {
    std::snprintf(line, sizeof(line), "f %d %d %d\n", t[0] + 1, t[1] + 1, t[2] + 1);
    out += line;
  }
  return out;
}

// --- tower scenes: {"towers": [{"id": ..., "pos": [x,y] or [x,y,z]}, ...]} ---

struct SceneFile {
  std::optional<TowerScene> scene2d;
  std::optional<TowerScene3> scene3d;

  bool is_3d() const { return scene3d.has_value(); }
};

inline SceneFile scene_from_json(const json& j) {
  const json& towers = detail::require(j, "towers", "scene");
  if (!towers.is_array() || towers.size() < 3)
    throw std::invalid_argument("scene: 'towers' must list 3 or more towers");
  bool any3d = false;
  for (const json& t : towers) {
    const json& pos = detail::require(t, "pos", "scene: tower");
    if (pos.is_array() && pos.size() == 3) any3d = true;
  }
  SceneFile out;
  if (any3d) {
    std::vector<Tower3> list;
    for (const json& t : towers) {
      std::string id = detail::require(t, "id", "scene: tower").get<std::string>();
      const json& pos = t.at("pos");
      if (!pos.is_array() || pos.size() != 3)
        throw std::invalid_argument("scene: tower '" + id + "' pos must be [x, y, z]");
      list.push_back({id, point3_from_json(pos, "scene: tower '" + id + "' pos")});
    }
    out.scene3d = TowerScene3(std::move(list));
  } else {
    std::vector<Tower> list;
    for (const json& t : towers) {
      std::string id = detail::require(t, "id", "scene: tower").get<std::string>();
      const json& pos = t.at("pos");
      if (!pos.is_array() || pos.size() != 2)
        throw std::invalid_argument("scene: tower '" + id + "' pos must be [x, y]");
      std::string where = "scene: tower '" + id + "' pos";
      list.push_back(
          {id, {detail::number_at(pos.at(0), where), detail::number_at(pos.at(1), where)}});
    }
    out.scene2d = TowerScene(std::move(list));
  }
  return out;
}

inline json scene_to_json(const TowerScene& scene) {
  json towers = json::array();
  for (const Tower& t : scene.towers)
    towers.push_back({{"id", t.id}, {"pos", {t.pos.x, t.pos.y}}});
  return json{{"towers", towers}};
}

inline json scene_to_json(const TowerScene3& scene) {
  json towers = json::array();
  for (const Tower3& t : scene.towers)
    towers.push_back({{"id", t.id}, {"pos", {t.pos.x, t.pos.y, t.pos.z}}});
  return json{{"towers", towers}};
}

// --- range sets: {"sigma": s, "seed": k, "ranges": {"id": r, ...}} ---

template <typename SceneT>
inline RangeSet ranges_from_json(const json& j, const SceneT& scene) {
  RangeSet out;
  if (j.contains("sigma")) out.noise_sigma = j.at("sigma").get<double>();
  if (j.contains("seed")) out.seed = j.at("seed").get<std::uint64_t>();
  const json& map = detail::require(j, "ranges", "ranges");
  if (!map.is_object()) throw std::invalid_argument("ranges: 'ranges' must map tower id to range");
  for (const auto& t : scene.towers) {
    if (!map.contains(t.id))
      throw std::invalid_argument("ranges: missing range for tower '" + t.id + "'");
    double r = detail::number_at(map.at(t.id), "ranges: '" + t.id + "'");
    if (r < 0.0) throw std::invalid_argument("ranges: range for tower '" + t.id + "' is negative");
    out.ranges.push_back(r);
  }
  return out;
}

template <typename SceneT>
inline json ranges_to_json(const RangeSet& r, const SceneT& scene) {
  json map = json::object();
  for (std::size_t i = 0; i < scene.towers.size(); ++i)
    map[scene.towers[i].id] = r.ranges[i];
  return json{{"sigma", r.noise_sigma}, {"seed", r.seed}, {"ranges", map}};
}

// --- CSV emitters ---

inline std::string format_double(double v, const char* fmt = "%.12g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

inline std::string coverage_curve_to_csv(const CoverageCurve& curve) {
  std::string out = "n,ratio,gain\n";
  for (const CoverageEntry& e : curve.entries) {
    out += std::to_string(e.n);
    out += ',';
    out += format_double(e.ratio);
    out += ',';
    if (e.marginal_gain) out += format_double(*e.marginal_gain);
    out += '\n';
  }
  return out;
}

inline std::string accuracy_map_to_csv(const AccuracyMap& map) {
  std::string out = "x,y,analytic,rmse\n";
  for (const AccuracyMapPoint& p : map.points) {
    out += format_double(p.pos.x);
    out += ',';
    out += format_double(p.pos.y);
    out += ',';
    out += format_double(p.analytic);
    out += ',';
    out += format_double(p.rmse);
    out += '\n';
  }
  return out;
}

// --- report serialization ---

inline json report_to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    json entry{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    if (c.count != 0) entry["count"] = c.count;
    checks.push_back(entry);
  }
  return json{{"all_passed", report.all_passed()}, {"checks", checks}};
}

// --- file helpers ---

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

inline json read_json_file(const std::string& path) {
  try {
    return json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace trigeo
