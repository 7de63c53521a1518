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

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trigeo/circle.hpp"
#include "trigeo/geometry.hpp"
#include "trigeo/io.hpp"
#include "trigeo/localization.hpp"
#include "trigeo/random_polygon.hpp"
#include "trigeo/solid.hpp"
#include "trigeo/svg.hpp"
#include "trigeo/triangulation.hpp"
#include "trigeo/version.hpp"

namespace {

using trigeo::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

json report_skeleton(const std::string& command) {
  return json{{"tool", "trigeo"},
              {"version", trigeo::kVersion},
              {"command", command},
              {"timestamp", iso_timestamp()}};
}

void emit_report(const json& report, const std::string& output_path) {
  std::string text = report.dump(2) + "\n";
  if (output_path.empty()) {
    std::cout << text;
  } else {
    trigeo::write_text_file(output_path, text);
  }
}

struct StrategyFlag {
  trigeo::DecompositionStrategy strategy = trigeo::DecompositionStrategy::single();
};

trigeo::DecompositionStrategy parse_strategy(const std::string& text) {
  if (text == "single") return trigeo::DecompositionStrategy::single();
  if (text.rfind("multi:", 0) == 0) {
    int cuts = std::stoi(text.substr(6));
    return trigeo::DecompositionStrategy::multi(cuts);
  }
  throw CLI::ValidationError("--strategy", "expected 'single' or 'multi:K' with K >= 2");
}

struct ModeFlag {
  trigeo::ProjectionMode mode = trigeo::ProjectionMode::DropZ;
  double assumed_z = 0.0;
};

ModeFlag parse_mode(const std::string& text) {
  if (text == "dropz") return {trigeo::ProjectionMode::DropZ, 0.0};
  if (text.rfind("heightcorrected:", 0) == 0)
    return {trigeo::ProjectionMode::HeightCorrected, std::stod(text.substr(16))};
  throw CLI::ValidationError("--mode", "expected 'dropz' or 'heightcorrected:Z'");
}

int run_triangulate(const std::string& input, const std::string& output, const std::string& svg,
                    const std::string& algo, double tolerance) {
  json in = trigeo::read_json_file(input);
  trigeo::SimplePolygon poly(trigeo::vertices_from_json(in), trigeo::Validate::Full,
                             tolerance > 0 ? tolerance : 1e-9);
  trigeo::Triangulation t = (algo == "monotone") ? trigeo::triangulate_monotone(poly)
                                                 : trigeo::triangulate_earclip(poly);
  trigeo::VerificationReport verification = trigeo::verify_triangulation(poly, t);
  trigeo::DualGraph dual = trigeo::dual_graph(t);
  trigeo::EarReport ears = trigeo::find_ears(poly);

  json report = report_skeleton("triangulate");
  report["input"] = trigeo::polygon_to_json(poly);
  report["parameters"] = {{"algo", algo}, {"tolerance", tolerance > 0 ? tolerance : 1e-9}};
  report["results"] = {{"vertex_count", poly.size()},
                       {"triangle_count", t.triangles.size()},
                       {"diagonal_count", t.diagonals.size()},
                       {"polygon_area", trigeo::signed_area(poly)},
                       {"ears", ears.ear_indices},
                       {"dual_graph", {{"nodes", dual.node_count},
                                       {"edges", dual.edges.size()},
                                       {"max_degree", dual.max_degree()},
                                       {"is_tree", dual.is_tree()}}},
                       {"triangulation", trigeo::triangulation_to_json(t)}};
  report["verification"] = trigeo::report_to_json(verification);
  emit_report(report, output);
  if (!svg.empty()) trigeo::write_text_file(svg, trigeo::triangulation_svg(t));
  return verification.all_passed() && dual.is_tree() && dual.max_degree() <= 3 ? kExitOk
                                                                               : kExitCheckFailed;
}

int run_circle_approx(const std::string& output, const std::string& svg, int n_max, int svg_n,
                      double radius) {
  trigeo::Circle circle({0, 0}, radius);
  trigeo::CoverageCurve curve = trigeo::marginal_gain_curve(circle, n_max);
  if (!output.empty()) trigeo::write_text_file(output, trigeo::coverage_curve_to_csv(curve));

  bool increasing = true;
  bool below_one = true;
  double prev = 0.0;
  double best_gain = 0.0;
  int best_n = 0;
  for (const trigeo::CoverageEntry& e : curve.entries) {
    if (e.ratio <= prev) increasing = false;
    if (e.ratio >= 1.0) below_one = false;
    prev = e.ratio;
    if (e.marginal_gain && *e.marginal_gain > best_gain) {
      best_gain = *e.marginal_gain;
      best_n = e.n;
    }
  }
  bool gain_at_3_to_4 = best_n == 4;

  json report = report_skeleton("circle-approx");
  report["parameters"] = {{"n_max", n_max}, {"radius", radius}};
  report["results"] = {{"entries", curve.entries.size()},
                       {"max_gain_at_n", best_n},
                       {"ratios_strictly_increasing", increasing},
                       {"ratios_below_one", below_one}};
  trigeo::VerificationReport checks;
  checks.add("ratios_strictly_increasing", increasing);
  checks.add("ratios_below_one", below_one);
  checks.add("max_gain_is_3_to_4", gain_at_3_to_4);
  report["verification"] = trigeo::report_to_json(checks);
  emit_report(report, "");

  if (!svg.empty()) {
    trigeo::SimplePolygon poly = trigeo::inscribed_polygon(circle, svg_n);
    trigeo::write_text_file(svg, trigeo::circle_approximation_svg(circle, poly));
  }
  return checks.all_passed() ? kExitOk : kExitCheckFailed;
}

int run_slice(const std::string& input, const std::string& output, const std::string& svg,
              const std::string& obj, const trigeo::DecompositionStrategy& strategy) {
  json in = trigeo::read_json_file(input);
  std::vector<trigeo::Box> boxes = trigeo::boxes_from_json(in);
  trigeo::SurfaceMesh mesh = trigeo::triangulate_solids(boxes, strategy);
  trigeo::VerificationReport verification = trigeo::verify_mesh(mesh);

  trigeo::DecompositionCost cost{0, 0};
  for (const trigeo::Box& b : boxes) {
    trigeo::DecompositionCost c = trigeo::decomposition_cost(b, strategy);
    cost.triangles += c.triangles;
    cost.faces += c.faces;
  }

  json report = report_skeleton("slice");
  report["input"] = in;
  report["parameters"] = {
      {"strategy", strategy.kind == trigeo::DecompositionStrategy::Kind::SingleSection
                       ? "single"
                       : "multi:" + std::to_string(strategy.cuts)}};
  report["results"] = {{"triangle_count", mesh.triangles.size()},
                       {"face_count", cost.faces},
                       {"predicted_triangles", cost.triangles},
                       {"total_area", mesh.total_area()},
                       {"expected_area", mesh.expected_area},
                       {"mesh", trigeo::mesh_to_json(mesh)}};
  report["verification"] = trigeo::report_to_json(verification);
  emit_report(report, output);

  if (!obj.empty()) trigeo::write_text_file(obj, trigeo::mesh_to_obj(mesh));
  if (!svg.empty()) {
    auto [first, second] = trigeo::slice_box(boxes.front(), strategy.cut_pair);
    std::vector<trigeo::FaceChart> charts = trigeo::face_charts(first);
    std::vector<trigeo::FaceChart> more = trigeo::face_charts(second);
    charts.insert(charts.end(), more.begin(), more.end());
    trigeo::write_text_file(svg, trigeo::face_charts_svg(charts));
  }
  bool counts_match = cost.triangles == static_cast<long>(mesh.triangles.size());
  return verification.all_passed() && counts_match ? kExitOk : kExitCheckFailed;
}

int run_locate(const std::string& input, const std::string& ranges_path,
               const std::string& output, const std::string& svg, bool two_round,
               const ModeFlag& mode, std::optional<trigeo::Point2> init) {
  json scene_json = trigeo::read_json_file(input);
  trigeo::SceneFile scene_file = trigeo::scene_from_json(scene_json);
  json ranges_json = trigeo::read_json_file(ranges_path);

  trigeo::TowerScene scene = [&]() {
    if (scene_file.is_3d()) {
      trigeo::RangeSet ranges3 = trigeo::ranges_from_json(ranges_json, *scene_file.scene3d);
      auto [flat_scene, flat_ranges] =
          trigeo::project_to_2d(*scene_file.scene3d, ranges3, mode.mode, mode.assumed_z);
      return flat_scene;
    }
    return *scene_file.scene2d;
  }();
  trigeo::RangeSet ranges = [&]() {
    if (scene_file.is_3d()) {
      trigeo::RangeSet ranges3 = trigeo::ranges_from_json(ranges_json, *scene_file.scene3d);
      auto [flat_scene, flat_ranges] =
          trigeo::project_to_2d(*scene_file.scene3d, ranges3, mode.mode, mode.assumed_z);
      return flat_ranges;
    }
    return trigeo::ranges_from_json(ranges_json, *scene_file.scene2d);
  }();

  json report = report_skeleton("locate");
  report["input"] = {{"scene", scene_json}, {"ranges", ranges_json}};
  report["parameters"] = {{"two_round", two_round},
                          {"mode", scene_file.is_3d()
                                       ? (mode.mode == trigeo::ProjectionMode::DropZ
                                              ? "dropz"
                                              : "heightcorrected:" + std::to_string(mode.assumed_z))
                                       : "2d"}};

  auto estimate_json = [&](const trigeo::PositionEstimate& e) {
    return json{{"position", {e.position.x, e.position.y}},
                {"residuals", e.residuals},
                {"rms_residual", e.rms_residual},
                {"iterations", e.iterations},
                {"converged", e.converged},
                {"towers_used", e.towers_used}};
  };

  trigeo::PositionEstimate final_estimate;
  if (two_round) {
    trigeo::TwoRoundResult result = trigeo::two_round_locate(scene, ranges);
    report["results"] = {{"first_round", estimate_json(result.first_round)},
                         {"estimate", estimate_json(result.refined)}};
    final_estimate = result.refined;
  } else {
    final_estimate = trigeo::solve_position(scene, ranges, init);
    report["results"] = {{"estimate", estimate_json(final_estimate)}};
  }

  trigeo::VerificationReport checks;
  checks.add("converged", final_estimate.converged,
             "iterations: " + std::to_string(final_estimate.iterations));
  report["verification"] = trigeo::report_to_json(checks);
  emit_report(report, output);

  if (!svg.empty())
    trigeo::write_text_file(svg, trigeo::scene_svg(scene, ranges, final_estimate));
  return checks.all_passed() ? kExitOk : kExitCheckFailed;
}

int run_accuracy_map(const std::string& input, const std::string& output, const std::string& svg,
                     const std::vector<double>& region, double resolution, double sigma,
                     int trials, std::uint64_t seed) {
  json scene_json = trigeo::read_json_file(input);
  trigeo::SceneFile scene_file = trigeo::scene_from_json(scene_json);
  if (scene_file.is_3d())
    throw std::invalid_argument("accuracy-map expects a 2D scene; project it first");
  const trigeo::TowerScene& scene = *scene_file.scene2d;

  trigeo::BoundingBox2 box;
  box.expand({region[0], region[1]});
  box.expand({region[2], region[3]});
  trigeo::AccuracyMap map = trigeo::accuracy_map(scene, box, resolution, sigma, trials, seed);
  if (!output.empty()) trigeo::write_text_file(output, trigeo::accuracy_map_to_csv(map));
  if (!svg.empty())
    trigeo::write_text_file(svg, trigeo::accuracy_map_svg(map, scene, resolution));

  long degenerate = 0;
  for (const trigeo::AccuracyMapPoint& p : map.points)
    if (p.degenerate) ++degenerate;

  json report = report_skeleton("accuracy-map");
  report["input"] = {{"scene", scene_json}};
  report["parameters"] = {{"region", region},
                          {"resolution", resolution},
                          {"sigma", sigma},
                          {"trials", trials},
                          {"seed", seed}};
  report["results"] = {{"grid_points", map.points.size()},
                       {"nx", map.nx},
                       {"ny", map.ny},
                       {"degenerate_points", degenerate}};
  emit_report(report, "");
  return kExitOk;
}

int run_verify(const std::string& input, const std::string& output) {
  json in = trigeo::read_json_file(input);
  json report = report_skeleton("verify");
  report["input"] = in;
  trigeo::VerificationReport verification;
  if (in.contains("polygon") && in.contains("triangulation")) {
    trigeo::SimplePolygon poly = trigeo::polygon_from_json(in.at("polygon"));
    trigeo::Triangulation t = trigeo::triangulation_from_json(in.at("triangulation"), poly);
    verification = trigeo::verify_triangulation(poly, t);
    report["results"] = {{"kind", "triangulation"}};
  } else if (in.contains("vertices") && in.contains("triangles")) {
    trigeo::SurfaceMesh mesh = trigeo::mesh_from_json(in);
    verification = trigeo::verify_mesh(mesh);
    report["results"] = {{"kind", "mesh"}};
  } else {
    throw std::invalid_argument(
        "verify: input must hold either 'polygon'+'triangulation' or a mesh "
        "('vertices'+'triangles')");
  }
  report["verification"] = trigeo::report_to_json(verification);
  emit_report(report, output);
  return verification.all_passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trigeo: polygon triangulation, circle approximation, box slicing, and "
               "range-based localization"};
  app.require_subcommand(1);

  std::string input, output, svg, obj, ranges_path;
  std::string algo = "earclip";
  std::string strategy_text = "single";
  std::string mode_text = "dropz";
  double tolerance = 0.0;
  double sigma = 0.0;
  double radius = 1.0;
  double resolution = 1.0;
  int n_max = 64;
  int svg_n = 3;
  int trials = 0;
  std::uint64_t seed = 0;
  bool two_round = false;
  std::vector<double> region;
  std::vector<double> init_xy;

  CLI::App* tri = app.add_subcommand("triangulate", "Triangulate a simple polygon");
  tri->add_option("--input", input, "polygon JSON")->required();
  tri->add_option("--output", output, "report JSON path (stdout if omitted)");
  tri->add_option("--svg", svg, "SVG drawing path");
  tri->add_option("--algo", algo, "earclip | monotone")
      ->check(CLI::IsMember({"earclip", "monotone"}));
  tri->add_option("--tolerance", tolerance, "relative tolerance override");

  CLI::App* circ = app.add_subcommand("circle-approx", "Inscribed-polygon coverage curve");
  circ->add_option("--n-max", n_max, "largest vertex count")->check(CLI::Range(4, 1000000));
  circ->add_option("--output", output, "CSV path");
  circ->add_option("--svg", svg, "SVG drawing path");
  circ->add_option("--n", svg_n, "vertex count for the SVG drawing")->check(CLI::Range(3, 1000000));
  circ->add_option("--radius", radius, "circle radius");

  CLI::App* slice = app.add_subcommand("slice", "Decompose boxes into surface meshes");
  slice->add_option("--input", input, "box JSON")->required();
  slice->add_option("--output", output, "report JSON path (stdout if omitted)");
  slice->add_option("--svg", svg, "net-view SVG path");
  slice->add_option("--obj", obj, "OBJ mesh path");
  slice->add_option("--strategy", strategy_text, "single | multi:K");

  CLI::App* locate = app.add_subcommand("locate", "Estimate a position from tower ranges");
  locate->add_option("--input", input, "scene JSON")->required();
  locate->add_option("--ranges", ranges_path, "ranges JSON")->required();
  locate->add_option("--output", output, "report JSON path (stdout if omitted)");
  locate->add_option("--svg", svg, "scene SVG path");
  locate->add_flag("--two-round", two_round, "refine with the 3 best towers");
  locate->add_option("--mode", mode_text, "dropz | heightcorrected:Z (3D scenes)");
  locate->add_option("--init", init_xy, "solver start x,y")->expected(2);

  CLI::App* amap = app.add_subcommand("accuracy-map", "Error map over a grid");
  amap->add_option("--input", input, "scene JSON")->required();
  amap->add_option("--output", output, "CSV path");
  amap->add_option("--svg", svg, "heatmap SVG path");
  amap->add_option("--region", region, "xmin ymin xmax ymax")->expected(4)->required();
  amap->add_option("--resolution", resolution, "grid step")->required();
  amap->add_option("--sigma", sigma, "range noise standard deviation");
  amap->add_option("--trials", trials, "Monte Carlo trials per grid point");
  amap->add_option("--seed", seed, "master seed");

  CLI::App* verify = app.add_subcommand("verify", "Verify a triangulation or mesh file");
  verify->add_option("--input", input, "candidate JSON")->required();
  verify->add_option("--output", output, "report JSON path (stdout if omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (tri->parsed()) return run_triangulate(input, output, svg, algo, tolerance);
    if (circ->parsed()) return run_circle_approx(output, svg, n_max, svg_n, radius);
    if (slice->parsed())
      return run_slice(input, output, svg, obj, parse_strategy(strategy_text));
    if (locate->parsed()) {
      std::optional<trigeo::Point2> init;
      if (init_xy.size() == 2) init = trigeo::Point2{init_xy[0], init_xy[1]};
      return run_locate(input, ranges_path, output, svg, two_round, parse_mode(mode_text), init);
    }
    if (amap->parsed())
      return run_accuracy_map(input, output, svg, region, resolution, sigma, trials, seed);
    if (verify->parsed()) return run_verify(input, output);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const trigeo::DegenerateGeometryError& e) {
    std::cerr << "error: degenerate geometry: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitBadInput;
}
