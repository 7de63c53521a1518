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
//
// End-to-end tests driving the built CLI binary through the fixtures.

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kCli = TRIGEO_CLI_PATH;
const fs::path kFixtures = TRIGEO_FIXTURE_DIR;

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

fs::path temp_dir() {
  fs::path dir = fs::temp_directory_path() / "trigeo_cli_tests";
  fs::create_directories(dir);
  return dir;
}

RunResult run(const std::string& args) {
  fs::path out = temp_dir() / "stdout.txt";
  std::string cmd = kCli + " " + args + " > " + out.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  std::ifstream in(out);
  result.stdout_text.assign(std::istreambuf_iterator<char>(in),
                            std::istreambuf_iterator<char>());
  return result;
}

json load_json(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  return json::parse(in);
}

}  // namespace

TEST_CASE("triangulate the unit square fixture") {
  fs::path report_path = temp_dir() / "square_report.json";
  fs::path svg_path = temp_dir() / "square.svg";
  RunResult r = run("triangulate --input " + (kFixtures / "unit_square.json").string() +
                    " --algo earclip --output " + report_path.string() + " --svg " +
                    svg_path.string());
  CHECK(r.exit_code == 0);
  json report = load_json(report_path);
  CHECK(report.at("results").at("triangle_count") == 2);
  CHECK(report.at("results").at("diagonal_count") == 1);
  CHECK(report.at("results").at("polygon_area").get<double>() == 1.0);
  CHECK(report.at("verification").at("all_passed") == true);
  CHECK(fs::exists(svg_path));
}

TEST_CASE("triangulate supports both algorithms on every polygon fixture") {
  for (const char* fixture : {"unit_square.json", "parallelogram.json", "trapezoid.json"}) {
    for (const char* algo : {"earclip", "monotone"}) {
      fs::path report_path = temp_dir() / "poly_report.json";
      RunResult r = run(std::string("triangulate --input ") +
                        (kFixtures / fixture).string() + " --algo " + algo + " --output " +
                        report_path.string());
      INFO(fixture << " with " << algo);
      CHECK(r.exit_code == 0);
      json report = load_json(report_path);
      CHECK(report.at("results").at("triangle_count") == 2);
      CHECK(report.at("results").at("diagonal_count") == 1);
    }
  }
}

TEST_CASE("triangulate rejects a self-intersecting ring with exit 2") {
  RunResult r = run("triangulate --input " + (kFixtures / "bowtie.json").string());
  CHECK(r.exit_code == 2);
  CHECK(r.stdout_text.find("self-intersection") != std::string::npos);
}

TEST_CASE("triangulate reports are reproducible from their input echo") {
  fs::path first = temp_dir() / "report_a.json";
  RunResult r1 = run("triangulate --input " + (kFixtures / "trapezoid.json").string() +
                     " --output " + first.string());
  REQUIRE(r1.exit_code == 0);
  json a = load_json(first);

  // Re-run the CLI on the report's echoed input.
  fs::path echoed = temp_dir() / "echoed_input.json";
  std::ofstream(echoed) << a.at("input").dump();
  fs::path second = temp_dir() / "report_b.json";
  RunResult r2 = run("triangulate --input " + echoed.string() + " --output " + second.string());
  REQUIRE(r2.exit_code == 0);
  json b = load_json(second);

  a.erase("timestamp");
  b.erase("timestamp");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("circle-approx emits a CSV curve") {
  fs::path csv_path = temp_dir() / "curve.csv";
  fs::path svg_path = temp_dir() / "circle.svg";
  RunResult r = run("circle-approx --n-max 16 --output " + csv_path.string() + " --svg " +
                    svg_path.string() + " --n 3");
  CHECK(r.exit_code == 0);
  std::ifstream csv(csv_path);
  std::string header;
  std::getline(csv, header);
  CHECK(header == "n,ratio,gain");
  double prev = 0.0;
  std::string line;
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    double ratio = std::stod(line.substr(line.find(',') + 1));
    CHECK(ratio > prev);
    prev = ratio;
  }
  CHECK(rows == 14);
  CHECK(fs::exists(svg_path));
}

TEST_CASE("slice meshes the unit cube") {
  fs::path report_path = temp_dir() / "cube_report.json";
  fs::path obj_path = temp_dir() / "cube.obj";
  fs::path svg_path = temp_dir() / "net.svg";
  RunResult r = run("slice --input " + (kFixtures / "unit_cube.json").string() +
                    " --strategy single --output " + report_path.string() + " --obj " +
                    obj_path.string() + " --svg " + svg_path.string());
  CHECK(r.exit_code == 0);
  json report = load_json(report_path);
  CHECK(report.at("results").at("triangle_count") == 16);
  CHECK(report.at("results").at("face_count") == 10);
  CHECK(report.at("verification").at("all_passed") == true);
  CHECK(fs::exists(obj_path));
  CHECK(fs::exists(svg_path));

  fs::path multi_report = temp_dir() / "cube_multi.json";
  RunResult rm = run("slice --input " + (kFixtures / "unit_cube.json").string() +
                     " --strategy multi:3 --output " + multi_report.string());
  CHECK(rm.exit_code == 0);
  json mreport = load_json(multi_report);
  CHECK(mreport.at("results").at("triangle_count") == 48);
  CHECK(mreport.at("results").at("face_count") == 24);
}

TEST_CASE("locate solves the exact three-tower fixture") {
  fs::path report_path = temp_dir() / "locate3.json";
  RunResult r = run("locate --input " + (kFixtures / "three_towers.json").string() +
                    " --ranges " + (kFixtures / "three_towers_ranges.json").string() +
                    " --output " + report_path.string());
  CHECK(r.exit_code == 0);
  json report = load_json(report_path);
  auto pos = report.at("results").at("estimate").at("position");
  CHECK(std::abs(pos.at(0).get<double>() - 3.0) < 1e-7);
  CHECK(std::abs(pos.at(1).get<double>() - 4.0) < 1e-7);
}

TEST_CASE("locate --two-round excludes the corrupted tower") {
  fs::path report_path = temp_dir() / "locate5.json";
  fs::path svg_path = temp_dir() / "scene.svg";
  RunResult r = run("locate --input " + (kFixtures / "five_towers.json").string() +
                    " --ranges " + (kFixtures / "five_towers_ranges_corrupted.json").string() +
                    " --two-round --output " + report_path.string() + " --svg " +
                    svg_path.string());
  CHECK(r.exit_code == 0);
  json report = load_json(report_path);
  auto used = report.at("results").at("estimate").at("towers_used");
  CHECK(used.size() == 3);
  for (const auto& id : used) CHECK(id.get<std::string>() != "T2");
  // Refined estimate lands on the fixture's ground truth (4, 5).
  auto pos = report.at("results").at("estimate").at("position");
  CHECK(std::abs(pos.at(0).get<double>() - 4.0) < 1e-6);
  CHECK(std::abs(pos.at(1).get<double>() - 5.0) < 1e-6);
  CHECK(fs::exists(svg_path));
}

TEST_CASE("accuracy-map emits CSV and heatmap") {
  fs::path csv_path = temp_dir() / "map.csv";
  fs::path svg_path = temp_dir() / "map.svg";
  RunResult r = run("accuracy-map --input " + (kFixtures / "four_towers.json").string() +
                    " --region 0 0 12 12 --resolution 4 --sigma 0.5 --trials 20 --seed 9 "
                    "--output " +
                    csv_path.string() + " --svg " + svg_path.string());
  CHECK(r.exit_code == 0);
  std::ifstream csv(csv_path);
  std::string header;
  std::getline(csv, header);
  CHECK(header == "x,y,analytic,rmse");
  int rows = 0;
  std::string line;
  while (std::getline(csv, line)) ++rows;
  CHECK(rows == 16);
  CHECK(fs::exists(svg_path));
}

TEST_CASE("verify validates and rejects mesh files") {
  // Build a mesh report via slice, extract the mesh, and verify it.
  fs::path report_path = temp_dir() / "cube_for_verify.json";
  RunResult r = run("slice --input " + (kFixtures / "unit_cube.json").string() + " --output " +
                    report_path.string());
  REQUIRE(r.exit_code == 0);
  json mesh = load_json(report_path).at("results").at("mesh");

  fs::path mesh_path = temp_dir() / "mesh.json";
  std::ofstream(mesh_path) << mesh.dump();
  RunResult ok = run("verify --input " + mesh_path.string());
  CHECK(ok.exit_code == 0);

  // Drop one triangle: verification fails with exit 1.
  mesh["triangles"].erase(mesh["triangles"].size() - 1);
  fs::path bad_path = temp_dir() / "mesh_bad.json";
  std::ofstream(bad_path) << mesh.dump();
  RunResult bad = run("verify --input " + bad_path.string());
  CHECK(bad.exit_code == 1);
}

TEST_CASE("verify validates triangulation files") {
  json input;
  input["polygon"] = json::parse(R"({"vertices": [[0,0],[1,0],[1,1],[0,1]]})");
  input["triangulation"] =
      json::parse(R"({"method": "earclip", "triangles": [[3,0,1],[1,2,3]], "diagonals": [[1,3]]})");
  fs::path path = temp_dir() / "tri_candidate.json";
  std::ofstream(path) << input.dump();
  RunResult ok = run("verify --input " + path.string());
  CHECK(ok.exit_code == 0);

  input["triangulation"]["diagonals"] = json::parse("[[0,2],[1,3]]");
  std::ofstream(path) << input.dump();
  RunResult bad = run("verify --input " + path.string());
  CHECK(bad.exit_code == 1);
}

TEST_CASE("malformed input files exit with code 2") {
  fs::path path = temp_dir() / "broken.json";
  std::ofstream(path) << "{not json";
  RunResult r = run("triangulate --input " + path.string());
  CHECK(r.exit_code == 2);
  RunResult missing = run("triangulate --input /nonexistent/x.json");
  CHECK(missing.exit_code == 2);
}
