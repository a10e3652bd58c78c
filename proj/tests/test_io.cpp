// Copyright 2026 travmap contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <Eigen/Geometry>

#include "doctest.h"
#include "travmap/io.hpp"

using namespace travmap;
namespace fs = std::filesystem;

namespace {

// Fresh scratch directory per test case, removed on destruction.
struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("travmap_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "_" +
            std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("point clouds round-trip and skip comments") {
  TempDir dir;
  std::vector<PointStamped> pts{{0.1, 1.25, -3.5, 0.75}, {0.2, 0.0, 0.0, -1.125}};
  write_point_cloud(dir.file("cloud.txt"), pts);
  const auto back = read_point_cloud(dir.file("cloud.txt"));
  REQUIRE(back.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(back[i].t == doctest::Approx(pts[i].t).epsilon(1e-6));
    CHECK(back[i].x == doctest::Approx(pts[i].x).epsilon(1e-6));
    CHECK(back[i].z == doctest::Approx(pts[i].z).epsilon(1e-6));
  }

  std::ofstream out(dir.file("hand.txt"));
  out << "# a comment\n\n0.5 1 2 3\n";
  out.close();
  const auto hand = read_point_cloud(dir.file("hand.txt"));
  REQUIRE(hand.size() == 1);
  CHECK(hand[0].y == doctest::Approx(2.0));
}

TEST_CASE("parse errors carry the file name and line number") {
  TempDir dir;
  std::ofstream out(dir.file("bad.txt"));
  out << "0 0 0 0\n0 0 0 0\n0 nonsense 0 0\n";
  out.close();
  try {
    read_point_cloud(dir.file("bad.txt"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("bad.txt") != std::string::npos);
    CHECK(msg.find(":3") != std::string::npos);
  }
  CHECK_THROWS_AS(read_point_cloud(dir.file("missing.txt")), ParseError);
}

TEST_CASE("pgm and label images round-trip") {
  TempDir dir;
  std::vector<std::uint8_t> bytes{0, 1, 2, 3, 4, 5};
  write_pgm(dir.file("img.pgm"), 3, 2, bytes);
  int w = 0, h = 0;
  std::vector<std::uint8_t> back;
  read_pgm(dir.file("img.pgm"), w, h, back);
  CHECK(w == 3);
  CHECK(h == 2);
  CHECK(back == bytes);

  LabelImage img(4, 3, kUnlabeled);
  img.set(1, 2, 5);
  img.set(0, 0, 0);
  write_label_image(dir.file("labels.pgm"), img);
  const auto li = read_label_image(dir.file("labels.pgm"));
  CHECK(li.width() == 4);
  CHECK(li.height() == 3);
  CHECK(li.at(1, 2) == 5);
  CHECK(li.at(0, 0) == 0);
  CHECK(li.at(3, 1) == kUnlabeled);
}

TEST_CASE("occupancy pgm uses the fixed byte palette with north up") {
  TempDir dir;
  OccupancyGrid grid;
  grid.spec = GridSpec{1.0, 2.0, 3, 2, 0.5};
  grid.states.assign(6, OccState::Free);
  grid.set(0, 0, OccState::Occupied);
  grid.set(2, 1, OccState::Unknown);
  write_occupancy_pgm(dir.file("occ.pgm"), grid);

  // Raw bytes: the iy=1 row is written first (top of the image).
  int w = 0, h = 0;
  std::vector<std::uint8_t> bytes;
  read_pgm(dir.file("occ.pgm"), w, h, bytes);
  REQUIRE(w == 3);
  REQUIRE(h == 2);
  CHECK(bytes[0] == 254);  // (0,1) free
  CHECK(bytes[2] == 205);  // (2,1) unknown
  CHECK(bytes[3] == 0);    // (0,0) occupied
  CHECK(bytes[4] == 254);

  const auto back = read_occupancy_pgm(dir.file("occ.pgm"));
  CHECK(back.spec.width == 3);
  CHECK(back.spec.height == 2);
  CHECK(back.spec.origin_x == doctest::Approx(1.0));
  CHECK(back.spec.resolution == doctest::Approx(0.5));
  CHECK(back.at(0, 0) == OccState::Occupied);
  CHECK(back.at(2, 1) == OccState::Unknown);
  CHECK(back.at(1, 0) == OccState::Free);
}

TEST_CASE("map dumps preserve heights, layers and absences") {
  TempDir dir;
  ElevationGridMap map(GridSpec{-1.0, -2.0, 4, 3, 0.25});
  std::vector<PointStamped> pts{{0.5, -0.9, -1.9, 1.5}, {0.5, -0.65, -1.9, 0.25}};
  map.insert_points(pts);
  map.at(0, 0).slope_deg = 12.5;
  map.at(0, 0).traversability = 0.75;
  map.at(0, 0).trav_source = TraversabilitySource::Geometric;
  map.at(1, 0).traversability = 0.0;
  map.at(1, 0).trav_source = TraversabilitySource::SemanticForbidden;

  write_map_dump(dir.path.string(), map);
  const auto back = read_map_dump(dir.path.string());
  CHECK(back.spec().width == 4);
  CHECK(back.spec().origin_y == doctest::Approx(-2.0));
  CHECK(back.at(0, 0).mean_height() == doctest::Approx(1.5).epsilon(1e-6));
  CHECK(back.at(1, 0).mean_height() == doctest::Approx(0.25).epsilon(1e-6));
  CHECK(back.at(2, 2).empty());
  REQUIRE(back.at(0, 0).slope_deg.has_value());
  CHECK(*back.at(0, 0).slope_deg == doctest::Approx(12.5).epsilon(1e-6));
  CHECK_FALSE(back.at(0, 0).step_height.has_value());
  CHECK(*back.at(0, 0).traversability == doctest::Approx(0.75));
  CHECK(*back.at(1, 0).traversability == doctest::Approx(0.0));
  CHECK_FALSE(back.at(2, 2).traversability.has_value());
}

TEST_CASE("camera calibration round-trips including the frame flag") {
  TempDir dir;
  CameraModel cam;
  cam.K << 591.8, 0.0, 320.0, 0.0, 591.8, 180.0, 0.0, 0.0, 1.0;
  Eigen::Matrix4d E = Eigen::Matrix4d::Identity();
  E.block<3, 3>(0, 0) = Eigen::AngleAxisd(0.3, Eigen::Vector3d::UnitY()).toRotationMatrix();
  E(2, 3) = -1.75;
  cam.E = E;
  cam.width = 640;
  cam.height = 360;

  write_camera_calibration(dir.file("calib.json"), cam, true);
  const auto back = read_camera_calibration(dir.file("calib.json"));
  CHECK(back.extrinsic_in_robot_frame);
  CHECK(back.camera.width == 640);
  CHECK((back.camera.K - cam.K).norm() < 1e-9);
  CHECK((back.camera.E - cam.E).norm() < 1e-9);

  std::ofstream bad(dir.file("bad.json"));
  bad << R"({"K": [1, 2, 3], "E": null, "width": 2, "height": 2})";
  bad.close();
  CHECK_THROWS_AS(read_camera_calibration(dir.file("bad.json")), ParseError);
}

TEST_CASE("pose streams and label manifests parse") {
  TempDir dir;
  std::vector<Pose> poses(2);
  poses[0].position = {1.0, 2.0, 3.0};
  poses[0].orientation = Eigen::Quaterniond(Eigen::AngleAxisd(0.5, Eigen::Vector3d::UnitZ()));
  poses[0].stamp = 0.25;
  poses[1].position = {-1.0, 0.0, 0.5};
  poses[1].stamp = 0.5;
  write_pose_stream(dir.file("poses.txt"), poses);
  const auto back = read_pose_stream(dir.file("poses.txt"));
  REQUIRE(back.size() == 2);
  CHECK(back[0].position.x() == doctest::Approx(1.0));
  CHECK(back[0].stamp == doctest::Approx(0.25));
  CHECK(back[0].normalized(1e-6));
  CHECK(back[0].orientation.angularDistance(poses[0].orientation) < 1e-6);

  std::ofstream mf(dir.file("labels.txt"));
  mf << "# stamp path\n0.1 label_0000.pgm\n0.2 label_0001.pgm\n";
  mf.close();
  const auto refs = read_label_manifest(dir.file("labels.txt"));
  REQUIRE(refs.size() == 2);
  CHECK(refs[0].t == doctest::Approx(0.1));
  // Paths are resolved relative to the manifest directory.
  CHECK(refs[1].path == (dir.path / "label_0001.pgm").string());
}

TEST_CASE("path csv round-trips") {
  TempDir dir;
  std::vector<Pose2D> path{{0.0, 0.0, 0.0}, {1.5, -0.25, 1.047198}};
  write_path_csv(dir.file("path.csv"), path);
  const auto back = read_path_csv(dir.file("path.csv"));
  REQUIRE(back.size() == 2);
  CHECK(back[1].x == doctest::Approx(1.5).epsilon(1e-6));
  CHECK(back[1].theta == doctest::Approx(1.047198).epsilon(1e-6));
}

TEST_CASE("png writer emits a well-formed signature and chunks") {
  TempDir dir;
  std::vector<std::uint8_t> rgb(6 * 4 * 3, 0);
  rgb[0] = 255;
  write_png_rgb(dir.file("img.png"), 6, 4, rgb);

  std::ifstream in(dir.file("img.png"), std::ios::binary);
  REQUIRE(in.good());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  REQUIRE(bytes.size() > 20);
  const std::uint8_t sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
  for (int i = 0; i < 8; ++i) CHECK(bytes[i] == sig[i]);
  const std::string tail(bytes.end() - 8, bytes.end());
  CHECK(tail.find("IEND") != std::string::npos);
}
