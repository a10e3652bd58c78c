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

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "travmap/grid_map.hpp"
#include "travmap/postprocess.hpp"
#include "travmap/semantics.hpp"
#include "travmap/types.hpp"

namespace travmap {

/// Input error with file and line context.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& file, int line, const std::string& message)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + message) {}
  explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

/// ASCII point cloud, one `t x y z` record per line. Blank lines and lines
/// starting with '#' are skipped.
std::vector<PointStamped> read_point_cloud(const std::string& path);
void write_point_cloud(const std::string& path, const std::vector<PointStamped>& points);

/// Binary PGM (P5, maxval 255).
void write_pgm(const std::string& path, int width, int height,
               const std::vector<std::uint8_t>& bytes);
void read_pgm(const std::string& path, int& width, int& height,
              std::vector<std::uint8_t>& bytes);

/// Label images as PGM: pixel = class index, 255 = unlabeled.
LabelImage read_label_image(const std::string& path);
void write_label_image(const std::string& path, const LabelImage& image);

/// Camera calibration JSON: row-major "K" (9), "E" (16), "width", "height",
/// optional "extrinsic_frame" ("world" or "robot", default "world").
struct CameraCalibration {
  CameraModel camera;
  bool extrinsic_in_robot_frame = false;
};
CameraCalibration read_camera_calibration(const std::string& path);
void write_camera_calibration(const std::string& path, const CameraModel& cam,
                              bool extrinsic_in_robot_frame);

/// Pose stream, one `t x y z qx qy qz qw` record per line.
std::vector<Pose> read_pose_stream(const std::string& path);
void write_pose_stream(const std::string& path, const std::vector<Pose>& poses);

/// Label manifest, one `t path` record per line (paths relative to the
/// manifest's directory).
struct LabelFrameRef {
  double t = 0.0;
  std::string path;
};
std::vector<LabelFrameRef> read_label_manifest(const std::string& path);

/// Map dump: one CSV per layer (height, slope, step, roughness,
/// traversability; row iy = 0 first, "nan" where absent) plus gridspec.json.
void write_map_dump(const std::string& dir, const ElevationGridMap& map);
ElevationGridMap read_map_dump(const std::string& dir);

/// Occupancy PGM: Free = 254, Occupied = 0, Unknown = 205; top image row is
/// the highest iy. A JSON sidecar (same basename, .json) carries resolution
/// and origin.
void write_occupancy_pgm(const std::string& path, const OccupancyGrid& grid);
OccupancyGrid read_occupancy_pgm(const std::string& path);

/// Path CSV, one `x y theta` record per line.
void write_path_csv(const std::string& path, const std::vector<Pose2D>& poses);
std::vector<Pose2D> read_path_csv(const std::string& path);

/// Minimal RGB8 PNG writer (zlib-compressed, no filtering tricks).
void write_png_rgb(const std::string& path, int width, int height,
                   const std::vector<std::uint8_t>& rgb);

/// Traversability ramp image: grey (blocked) to green (free); absent cells
/// dark. Top image row is the highest iy.
void write_traversability_png(const std::string& path, const ElevationGridMap& map);

}  // namespace travmap
