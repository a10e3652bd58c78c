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
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "travmap/planner.hpp"
#include "travmap/rng.hpp"
#include "travmap/semantics.hpp"
#include "travmap/types.hpp"

namespace travmap {

/// Axis-aligned rectangle in world coordinates, half open on the far edges.
struct WorldRect {
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;

  bool contains(double x, double y) const {
    return x >= x0 && x < x1 && y >= y0 && y < y1;
  }
  double center_x() const { return 0.5 * (x0 + x1); }
  double center_y() const { return 0.5 * (y0 + y1); }
  /// Distance from (x, y) to the nearest edge, 0 outside the rectangle.
  double inset_depth(double x, double y) const;
};

enum class FeatureKind : std::uint8_t {
  Mound,     ///< Flat-topped rise climbing at slope_deg from every edge.
  Pit,       ///< Flat-bottomed depression, mirror of Mound.
  Bumpy,     ///< Sinusoidal corrugation, amplitude in `height`.
  Water,     ///< Level surface at the pre-existing center height.
  RockPile,  ///< Random cones seeded by `seed`, painted RockPile.
  Box,       ///< Flat-topped block added above ground, painted `box_class`.
};

struct Feature {
  FeatureKind kind{};
  WorldRect rect{};
  double height = 0.0;     ///< Peak height, pit depth, box height or bump amplitude.
  double slope_deg = 0.0;  ///< Flank slope for Mound and Pit.
  SemanticClass box_class = SemanticClass::Obstacle;
  std::uint64_t seed = 0;  ///< Rock placement seed for RockPile.
};

/// Scenario description: terrain content plus the planning problem posed on it.
struct ScenarioSpec {
  int id = 0;
  std::string name;
  bool difficult_terrain = false;
  bool has_obstacles = false;
  /// Scenario contains water sheets directly between start and goals, so a
  /// geometry-only map is expected to route straight through them.
  bool flat_water = false;
  Pose2D start{};
  WorldRect goal_region{};
  double min_goal_distance = 15.0;
  std::uint64_t terrain_seed = 0;
  std::vector<Feature> features;
};

/// Synthetic work site sampled on a fine height field. The ground field
/// excludes boxes so that true surface slope reflects terrain only; the
/// surface field includes them and is what range sensing sees.
class World {
 public:
  World(ScenarioSpec spec, double width_m, double height_m, double texel);

  const ScenarioSpec& scenario() const { return spec_; }
  double width() const { return width_; }
  double height() const { return height_; }
  double texel() const { return texel_; }

  bool in_field(double x, double y) const {
    return x >= 0.0 && x < width_ && y >= 0.0 && y < height_;
  }

  /// Terrain height without boxes, bilinearly interpolated.
  double ground(double x, double y) const;
  /// Sensed height including boxes, bilinearly interpolated.
  double surface(double x, double y) const;
  /// Class painted on the texel under (x, y).
  std::uint8_t class_at(double x, double y) const;
  /// True terrain slope at the texel under (x, y), from the ground field.
  double slope_deg_at(double x, double y) const;
  /// Texel is dangerous: hazard class or terrain steeper than the climb limit.
  bool hazard_at(double x, double y) const;

  /// True when any hazard texel lies under the footprint at `pose`.
  bool footprint_hits_hazard(const Pose2D& pose, const VehicleFootprint& fp) const;

 private:
  double bilinear(const std::vector<float>& field, double x, double y) const;
  std::size_t texel_index(double x, double y) const;

  ScenarioSpec spec_;
  double width_, height_, texel_;
  int nx_, ny_;
  std::vector<float> ground_;
  std::vector<float> surface_;
  std::vector<float> slope_deg_;
  std::vector<std::uint8_t> class_;
  std::vector<std::uint8_t> hazard_;
};

/// Forward-facing depth and segmentation sensor rigidly mounted on the robot.
struct SensorConfig {
  double hfov_deg = 56.8;
  double min_range = 2.0;
  double max_range = 18.0;
  int points_per_frame = 10000;
  double noise_sigma = 0.02;
  int image_width = 640;
  int image_height = 360;
  double mount_height = 2.5;
  double pitch_down_deg = 20.0;

  double focal_px() const;
};

/// One synchronized sensor frame: a world-frame cloud and the segmentation
/// image with the camera model (world-frame extrinsic) that rendered it.
struct SensorFrame {
  double stamp = 0.0;
  std::vector<PointStamped> cloud;
  LabelImage labels;
  CameraModel camera;
};

/// Rigid robot-to-camera transform for the mounted sensor. Camera frame is
/// z forward, x right, y down; the mount sits `mount_height` above the robot
/// base and pitches down by `pitch_down_deg`.
Eigen::Matrix4d camera_mount_extrinsic(const SensorConfig& cfg);

/// World-to-robot transform for a planar pose whose base sits at height z0.
Eigen::Matrix4d world_to_robot(const Pose2D& pose, double z0);

/// Full camera model for a robot standing on the terrain at `pose`.
CameraModel sensor_camera(const World& world, const Pose2D& pose, const SensorConfig& cfg);

/// Simulates one frame: ranges sampled in the horizontal field of view with
/// Gaussian height noise, plus a z-buffered segmentation render.
SensorFrame sense(const World& world, const Pose2D& pose, double stamp,
                  const SensorConfig& cfg, Rng& rng);

/// Serpentine sweep covering the field with east and west passes.
std::vector<Pose2D> survey_poses(const World& world, double row_spacing = 4.8,
                                 double step = 1.2, double margin = 2.6);

/// Terrain slope above which a texel counts as a hazard on its own.
inline constexpr double kHazardSlopeDeg = 30.0;

/// Benchmark field dimensions and simulation constants.
inline constexpr double kFieldWidth = 40.0;
inline constexpr double kFieldHeight = 24.0;
inline constexpr double kSimTexel = 0.05;
inline constexpr double kFrameDt = 0.1;

/// Nine fixed scenarios used by the benchmark.
std::vector<ScenarioSpec> default_scenario_suite();

}  // namespace travmap
