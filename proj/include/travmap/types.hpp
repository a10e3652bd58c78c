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

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace travmap {

struct CellIndex {
  int ix = 0;
  int iy = 0;
  bool operator==(const CellIndex&) const = default;
};

/// One range return in the fixed world frame.
struct PointStamped {
  double t = 0.0;                    // seconds
  double x = 0.0, y = 0.0, z = 0.0;  // meters
};

/// Positioning sample (e.g. from an RTK receiver).
struct Pose {
  Eigen::Vector3d position{0.0, 0.0, 0.0};
  Eigen::Quaterniond orientation{1.0, 0.0, 0.0, 0.0};
  double stamp = 0.0;

  bool normalized(double tol = 1e-9) const {
    return std::abs(orientation.norm() - 1.0) <= tol;
  }
};

/// Planar pose used by the planner and the simulator. theta in radians.
struct Pose2D {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
};

/// Terrain categories, ordered by their label-image index.
enum class SemanticClass : std::uint8_t {
  Flat = 0,
  Bumpy = 1,
  MixedWaterDirt = 2,
  Water = 3,
  RockPile = 4,
  Obstacle = 5,
  Excavator = 6,
};

inline constexpr int kNumSemanticClasses = 7;

/// Label-image marker for pixels/points that carry no class.
inline constexpr std::uint8_t kUnlabeled = 255;

/// Tie-break order for majority voting; higher rank = more dangerous.
inline int danger_rank(SemanticClass c) {
  switch (c) {
    case SemanticClass::Flat: return 0;
    case SemanticClass::Bumpy: return 1;
    case SemanticClass::MixedWaterDirt: return 2;
    case SemanticClass::Water: return 3;
    case SemanticClass::RockPile: return 4;
    case SemanticClass::Excavator: return 5;
    case SemanticClass::Obstacle: return 6;
  }
  return -1;
}

inline const char* to_string(SemanticClass c) {
  switch (c) {
    case SemanticClass::Flat: return "flat";
    case SemanticClass::Bumpy: return "bumpy";
    case SemanticClass::MixedWaterDirt: return "mixed_water_dirt";
    case SemanticClass::Water: return "water";
    case SemanticClass::RockPile: return "rock_pile";
    case SemanticClass::Obstacle: return "obstacle";
    case SemanticClass::Excavator: return "excavator";
  }
  return "?";
}

inline std::optional<SemanticClass> semantic_class_from_string(const std::string& s) {
  for (int i = 0; i < kNumSemanticClasses; ++i) {
    const auto c = static_cast<SemanticClass>(i);
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

inline double deg2rad(double d) { return d * M_PI / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / M_PI; }

/// Wrap an angle to (-pi, pi].
inline double wrap_angle(double a) {
  a = std::fmod(a + M_PI, 2.0 * M_PI);
  if (a <= 0.0) a += 2.0 * M_PI;
  return a - M_PI;
}

/// Smallest absolute difference between two headings, in radians.
inline double angle_diff(double a, double b) { return std::abs(wrap_angle(a - b)); }

}  // namespace travmap
