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
#include <span>
#include <vector>

#include <Eigen/Core>

#include "travmap/grid_map.hpp"
#include "travmap/types.hpp"

namespace travmap {

/// Pinhole camera with a rigid world-to-camera transform. Camera frame:
/// z forward, x right, y down.
struct CameraModel {
  Eigen::Matrix3d K = Eigen::Matrix3d::Identity();  // intrinsics
  Eigen::Matrix4d E = Eigen::Matrix4d::Identity();  // world -> camera
  int width = 0;
  int height = 0;

  bool valid() const;
};

struct PixelCoord {
  double u = 0.0;
  double v = 0.0;
};

/// Project a world point into the image. Absent when the point lies behind
/// the camera (z_c <= 0) or outside [0, W) x [0, H).
std::optional<PixelCoord> project_point(const Eigen::Vector3d& p, const CameraModel& cam);

/// Per-pixel class indices (0..6) or kUnlabeled.
class LabelImage {
 public:
  LabelImage() = default;
  LabelImage(int width, int height, std::uint8_t fill = kUnlabeled)
      : width_(width), height_(height),
        data_(static_cast<std::size_t>(width) * height, fill) {}

  int width() const { return width_; }
  int height() const { return height_; }
  std::uint8_t at(int x, int y) const { return data_[static_cast<std::size_t>(y) * width_ + x]; }
  void set(int x, int y, std::uint8_t v) { data_[static_cast<std::size_t>(y) * width_ + x] = v; }
  const std::vector<std::uint8_t>& data() const { return data_; }
  std::vector<std::uint8_t>& data() { return data_; }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> data_;
};

struct LabeledPoint {
  PointStamped point;
  std::uint8_t label = kUnlabeled;  // class index or kUnlabeled
};

/// Paint every visible point with the class under its pixel; points outside
/// the image (or behind the camera) come back unlabeled. Throws
/// std::invalid_argument when image and camera dimensions disagree.
std::vector<LabeledPoint> label_cloud(std::span<const PointStamped> points,
                                      const LabelImage& labels, const CameraModel& cam);

/// Add labeled points into the per-cell class histograms. Returns the number
/// of distinct cells touched. Unlabeled and out-of-bounds points are skipped.
int accumulate_labels(ElevationGridMap& map, std::span<const LabeledPoint> points);

/// Optional forgetting: scale all histograms by `factor` in (0, 1].
void decay_label_histograms(ElevationGridMap& map, double factor);

/// Highest-count class of the cell; ties break toward the more dangerous
/// class. Absent when the histogram is all zero.
std::optional<SemanticClass> majority_label(const Cell& cell);

}  // namespace travmap
