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

#include "travmap/semantics.hpp"

#include <cmath>
#include <stdexcept>

namespace travmap {

bool CameraModel::valid() const {
  if (width <= 0 || height <= 0) return false;
  const double eps = 1e-9;
  if (std::abs(K(1, 0)) > eps || std::abs(K(2, 0)) > eps || std::abs(K(2, 1)) > eps)
    return false;
  if (K(0, 0) <= 0.0 || K(1, 1) <= 0.0 || std::abs(K(2, 2) - 1.0) > eps) return false;
  const Eigen::RowVector4d bottom = E.row(3);
  if ((bottom - Eigen::RowVector4d(0, 0, 0, 1)).norm() > 1e-9) return false;
  const Eigen::Matrix3d R = E.topLeftCorner<3, 3>();
  if ((R.transpose() * R - Eigen::Matrix3d::Identity()).norm() > 1e-6) return false;
  if (R.determinant() < 0.0) return false;
  return true;
}

std::optional<PixelCoord> project_point(const Eigen::Vector3d& p, const CameraModel& cam) {
  const Eigen::Vector4d pc = cam.E * p.homogeneous();
  if (pc.z() <= 0.0) return std::nullopt;
  const Eigen::Vector3d uvw = cam.K * pc.head<3>() / pc.z();
  const double u = uvw.x();
  const double v = uvw.y();
  if (u < 0.0 || u >= cam.width || v < 0.0 || v >= cam.height) return std::nullopt;
  return PixelCoord{u, v};
}

std::vector<LabeledPoint> label_cloud(std::span<const PointStamped> points,
                                      const LabelImage& labels, const CameraModel& cam) {
  if (labels.width() != cam.width || labels.height() != cam.height)
    throw std::invalid_argument("label_cloud: label image dimensions do not match the camera");
  std::vector<LabeledPoint> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    LabeledPoint lp{p, kUnlabeled};
    if (const auto px = project_point({p.x, p.y, p.z}, cam)) {
      lp.label = labels.at(static_cast<int>(std::floor(px->u)),
                           static_cast<int>(std::floor(px->v)));
    }
    out.push_back(lp);
  }
  return out;
}

int accumulate_labels(ElevationGridMap& map, std::span<const LabeledPoint> points) {
  const auto pass = map.begin_touch_pass();
  int cells = 0;
  for (const auto& lp : points) {
    if (lp.label >= kNumSemanticClasses) continue;  // unlabeled or junk
    const auto idx = map.spec().world_to_index(lp.point.x, lp.point.y);
    if (!idx) continue;
    map.at(*idx).label_histogram[lp.label] += 1.0f;
    if (map.mark_touched(map.spec().flat(*idx), pass)) ++cells;
  }
  return cells;
}

void decay_label_histograms(ElevationGridMap& map, double factor) {
  if (factor <= 0.0 || factor > 1.0)
    throw std::invalid_argument("decay_label_histograms: factor must be in (0, 1]");
  if (factor == 1.0) return;
  const auto& spec = map.spec();
  for (int iy = 0; iy < spec.height; ++iy)
    for (int ix = 0; ix < spec.width; ++ix)
      for (auto& v : map.at(ix, iy).label_histogram) v *= static_cast<float>(factor);
}

std::optional<SemanticClass> majority_label(const Cell& cell) {
  int best = -1;
  for (int i = 0; i < kNumSemanticClasses; ++i) {
    if (cell.label_histogram[i] <= 0.0f) continue;
    if (best < 0) {
      best = i;
      continue;
    }
    const float cur = cell.label_histogram[i];
    const float top = cell.label_histogram[best];
    if (cur > top || (cur == top && danger_rank(static_cast<SemanticClass>(i)) >
                                        danger_rank(static_cast<SemanticClass>(best))))
      best = i;
  }
  if (best < 0) return std::nullopt;
  return static_cast<SemanticClass>(best);
}

}  // namespace travmap
