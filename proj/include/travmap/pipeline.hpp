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

#include <deque>
#include <limits>
#include <span>

#include "travmap/config.hpp"
#include "travmap/grid_map.hpp"
#include "travmap/postprocess.hpp"
#include "travmap/semantics.hpp"

namespace travmap {

/// Wall-clock statistics for one pipeline stage, in milliseconds.
struct StageTiming {
  int count = 0;
  double total_ms = 0.0;
  double min_ms = std::numeric_limits<double>::infinity();
  double max_ms = 0.0;

  void add(double ms);
  double mean_ms() const { return count > 0 ? total_ms / count : 0.0; }
};

struct PipelineTimings {
  StageTiming labeling;   ///< Point projection and histogram accumulation.
  StageTiming insertion;  ///< Height insertion into the grid.
  StageTiming update;     ///< Geometric layers and class fusion.
  StageTiming cycle;      ///< Full per-cloud cycle.
};

/// Per-cloud processing summary.
struct CloudReport {
  InsertSummary insert;
  int labeled_points = 0;  ///< Points that landed inside a label image.
  int updated_cells = 0;   ///< Cells re-evaluated by the layer update.
  bool used_label_frame = false;
};

/// Incremental mapping pipeline.
///
/// Owns the elevation grid and a short buffer of segmentation frames.
/// Each point cloud is inserted, labeled against the nearest frame in
/// time, and the traversability layers of recently touched cells are
/// recomputed.
class Pipeline {
 public:
  explicit Pipeline(const PipelineConfig& cfg);

  const PipelineConfig& config() const { return cfg_; }
  const GeoThresholds& thresholds() const { return thresholds_; }
  const GeoWindows& windows() const { return windows_; }
  const ElevationGridMap& map() const { return map_; }
  ElevationGridMap& map() { return map_; }
  const PipelineTimings& timings() const { return timings_; }

  /// Buffers a segmentation frame with its camera model (extrinsic in
  /// the world frame). Frames older than the newest few are dropped.
  void add_label_frame(double stamp, LabelImage image, const CameraModel& camera);

  /// Inserts a cloud, labels it against the closest buffered frame
  /// within the association tolerance, and refreshes the layers of all
  /// cells updated within the configured time window ending at `now`.
  /// Set `update_layers` to false to defer the layer pass (bulk loads).
  CloudReport process_cloud(std::span<const PointStamped> cloud, double now,
                            bool update_layers = true);

  /// Recomputes the traversability layers for cells updated within
  /// `window_s` seconds before `now`. Returns the cell count.
  int update_layers(double now, double window_s);

  /// Reclassifies small non-traversable regions as passable. Mutates
  /// the map; call once after mapping is done. Returns cells promoted.
  int apply_region_filter();

  /// Thresholds the current traversability layer into an occupancy grid.
  OccupancyGrid occupancy() const;

 private:
  struct LabelFrame {
    double stamp;
    LabelImage image;
    CameraModel camera;
  };

  const LabelFrame* nearest_frame(double stamp) const;

  PipelineConfig cfg_;
  GeoThresholds thresholds_;
  GeoWindows windows_;
  ElevationGridMap map_;
  std::deque<LabelFrame> frames_;
  PipelineTimings timings_;
};

}  // namespace travmap
