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

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "travmap/types.hpp"

namespace travmap {

/// Geometry of a dense 2D grid over a fixed world region. Cell (ix, iy)
/// covers [origin + i*res, origin + (i+1)*res) on each axis.
struct GridSpec {
  double origin_x = 0.0;
  double origin_y = 0.0;
  int width = 0;   // cells along x
  int height = 0;  // cells along y
  double resolution = 0.2;  // m per cell

  bool valid() const { return resolution > 0.0 && width >= 1 && height >= 1; }
  int cell_count() const { return width * height; }

  bool in_bounds(const CellIndex& idx) const {
    return idx.ix >= 0 && idx.ix < width && idx.iy >= 0 && idx.iy < height;
  }

  std::optional<CellIndex> world_to_index(double x, double y) const {
    const CellIndex idx{static_cast<int>(std::floor((x - origin_x) / resolution)),
                        static_cast<int>(std::floor((y - origin_y) / resolution))};
    if (!in_bounds(idx)) return std::nullopt;
    return idx;
  }

  Eigen::Vector2d cell_center(const CellIndex& idx) const {
    return {origin_x + (idx.ix + 0.5) * resolution,
            origin_y + (idx.iy + 0.5) * resolution};
  }

  int flat(const CellIndex& idx) const { return idx.iy * width + idx.ix; }
};

enum class TraversabilitySource : std::uint8_t {
  Unknown = 0,
  Geometric = 1,
  SemanticFlat = 2,
  SemanticForbidden = 3,
};

inline const char* to_string(TraversabilitySource s) {
  switch (s) {
    case TraversabilitySource::Unknown: return "unknown";
    case TraversabilitySource::Geometric: return "geometric";
    case TraversabilitySource::SemanticFlat: return "semantic_flat";
    case TraversabilitySource::SemanticForbidden: return "semantic_forbidden";
  }
  return "?";
}

/// One map cell: a bounded FIFO of the latest height samples plus the
/// derived per-cell layers.
class Cell {
 public:
  /// Push a height sample, evicting the oldest once `capacity` is reached.
  void add_height(double z, double stamp, int capacity);

  bool empty() const { return count_ == 0; }
  int sample_count() const { return count_; }
  double mean_height() const { return mean_; }
  double last_update() const { return last_update_; }
  std::vector<double> heights_oldest_first() const;

  // Derived layers; absent until the windowed update computes them.
  std::optional<double> slope_deg;
  std::optional<double> step_height;
  std::optional<double> roughness;
  std::optional<double> traversability;
  TraversabilitySource trav_source = TraversabilitySource::Unknown;
  std::array<float, kNumSemanticClasses> label_histogram{};

 private:
  void recompute_mean();

  std::vector<double> ring_;  // allocated lazily, capacity fixed by the map
  int head_ = 0;              // index of the oldest sample
  int count_ = 0;
  double mean_ = 0.0;
  double last_update_ = -std::numeric_limits<double>::infinity();
};

struct InsertSummary {
  int cells_touched = 0;
  int points_inserted = 0;
  int points_out_of_bounds = 0;
};

/// Dense elevation map over a fixed region; no recentering, no resizing.
class ElevationGridMap {
 public:
  explicit ElevationGridMap(const GridSpec& spec, int heights_per_cell = 10);

  const GridSpec& spec() const { return spec_; }
  int heights_per_cell() const { return heights_per_cell_; }

  Cell& at(const CellIndex& idx) { return cells_[spec_.flat(idx)]; }
  const Cell& at(const CellIndex& idx) const { return cells_[spec_.flat(idx)]; }
  Cell& at(int ix, int iy) { return cells_[iy * spec_.width + ix]; }
  const Cell& at(int ix, int iy) const { return cells_[iy * spec_.width + ix]; }

  /// Rasterize a batch of world-frame points. Out-of-bounds points are
  /// counted and skipped.
  InsertSummary insert_points(std::span<const PointStamped> points);

  /// Distinct-cell bookkeeping shared with the label accumulator: start a
  /// pass, then mark_touched() returns true the first time a cell is seen.
  std::uint32_t begin_touch_pass();
  bool mark_touched(int flat_index, std::uint32_t pass);

 private:
  GridSpec spec_;
  int heights_per_cell_;
  std::vector<Cell> cells_;
  std::vector<std::uint32_t> touch_epoch_;
  std::uint32_t epoch_counter_ = 0;
};

/// Read-only view of the cells whose last update lies within [now - window,
/// now]. Stale cells are treated as absent so that geometry is only ever
/// computed from heights measured close together in time (guards against
/// slow vertical drift of the positioning solution between passes).
class WindowedView {
 public:
  WindowedView(const ElevationGridMap& map, double now, double window)
      : map_(&map), threshold_(now - window) {}

  const GridSpec& spec() const { return map_->spec(); }

  bool has(int ix, int iy) const {
    if (ix < 0 || ix >= spec().width || iy < 0 || iy >= spec().height) return false;
    const Cell& c = map_->at(ix, iy);
    return !c.empty() && c.last_update() >= threshold_;
  }
  bool has(const CellIndex& idx) const { return has(idx.ix, idx.iy); }

  const Cell* cell(int ix, int iy) const {
    return has(ix, iy) ? &map_->at(ix, iy) : nullptr;
  }

  std::optional<double> height(int ix, int iy) const {
    const Cell* c = cell(ix, iy);
    if (!c) return std::nullopt;
    return c->mean_height();
  }

  /// Cell center plus mean height, for surface fitting.
  Eigen::Vector3d point(int ix, int iy) const {
    const auto ctr = spec().cell_center({ix, iy});
    return {ctr.x(), ctr.y(), map_->at(ix, iy).mean_height()};
  }

  const ElevationGridMap& map() const { return *map_; }

 private:
  const ElevationGridMap* map_;
  double threshold_;
};

}  // namespace travmap
