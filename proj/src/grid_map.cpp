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

#include "travmap/grid_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace travmap {

void Cell::add_height(double z, double stamp, int capacity) {
  if (ring_.empty()) ring_.assign(static_cast<std::size_t>(capacity), 0.0);
  if (count_ < capacity) {
    ring_[(head_ + count_) % capacity] = z;
    ++count_;
  } else {
    ring_[head_] = z;
    head_ = (head_ + 1) % capacity;
  }
  recompute_mean();
  last_update_ = std::max(last_update_, stamp);
}

std::vector<double> Cell::heights_oldest_first() const {
  std::vector<double> out;
  out.reserve(count_);
  const int cap = static_cast<int>(ring_.size());
  for (int i = 0; i < count_; ++i) out.push_back(ring_[(head_ + i) % cap]);
  return out;
}

void Cell::recompute_mean() {
  // Summed in sorted order so the mean does not depend on arrival order of
  // the samples currently in the window.
  std::array<double, 64> buf;
  const int cap = static_cast<int>(ring_.size());
  for (int i = 0; i < count_; ++i) buf[i] = ring_[(head_ + i) % cap];
  std::sort(buf.begin(), buf.begin() + count_);
  double sum = 0.0;
  for (int i = 0; i < count_; ++i) sum += buf[i];
  mean_ = sum / count_;
}

ElevationGridMap::ElevationGridMap(const GridSpec& spec, int heights_per_cell)
    : spec_(spec), heights_per_cell_(heights_per_cell) {
  if (!spec_.valid()) throw std::invalid_argument("ElevationGridMap: invalid grid spec");
  if (heights_per_cell_ < 1 || heights_per_cell_ > 64)
    throw std::invalid_argument("ElevationGridMap: heights_per_cell must be in [1, 64]");
  cells_.resize(static_cast<std::size_t>(spec_.cell_count()));
  touch_epoch_.assign(cells_.size(), 0);
}

InsertSummary ElevationGridMap::insert_points(std::span<const PointStamped> points) {
  InsertSummary summary;
  const auto pass = begin_touch_pass();
  for (const auto& p : points) {
    const auto idx = spec_.world_to_index(p.x, p.y);
    if (!idx) {
      ++summary.points_out_of_bounds;
      continue;
    }
    const int flat = spec_.flat(*idx);
    cells_[flat].add_height(p.z, p.t, heights_per_cell_);
    ++summary.points_inserted;
    if (mark_touched(flat, pass)) ++summary.cells_touched;
  }
  return summary;
}

std::uint32_t ElevationGridMap::begin_touch_pass() {
  ++epoch_counter_;
  if (epoch_counter_ == 0) {  // wrapped; reset the per-cell marks
    std::fill(touch_epoch_.begin(), touch_epoch_.end(), 0u);
    epoch_counter_ = 1;
  }
  return epoch_counter_;
}

bool ElevationGridMap::mark_touched(int flat_index, std::uint32_t pass) {
  if (touch_epoch_[flat_index] == pass) return false;
  touch_epoch_[flat_index] = pass;
  return true;
}

}  // namespace travmap
