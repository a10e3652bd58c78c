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
#include <vector>

#include "travmap/grid_map.hpp"
#include "travmap/types.hpp"

namespace travmap {

/// One 8-connected component of scored, below-threshold cells.
struct Region {
  std::vector<CellIndex> cells;
  double mean_traversability = 0.0;
  /// Highest cell height minus the mean height of the traversable cells
  /// bordering the region; +inf when no traversable border exists.
  double relative_height = 0.0;
  double span_x = 0.0;  // m, bounding-box extent
  double span_y = 0.0;  // m
};

enum class OccState : std::uint8_t { Free = 0, Occupied = 1, Unknown = 2 };

enum class UnknownPolicy : std::uint8_t { Occupied = 0, Free = 1, Unknown = 2 };

struct OccupancyGrid {
  GridSpec spec;
  std::vector<OccState> states;

  OccState at(int ix, int iy) const { return states[iy * spec.width + ix]; }
  OccState at(const CellIndex& idx) const { return at(idx.ix, idx.iy); }
  void set(int ix, int iy, OccState s) { states[iy * spec.width + ix] = s; }
};

/// Every 8-connected region of cells whose traversability is present and
/// below t_occ, with the statistics used by the promotion rule. The regions
/// partition exactly the below-threshold cells.
std::vector<Region> find_nontraversable_regions(const ElevationGridMap& map, double t_occ);

/// Promote regions that the machine straddles or rolls over: mean score
/// below t_occ, relative height under h_cri, and both bounding-box extents
/// under half the track separation. Promoted cells get exactly t_occ
/// (minimally traversable, not fully trusted). Returns promoted cell count.
int remove_small_regions(ElevationGridMap& map, const std::vector<Region>& regions,
                         double h_cri, double track_separation, double t_occ);

/// Threshold the traversability layer: value >= t_occ is Free, below is
/// Occupied, absent follows the policy.
OccupancyGrid to_occupancy(const ElevationGridMap& map, double t_occ,
                           UnknownPolicy policy = UnknownPolicy::Occupied);

}  // namespace travmap
