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

#include "travmap/postprocess.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace travmap {

namespace {

bool below_threshold(const Cell& c, double t_occ) {
  return c.traversability.has_value() && *c.traversability < t_occ;
}

bool traversable(const Cell& c, double t_occ) {
  return c.traversability.has_value() && *c.traversability >= t_occ;
}

}  // namespace

std::vector<Region> find_nontraversable_regions(const ElevationGridMap& map, double t_occ) {
  const auto& spec = map.spec();
  std::vector<Region> regions;
  std::vector<std::uint8_t> visited(static_cast<std::size_t>(spec.cell_count()), 0);

  std::vector<CellIndex> stack;
  for (int sy = 0; sy < spec.height; ++sy) {
    for (int sx = 0; sx < spec.width; ++sx) {
      const int sflat = sy * spec.width + sx;
      if (visited[sflat] || !below_threshold(map.at(sx, sy), t_occ)) continue;

      Region region;
      stack.assign(1, {sx, sy});
      visited[sflat] = 1;
      while (!stack.empty()) {
        const CellIndex cur = stack.back();
        stack.pop_back();
        region.cells.push_back(cur);
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            const CellIndex nb{cur.ix + dx, cur.iy + dy};
            if (!spec.in_bounds(nb)) continue;
            const int nflat = spec.flat(nb);
            if (visited[nflat] || !below_threshold(map.at(nb), t_occ)) continue;
            visited[nflat] = 1;
            stack.push_back(nb);
          }
        }
      }

      // Region statistics.
      double sum_t = 0.0;
      double max_h = -std::numeric_limits<double>::infinity();
      bool any_height = false;
      int min_ix = spec.width, max_ix = -1, min_iy = spec.height, max_iy = -1;
      for (const auto& idx : region.cells) {
        const Cell& c = map.at(idx);
        sum_t += *c.traversability;
        if (!c.empty()) {
          max_h = std::max(max_h, c.mean_height());
          any_height = true;
        }
        min_ix = std::min(min_ix, idx.ix);
        max_ix = std::max(max_ix, idx.ix);
        min_iy = std::min(min_iy, idx.iy);
        max_iy = std::max(max_iy, idx.iy);
      }
      region.mean_traversability = sum_t / static_cast<double>(region.cells.size());
      region.span_x = (max_ix - min_ix + 1) * spec.resolution;
      region.span_y = (max_iy - min_iy + 1) * spec.resolution;

      // Mean height of the traversable ring around the region.
      double border_sum = 0.0;
      int border_n = 0;
      for (const auto& idx : region.cells) {
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            const CellIndex nb{idx.ix + dx, idx.iy + dy};
            if (!spec.in_bounds(nb)) continue;
            const int nflat = spec.flat(nb);
            if (visited[nflat]) continue;  // inside this or marks double count
            const Cell& c = map.at(nb);
            if (!traversable(c, t_occ) || c.empty()) continue;
            visited[nflat] = 2;  // count each ring cell once
            border_sum += c.mean_height();
            ++border_n;
          }
        }
      }
      // Reset ring marks so later regions can reuse those cells.
      for (const auto& idx : region.cells) {
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            const CellIndex nb{idx.ix + dx, idx.iy + dy};
            if (!spec.in_bounds(nb)) continue;
            const int nflat = spec.flat(nb);
            if (visited[nflat] == 2) visited[nflat] = 0;
          }
        }
      }

      if (!any_height || border_n == 0) {
        region.relative_height = std::numeric_limits<double>::infinity();
      } else {
        region.relative_height = max_h - border_sum / border_n;
      }
      regions.push_back(std::move(region));
    }
  }
  return regions;
}

int remove_small_regions(ElevationGridMap& map, const std::vector<Region>& regions,
                         double h_cri, double track_separation, double t_occ) {
  const double max_span = 0.5 * track_separation;
  int promoted = 0;
  for (const auto& region : regions) {
    if (region.mean_traversability >= t_occ) continue;
    if (!(region.relative_height < h_cri)) continue;
    if (!(region.span_x < max_span && region.span_y < max_span)) continue;
    for (const auto& idx : region.cells) {
      Cell& c = map.at(idx);
      c.traversability = t_occ;
      c.trav_source = TraversabilitySource::Geometric;
      ++promoted;
    }
  }
  return promoted;
}

OccupancyGrid to_occupancy(const ElevationGridMap& map, double t_occ, UnknownPolicy policy) {
  if (!(t_occ > 0.0 && t_occ < 1.0))
    throw std::invalid_argument("to_occupancy: t_occ must be in (0, 1)");
  const auto& spec = map.spec();
  OccupancyGrid grid;
  grid.spec = spec;
  grid.states.resize(static_cast<std::size_t>(spec.cell_count()));
  OccState unknown_state = OccState::Occupied;
  if (policy == UnknownPolicy::Free) unknown_state = OccState::Free;
  if (policy == UnknownPolicy::Unknown) unknown_state = OccState::Unknown;
  for (int iy = 0; iy < spec.height; ++iy) {
    for (int ix = 0; ix < spec.width; ++ix) {
      const Cell& c = map.at(ix, iy);
      OccState s = unknown_state;
      if (c.traversability.has_value())
        s = (*c.traversability >= t_occ) ? OccState::Free : OccState::Occupied;
      grid.set(ix, iy, s);
    }
  }
  return grid;
}

}  // namespace travmap
