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

#include <optional>
#include <vector>

#include "travmap/postprocess.hpp"
#include "travmap/types.hpp"

namespace travmap {

/// Rectangular machine footprint, centered on the pose, length along the
/// heading.
struct VehicleFootprint {
  double length = 5.0;          // m
  double width = 3.4;           // m
  double min_turn_radius = 2.0; // m; clamped to one cell when smaller
  bool allow_reverse = true;
};

struct PlannerConfig {
  int heading_bins = 72;            // discretization of theta
  double arc_length_factor = 1.5;   // primitive length in cells
  double position_tol = 0.5;        // m, goal acceptance
  double heading_tol_deg = 15.0;    // deg, goal acceptance
  double reverse_cost_factor = 2.0; // cost multiplier for reverse arcs
  double heuristic_weight = 1.5;    // >= 1; inflates h, trades optimality for speed
  int max_expansions = 200000;
  bool unknown_blocks = true;       // treat Unknown cells as obstacles
};

/// True iff any grid cell overlapped by the rotated footprint rectangle is
/// Occupied (or Unknown under a blocking policy). Zero-area edge touches do
/// not count as overlap.
bool collision_check(const Pose2D& pose, const VehicleFootprint& footprint,
                     const OccupancyGrid& grid, bool unknown_blocks = true);

/// 8-connected shortest-path distance (m) from every passable cell to the
/// goal cell; +inf where unreachable. Absent when the goal cell itself is
/// not passable.
std::optional<std::vector<double>> holonomic_heuristic(const OccupancyGrid& grid,
                                                       const CellIndex& goal,
                                                       bool unknown_blocks = true);

enum class PlanStatus { Success, NoPath, InvalidStart };

inline const char* to_string(PlanStatus s) {
  switch (s) {
    case PlanStatus::Success: return "success";
    case PlanStatus::NoPath: return "no_path";
    case PlanStatus::InvalidStart: return "invalid_start";
  }
  return "?";
}

struct PlannedPath {
  std::vector<Pose2D> poses;  // dense, ~half a cell apart
  double total_length = 0.0;  // m, driven distance (reverse counted positive)
};

struct PlanResult {
  PlanStatus status = PlanStatus::NoPath;
  PlannedPath path;
  int expansions = 0;
};

/// Hybrid A* over (x, y, theta): arc motion primitives at +/-1/R and 0
/// curvature (reverse variants cost extra), grid + heading-bin deduplication,
/// Dijkstra/Euclidean max heuristic inflated by heuristic_weight, FIFO
/// tie-break for determinism. Path cost is bounded by heuristic_weight times
/// the optimum; a weight of 1 restores plain A*.
PlanResult plan(const OccupancyGrid& grid, const Pose2D& start, const Pose2D& goal,
                const VehicleFootprint& footprint, const PlannerConfig& config = {});

}  // namespace travmap
