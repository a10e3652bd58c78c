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
#include <string>

#include "travmap/geometry.hpp"
#include "travmap/grid_map.hpp"
#include "travmap/planner.hpp"
#include "travmap/postprocess.hpp"

namespace travmap {

/// Everything the pipeline and the tools need, with working defaults for
/// every field. A missing config file or missing keys simply keep the
/// defaults.
struct PipelineConfig {
  GridSpec grid{0.0, 0.0, 250, 250, 0.2};
  MachineSpec machine;
  /// Normally derived from `machine` and the grid resolution; a full
  /// override can be given in the config file.
  std::optional<GeoThresholds> threshold_override;
  int heights_per_cell = 10;
  double window_s = 2.0;          // time window for geometric updates
  double image_match_tol_s = 0.1; // cloud/label association tolerance
  double label_decay = 1.0;       // per-update histogram factor; 1 = off
  double t_occ = 0.6;             // occupancy threshold on traversability
  UnknownPolicy unknown_policy = UnknownPolicy::Occupied;
  std::string camera_calibration; // path, optional
  VehicleFootprint footprint;
  PlannerConfig planner;

  GeoThresholds thresholds() const {
    return threshold_override ? *threshold_override
                              : derive_thresholds(machine, grid.resolution);
  }
  GeoWindows windows() const { return derive_windows(machine, grid.resolution); }
};

/// Load a JSON config; every key is optional, unknown keys are rejected.
/// Throws ParseError on malformed input.
PipelineConfig load_config(const std::string& path);
void write_config(const std::string& path, const PipelineConfig& cfg);

}  // namespace travmap
