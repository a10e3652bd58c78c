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
#include <vector>

#include "travmap/pipeline.hpp"
#include "travmap/simulator.hpp"

namespace travmap {

/// Which map variant a planner query runs against.
enum class MapMode : std::uint8_t { Fused, GeometricOnly };

const char* to_string(MapMode mode);

/// Pipeline configuration sized to a simulated field, with stock settings.
PipelineConfig benchmark_pipeline_config(const World& world);

/// Both map variants built from one identical sensor sweep. The geometric
/// variant is the same pipeline fed the same clouds but no label frames.
struct SurveyMaps {
  ElevationGridMap fused_map;
  ElevationGridMap geometric_map;
  OccupancyGrid fused;
  OccupancyGrid geometric;
  int frames = 0;
  double sense_ms = 0.0;
  double pipeline_ms = 0.0;
};

SurveyMaps survey_and_map(const World& world, const SensorConfig& sensor,
                          const PipelineConfig& cfg, std::uint64_t sensor_seed);

enum class TrialStatus : std::uint8_t {
  Success = 0,
  NoPath = 1,
  /// The planner returned a path, but replaying it over the true terrain
  /// drags the footprint through a hazard the map did not show.
  CollisionOnReplay = 2,
};

const char* to_string(TrialStatus status);

struct TrialRecord {
  int scenario_id = 0;
  MapMode mode = MapMode::Fused;
  int trial = 0;
  Pose2D goal{};
  TrialStatus status = TrialStatus::NoPath;
  double path_length = 0.0;
  int expansions = 0;
  double plan_ms = 0.0;  ///< Wall clock, reporting only; kept out of the CSVs.
  PlannedPath path;      ///< Retained for independent replay checks.
};

/// Occupancy grids and build statistics for one scenario.
struct ScenarioMaps {
  int scenario_id = 0;
  OccupancyGrid fused;
  OccupancyGrid geometric;
  int frames = 0;
  double sense_ms = 0.0;
  double pipeline_ms = 0.0;
};

struct BenchmarkReport {
  std::vector<ScenarioSpec> scenarios;
  std::vector<TrialRecord> trials;
  std::vector<ScenarioMaps> maps;
  double total_ms = 0.0;

  /// One row per planner query; deterministic for a fixed suite and seed.
  std::string trials_csv() const;
  /// Per-scenario and overall outcome counts; deterministic as above.
  std::string summary_csv() const;
  /// Human-readable summary including wall-clock figures.
  std::string table() const;

  double success_rate(MapMode mode) const;
  const ScenarioMaps* maps_for(int scenario_id) const;
};

/// Draws a goal pose inside `region`: far enough from the start, away from
/// the field border, clear of hazards around the footprint and on gentle
/// ground. Consumes three uniforms per attempt.
std::optional<Pose2D> sample_goal(const World& world, const Pose2D& start,
                                  const WorldRect& region, double min_distance,
                                  Rng& rng, int max_attempts = 1000);

/// True when any pose of the path drags the footprint over a hazard texel.
bool path_hits_hazard(const World& world, const PlannedPath& path,
                      const VehicleFootprint& fp);

/// Runs every scenario in both map modes with `trials_per_scenario` goal
/// queries each. Goals are identical across modes for a fair comparison.
BenchmarkReport run_benchmark(const std::vector<ScenarioSpec>& scenarios,
                              int trials_per_scenario, std::uint64_t master_seed);

}  // namespace travmap
