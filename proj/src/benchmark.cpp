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

#include "travmap/benchmark.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace travmap {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  const auto dt = std::chrono::steady_clock::now() - t0;
  return std::chrono::duration<double, std::milli>(dt).count();
}

void appendf(std::string& out, const char* fmt, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), fmt, args...);
  out += buf;
}

bool disc_clear_of_hazard(const World& world, double cx, double cy, double radius) {
  const double texel = world.texel();
  for (double y = cy - radius; y <= cy + radius; y += texel) {
    for (double x = cx - radius; x <= cx + radius; x += texel) {
      if (!world.in_field(x, y)) continue;
      if (std::hypot(x - cx, y - cy) > radius) continue;
      if (world.hazard_at(x, y)) return false;
    }
  }
  return true;
}

bool disc_gentle(const World& world, double cx, double cy, double radius,
                 double max_slope_deg) {
  const double texel = world.texel();
  for (double y = cy - radius; y <= cy + radius; y += texel) {
    for (double x = cx - radius; x <= cx + radius; x += texel) {
      if (!world.in_field(x, y)) continue;
      if (std::hypot(x - cx, y - cy) > radius) continue;
      if (world.slope_deg_at(x, y) > max_slope_deg) return false;
    }
  }
  return true;
}

struct OutcomeCount {
  int success = 0;
  int no_path = 0;
  int collision = 0;

  int total() const { return success + no_path + collision; }
  void add(const TrialRecord& rec, double& length_sum) {
    switch (rec.status) {
      case TrialStatus::Success:
        ++success;
        length_sum += rec.path_length;
        break;
      case TrialStatus::NoPath: ++no_path; break;
      case TrialStatus::CollisionOnReplay: ++collision; break;
    }
  }
};

}  // namespace

const char* to_string(MapMode mode) {
  return mode == MapMode::Fused ? "fused" : "geometric";
}

const char* to_string(TrialStatus status) {
  switch (status) {
    case TrialStatus::Success: return "success";
    case TrialStatus::NoPath: return "no_path";
    case TrialStatus::CollisionOnReplay: return "collision";
  }
  return "?";
}

PipelineConfig benchmark_pipeline_config(const World& world) {
  PipelineConfig cfg;
  cfg.grid.origin_x = 0.0;
  cfg.grid.origin_y = 0.0;
  cfg.grid.width = static_cast<int>(std::lround(world.width() / cfg.grid.resolution));
  cfg.grid.height = static_cast<int>(std::lround(world.height() / cfg.grid.resolution));
  return cfg;
}

SurveyMaps survey_and_map(const World& world, const SensorConfig& sensor,
                          const PipelineConfig& cfg, std::uint64_t sensor_seed) {
  Pipeline fused(cfg);
  Pipeline geometric(cfg);
  Rng rng(sensor_seed);
  const auto poses = survey_poses(world);
  double stamp = 0.0;
  int frames = 0;
  double sense_ms = 0.0, pipeline_ms = 0.0;
  for (const Pose2D& pose : poses) {
    auto t0 = std::chrono::steady_clock::now();
    SensorFrame frame = sense(world, pose, stamp, sensor, rng);
    sense_ms += ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    fused.add_label_frame(frame.stamp, std::move(frame.labels), frame.camera);
    fused.process_cloud(frame.cloud, frame.stamp, false);
    geometric.process_cloud(frame.cloud, frame.stamp, false);
    pipeline_ms += ms_since(t0);

    stamp += kFrameDt;
    ++frames;
  }

  // One layer pass wide enough to cover the whole sweep, then the region
  // filter, exactly as a live run would finish a mapping session.
  const auto t0 = std::chrono::steady_clock::now();
  fused.update_layers(stamp, stamp + 1.0);
  geometric.update_layers(stamp, stamp + 1.0);
  fused.apply_region_filter();
  geometric.apply_region_filter();
  pipeline_ms += ms_since(t0);

  OccupancyGrid occ_fused = fused.occupancy();
  OccupancyGrid occ_geo = geometric.occupancy();
  return SurveyMaps{std::move(fused.map()), std::move(geometric.map()),
                    std::move(occ_fused),  std::move(occ_geo),
                    frames,                sense_ms,
                    pipeline_ms};
}

std::optional<Pose2D> sample_goal(const World& world, const Pose2D& start,
                                  const WorldRect& region, double min_distance,
                                  Rng& rng, int max_attempts) {
  constexpr double kBorderMargin = 3.2;   // keeps any footprint heading on the field
  constexpr double kHazardClearance = 3.1;  // footprint circumradius plus slack
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Pose2D g{rng.uniform(region.x0, region.x1), rng.uniform(region.y0, region.y1),
             rng.uniform(-M_PI, M_PI)};
    if (std::hypot(g.x - start.x, g.y - start.y) < min_distance) continue;
    if (g.x < kBorderMargin || g.x > world.width() - kBorderMargin) continue;
    if (g.y < kBorderMargin || g.y > world.height() - kBorderMargin) continue;
    if (!disc_clear_of_hazard(world, g.x, g.y, kHazardClearance)) continue;
    if (!disc_gentle(world, g.x, g.y, 1.0, 8.0)) continue;
    return g;
  }
  return std::nullopt;
}

bool path_hits_hazard(const World& world, const PlannedPath& path,
                      const VehicleFootprint& fp) {
  for (const Pose2D& pose : path.poses)
    if (world.footprint_hits_hazard(pose, fp)) return true;
  return false;
}

BenchmarkReport run_benchmark(const std::vector<ScenarioSpec>& scenarios,
                              int trials_per_scenario, std::uint64_t master_seed) {
  if (trials_per_scenario < 1)
    throw std::invalid_argument("run_benchmark: need at least one trial per scenario");
  const auto bench_start = std::chrono::steady_clock::now();
  BenchmarkReport report;
  report.scenarios = scenarios;
  const SensorConfig sensor;

  for (const ScenarioSpec& spec : scenarios) {
    World world(spec, kFieldWidth, kFieldHeight, kSimTexel);
    const PipelineConfig cfg = benchmark_pipeline_config(world);
    SurveyMaps maps =
        survey_and_map(world, sensor, cfg, derive_seed(master_seed, spec.id));

    for (int trial = 0; trial < trials_per_scenario; ++trial) {
      Rng goal_rng(derive_seed(master_seed, static_cast<std::uint64_t>(spec.id) * 1000 + trial));
      const auto goal = sample_goal(world, spec.start, spec.goal_region,
                                    spec.min_goal_distance, goal_rng);
      if (!goal)
        throw std::runtime_error("run_benchmark: goal sampling failed in scenario " +
                                 spec.name);
      for (MapMode mode : {MapMode::Fused, MapMode::GeometricOnly}) {
        const OccupancyGrid& grid = mode == MapMode::Fused ? maps.fused : maps.geometric;
        const auto t0 = std::chrono::steady_clock::now();
        PlanResult res = plan(grid, spec.start, *goal, cfg.footprint, cfg.planner);
        const double plan_ms = ms_since(t0);

        TrialRecord rec;
        rec.scenario_id = spec.id;
        rec.mode = mode;
        rec.trial = trial;
        rec.goal = *goal;
        rec.expansions = res.expansions;
        rec.plan_ms = plan_ms;
        if (res.status != PlanStatus::Success) {
          rec.status = TrialStatus::NoPath;
        } else if (path_hits_hazard(world, res.path, cfg.footprint)) {
          rec.status = TrialStatus::CollisionOnReplay;
          rec.path_length = res.path.total_length;
          rec.path = std::move(res.path);
        } else {
          rec.status = TrialStatus::Success;
          rec.path_length = res.path.total_length;
          rec.path = std::move(res.path);
        }
        report.trials.push_back(std::move(rec));
      }
    }

    report.maps.push_back(ScenarioMaps{spec.id, std::move(maps.fused),
                                       std::move(maps.geometric), maps.frames,
                                       maps.sense_ms, maps.pipeline_ms});
  }

  report.total_ms = ms_since(bench_start);
  return report;
}

std::string BenchmarkReport::trials_csv() const {
  std::string out = "scenario,mode,trial,goal_x,goal_y,goal_theta,status,path_length_m,expansions\n";
  for (const TrialRecord& r : trials) {
    appendf(out, "%d,%s,%d,%.6f,%.6f,%.6f,%s,%.6f,%d\n", r.scenario_id,
            to_string(r.mode), r.trial, r.goal.x, r.goal.y, r.goal.theta,
            to_string(r.status), r.path_length, r.expansions);
  }
  return out;
}

std::string BenchmarkReport::summary_csv() const {
  std::string out =
      "scenario,mode,trials,success,no_path,collision,success_rate,mean_path_length_m\n";
  auto emit = [&](const char* label, MapMode mode, const OutcomeCount& c, double len_sum) {
    const double rate = c.total() > 0 ? static_cast<double>(c.success) / c.total() : 0.0;
    const double mean_len = c.success > 0 ? len_sum / c.success : 0.0;
    appendf(out, "%s,%s,%d,%d,%d,%d,%.4f,%.3f\n", label, to_string(mode), c.total(),
            c.success, c.no_path, c.collision, rate, mean_len);
  };
  for (const ScenarioSpec& spec : scenarios) {
    for (MapMode mode : {MapMode::Fused, MapMode::GeometricOnly}) {
      OutcomeCount count;
      double len_sum = 0.0;
      for (const TrialRecord& r : trials)
        if (r.scenario_id == spec.id && r.mode == mode) count.add(r, len_sum);
      char label[16];
      std::snprintf(label, sizeof(label), "%d", spec.id);
      emit(label, mode, count, len_sum);
    }
  }
  for (MapMode mode : {MapMode::Fused, MapMode::GeometricOnly}) {
    OutcomeCount count;
    double len_sum = 0.0;
    for (const TrialRecord& r : trials)
      if (r.mode == mode) count.add(r, len_sum);
    emit("all", mode, count, len_sum);
  }
  return out;
}

std::string BenchmarkReport::table() const {
  std::string out;
  appendf(out, "%-20s %-10s %5s %7s %5s %6s %9s %9s\n", "scenario", "mode", "succ",
          "no_path", "coll", "rate", "mean_len", "plan_ms");
  auto row = [&](const std::string& name, MapMode mode, const OutcomeCount& c,
                 double len_sum, double ms_sum) {
    const double rate = c.total() > 0 ? static_cast<double>(c.success) / c.total() : 0.0;
    const double mean_len = c.success > 0 ? len_sum / c.success : 0.0;
    const double mean_ms = c.total() > 0 ? ms_sum / c.total() : 0.0;
    appendf(out, "%-20s %-10s %5d %7d %5d %6.2f %9.2f %9.1f\n", name.c_str(),
            to_string(mode), c.success, c.no_path, c.collision, rate, mean_len, mean_ms);
  };
  for (const ScenarioSpec& spec : scenarios) {
    for (MapMode mode : {MapMode::Fused, MapMode::GeometricOnly}) {
      OutcomeCount count;
      double len_sum = 0.0, ms_sum = 0.0;
      for (const TrialRecord& r : trials) {
        if (r.scenario_id != spec.id || r.mode != mode) continue;
        count.add(r, len_sum);
        ms_sum += r.plan_ms;
      }
      char name[32];
      std::snprintf(name, sizeof(name), "%d %s", spec.id, spec.name.c_str());
      row(name, mode, count, len_sum, ms_sum);
    }
  }
  for (MapMode mode : {MapMode::Fused, MapMode::GeometricOnly}) {
    OutcomeCount count;
    double len_sum = 0.0, ms_sum = 0.0;
    for (const TrialRecord& r : trials) {
      if (r.mode != mode) continue;
      count.add(r, len_sum);
      ms_sum += r.plan_ms;
    }
    row("all", mode, count, len_sum, ms_sum);
  }
  appendf(out, "total wall time: %.1f s\n", total_ms / 1000.0);
  return out;
}

double BenchmarkReport::success_rate(MapMode mode) const {
  int total = 0, success = 0;
  for (const TrialRecord& r : trials) {
    if (r.mode != mode) continue;
    ++total;
    if (r.status == TrialStatus::Success) ++success;
  }
  return total > 0 ? static_cast<double>(success) / total : 0.0;
}

const ScenarioMaps* BenchmarkReport::maps_for(int scenario_id) const {
  for (const ScenarioMaps& m : maps)
    if (m.scenario_id == scenario_id) return &m;
  return nullptr;
}

}  // namespace travmap
