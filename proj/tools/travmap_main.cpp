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

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "travmap/benchmark.hpp"
#include "travmap/config.hpp"
#include "travmap/io.hpp"
#include "travmap/pipeline.hpp"
#include "travmap/planner.hpp"
#include "travmap/simulator.hpp"

namespace {

namespace fs = std::filesystem;
using namespace travmap;

// Exit codes: 0 success, 2 no path, 3 invalid input, 4 internal error.
constexpr int kExitOk = 0;
constexpr int kExitNoPath = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitInternal = 4;

PipelineConfig load_config_or_default(const std::string& path) {
  if (path.empty()) return PipelineConfig{};
  return load_config(path);
}

Pose2D to_pose2d(const std::vector<double>& v) { return {v[0], v[1], v[2]}; }

Eigen::Matrix4d world_to_robot_from(const Pose& p) {
  const Eigen::Matrix3d R = p.orientation.toRotationMatrix().transpose();
  Eigen::Matrix4d T = Eigen::Matrix4d::Identity();
  T.topLeftCorner<3, 3>() = R;
  T.topRightCorner<3, 1>() = -R * p.position;
  return T;
}

const Pose* nearest_pose(const std::vector<Pose>& poses, double stamp, double tol) {
  const Pose* best = nullptr;
  double best_dt = tol;
  for (const Pose& p : poses) {
    const double dt = std::abs(p.stamp - stamp);
    if (dt <= best_dt) {
      best_dt = dt;
      best = &p;
    }
  }
  return best;
}

int cmd_map(const std::string& config_path, const std::vector<std::string>& cloud_paths,
            const std::string& labels_path, const std::string& poses_path,
            const std::string& calib_path, const std::string& out_dir) {
  PipelineConfig cfg = load_config_or_default(config_path);
  if (!calib_path.empty()) cfg.camera_calibration = calib_path;
  Pipeline pipeline(cfg);

  std::optional<CameraCalibration> calib;
  if (!cfg.camera_calibration.empty()) calib = read_camera_calibration(cfg.camera_calibration);
  std::vector<Pose> poses;
  if (!poses_path.empty()) poses = read_pose_stream(poses_path);

  struct Event {
    double stamp;
    bool is_frame;  // frames sort before clouds at equal stamps
    std::size_t index;
  };
  std::vector<Event> events;

  std::vector<LabelFrameRef> frames;
  if (!labels_path.empty()) {
    if (!calib) throw ParseError("label frames given without a camera calibration");
    frames = read_label_manifest(labels_path);
    for (std::size_t i = 0; i < frames.size(); ++i)
      events.push_back({frames[i].t, true, i});
  }

  std::vector<std::vector<PointStamped>> clouds(cloud_paths.size());
  std::vector<double> cloud_stamps(cloud_paths.size());
  for (std::size_t i = 0; i < cloud_paths.size(); ++i) {
    clouds[i] = read_point_cloud(cloud_paths[i]);
    double stamp = 0.0;
    for (const auto& p : clouds[i]) stamp = std::max(stamp, p.t);
    cloud_stamps[i] = stamp;
    events.push_back({stamp, false, i});
  }
  std::stable_sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.stamp != b.stamp) return a.stamp < b.stamp;
    return a.is_frame && !b.is_frame;
  });

  InsertSummary totals;
  int labeled_points = 0;
  for (const Event& ev : events) {
    if (ev.is_frame) {
      const LabelFrameRef& ref = frames[ev.index];
      CameraModel cam = calib->camera;
      if (calib->extrinsic_in_robot_frame) {
        const Pose* pose = nearest_pose(poses, ref.t, cfg.image_match_tol_s);
        if (!pose)
          throw ParseError("no pose within tolerance of label frame at t=" +
                           std::to_string(ref.t));
        cam.E = calib->camera.E * world_to_robot_from(*pose);
      }
      pipeline.add_label_frame(ref.t, read_label_image(ref.path), cam);
    } else {
      const CloudReport rep = pipeline.process_cloud(clouds[ev.index], cloud_stamps[ev.index]);
      totals.cells_touched += rep.insert.cells_touched;
      totals.points_inserted += rep.insert.points_inserted;
      totals.points_out_of_bounds += rep.insert.points_out_of_bounds;
      labeled_points += rep.labeled_points;
    }
  }

  const int promoted = pipeline.apply_region_filter();
  fs::create_directories(out_dir);
  write_map_dump(out_dir, pipeline.map());
  write_traversability_png((fs::path(out_dir) / "traversability.png").string(), pipeline.map());
  write_occupancy_pgm((fs::path(out_dir) / "occupancy.pgm").string(), pipeline.occupancy());

  const PipelineTimings& t = pipeline.timings();
  std::printf("clouds processed:     %zu\n", clouds.size());
  std::printf("points inserted:      %d (%d out of bounds)\n", totals.points_inserted,
              totals.points_out_of_bounds);
  std::printf("points labeled:       %d\n", labeled_points);
  std::printf("cells promoted:       %d\n", promoted);
  std::printf("insert stage ms:      mean %.3f  max %.3f\n", t.insertion.mean_ms(),
              t.insertion.max_ms);
  if (t.labeling.count > 0)
    std::printf("label stage ms:       mean %.3f  max %.3f\n", t.labeling.mean_ms(),
                t.labeling.max_ms);
  std::printf("layer update ms:      mean %.3f  max %.3f\n", t.update.mean_ms(),
              t.update.max_ms);
  std::printf("full cycle ms:        mean %.3f  max %.3f\n", t.cycle.mean_ms(),
              t.cycle.max_ms);
  std::printf("map written to:       %s\n", out_dir.c_str());
  return kExitOk;
}

int cmd_plan(const std::string& config_path, const std::string& map_path,
             const std::vector<double>& start, const std::vector<double>& goal,
             const std::string& out_path) {
  const PipelineConfig cfg = load_config_or_default(config_path);
  const OccupancyGrid grid = read_occupancy_pgm(map_path);
  const PlanResult res = plan(grid, to_pose2d(start), to_pose2d(goal), cfg.footprint,
                              cfg.planner);
  if (res.status == PlanStatus::InvalidStart) {
    std::fprintf(stderr, "error: start pose is not valid on this map\n");
    return kExitInvalid;
  }
  if (res.status == PlanStatus::NoPath) {
    std::fprintf(stderr, "no path found (%d expansions)\n", res.expansions);
    return kExitNoPath;
  }
  if (!out_path.empty()) write_path_csv(out_path, res.path.poses);
  std::printf("path length:   %.3f m\n", res.path.total_length);
  std::printf("poses:         %zu\n", res.path.poses.size());
  std::printf("expansions:    %d\n", res.expansions);
  return kExitOk;
}

int cmd_bench(const std::string& out_dir, int trials, std::uint64_t seed) {
  if (trials < 1) {
    std::fprintf(stderr, "error: --trials must be at least 1\n");
    return kExitInvalid;
  }
  const BenchmarkReport report = run_benchmark(default_scenario_suite(), trials, seed);
  fs::create_directories(out_dir);
  {
    std::FILE* f = std::fopen((fs::path(out_dir) / "trials.csv").string().c_str(), "wb");
    if (!f) throw std::runtime_error("cannot write trials.csv");
    const std::string csv = report.trials_csv();
    std::fwrite(csv.data(), 1, csv.size(), f);
    std::fclose(f);
  }
  {
    std::FILE* f = std::fopen((fs::path(out_dir) / "summary.csv").string().c_str(), "wb");
    if (!f) throw std::runtime_error("cannot write summary.csv");
    const std::string csv = report.summary_csv();
    std::fwrite(csv.data(), 1, csv.size(), f);
    std::fclose(f);
  }
  std::printf("%s", report.table().c_str());
  std::printf("results written to %s\n", out_dir.c_str());
  return kExitOk;
}

int cmd_simulate(int scenario_id, const std::string& out_dir, int max_frames,
                 std::uint64_t seed) {
  const auto suite = default_scenario_suite();
  const ScenarioSpec* spec = nullptr;
  for (const auto& s : suite)
    if (s.id == scenario_id) spec = &s;
  if (!spec) {
    std::fprintf(stderr, "error: unknown scenario id %d (valid: 1..%zu)\n", scenario_id,
                 suite.size());
    return kExitInvalid;
  }
  const World world(*spec, kFieldWidth, kFieldHeight, kSimTexel);
  const SensorConfig sensor;
  Rng rng(seed);
  fs::create_directories(out_dir);

  auto poses = survey_poses(world);
  if (max_frames > 0 && static_cast<std::size_t>(max_frames) < poses.size())
    poses.resize(max_frames);

  write_camera_calibration((fs::path(out_dir) / "calibration.json").string(),
                           CameraModel{
                               [&] {
                                 Eigen::Matrix3d K;
                                 const double f = sensor.focal_px();
                                 K << f, 0, 0.5 * sensor.image_width, 0, f,
                                     0.5 * sensor.image_height, 0, 0, 1;
                                 return K;
                               }(),
                               camera_mount_extrinsic(sensor), sensor.image_width,
                               sensor.image_height},
                           /*extrinsic_in_robot_frame=*/true);

  std::vector<Pose> robot_poses;
  std::string manifest;
  double stamp = 0.0;
  char name[64];
  for (std::size_t i = 0; i < poses.size(); ++i, stamp += kFrameDt) {
    const SensorFrame frame = sense(world, poses[i], stamp, sensor, rng);
    std::snprintf(name, sizeof(name), "cloud_%04zu.txt", i);
    write_point_cloud((fs::path(out_dir) / name).string(), frame.cloud);
    std::snprintf(name, sizeof(name), "label_%04zu.pgm", i);
    write_label_image((fs::path(out_dir) / name).string(), frame.labels);
    char line[96];
    std::snprintf(line, sizeof(line), "%.6f label_%04zu.pgm\n", stamp, i);
    manifest += line;

    Pose p;
    p.stamp = stamp;
    p.position = Eigen::Vector3d(poses[i].x, poses[i].y,
                                 world.ground(poses[i].x, poses[i].y));
    p.orientation =
        Eigen::Quaterniond(Eigen::AngleAxisd(poses[i].theta, Eigen::Vector3d::UnitZ()));
    robot_poses.push_back(p);
  }
  write_pose_stream((fs::path(out_dir) / "poses.txt").string(), robot_poses);
  {
    std::FILE* f = std::fopen((fs::path(out_dir) / "labels.txt").string().c_str(), "wb");
    if (!f) throw std::runtime_error("cannot write labels.txt");
    std::fwrite(manifest.data(), 1, manifest.size(), f);
    std::fclose(f);
  }
  std::printf("wrote %zu frames for scenario %d (%s) to %s\n", poses.size(), spec->id,
              spec->name.c_str(), out_dir.c_str());
  return kExitOk;
}

int cmd_export(const std::string& config_path, const std::string& map_dir,
               const std::string& png_path, const std::string& occ_path) {
  const PipelineConfig cfg = load_config_or_default(config_path);
  const ElevationGridMap map = read_map_dump(map_dir);
  if (!png_path.empty()) write_traversability_png(png_path, map);
  if (!occ_path.empty())
    write_occupancy_pgm(occ_path, to_occupancy(map, cfg.t_occ, cfg.unknown_policy));
  if (png_path.empty() && occ_path.empty())
    std::fprintf(stderr, "note: nothing to do, pass --png and/or --occupancy\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"terrain traversability mapping and planning toolkit"};
  app.require_subcommand(1);

  std::string config_path, out_dir, out_path, labels_path, poses_path, calib_path,
      map_path, map_dir, png_path, occ_out;
  std::vector<std::string> cloud_paths;
  std::vector<double> start_vec, goal_vec;
  int trials = 10, scenario_id = 1, max_frames = 0;
  std::uint64_t seed = 12345;

  auto* map_cmd = app.add_subcommand("map", "build a traversability map from recorded data");
  map_cmd->add_option("--cloud", cloud_paths, "point cloud file (repeatable, time order)")
      ->required()
      ->check(CLI::ExistingFile);
  map_cmd->add_option("--labels", labels_path, "label frame manifest (t path per line)")
      ->check(CLI::ExistingFile);
  map_cmd->add_option("--poses", poses_path, "robot pose stream")->check(CLI::ExistingFile);
  map_cmd->add_option("--calib", calib_path, "camera calibration JSON")
      ->check(CLI::ExistingFile);
  map_cmd->add_option("--config", config_path, "pipeline config JSON")
      ->check(CLI::ExistingFile);
  map_cmd->add_option("--out", out_dir, "output directory")->required();

  auto* plan_cmd = app.add_subcommand("plan", "plan a path on an occupancy map");
  plan_cmd->add_option("--map", map_path, "occupancy PGM (with JSON sidecar)")
      ->required()
      ->check(CLI::ExistingFile);
  plan_cmd->add_option("--start", start_vec, "start pose: x y theta")
      ->required()
      ->expected(3);
  plan_cmd->add_option("--goal", goal_vec, "goal pose: x y theta")->required()->expected(3);
  plan_cmd->add_option("--out", out_path, "path CSV output");
  plan_cmd->add_option("--config", config_path, "pipeline config JSON")
      ->check(CLI::ExistingFile);

  auto* bench_cmd = app.add_subcommand("bench", "run the simulated planning benchmark");
  bench_cmd->add_option("--out", out_dir, "output directory")->required();
  bench_cmd->add_option("--trials", trials, "goal queries per scenario (default 10)");
  bench_cmd->add_option("--seed", seed, "master seed (default 12345)");

  auto* sim_cmd = app.add_subcommand("simulate", "dump sensor frames for a scenario");
  sim_cmd->add_option("--scenario", scenario_id, "scenario id (1..9)")->required();
  sim_cmd->add_option("--out", out_dir, "output directory")->required();
  sim_cmd->add_option("--frames", max_frames, "limit number of frames (0 = full sweep)");
  sim_cmd->add_option("--seed", seed, "sensor noise seed");

  auto* export_cmd = app.add_subcommand("export", "render a stored map dump");
  export_cmd->add_option("--map", map_dir, "map dump directory")->required();
  export_cmd->add_option("--png", png_path, "traversability PNG output");
  export_cmd->add_option("--occupancy", occ_out, "occupancy PGM output");
  export_cmd->add_option("--config", config_path, "pipeline config JSON")
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
    if (map_cmd->parsed())
      return cmd_map(config_path, cloud_paths, labels_path, poses_path, calib_path, out_dir);
    if (plan_cmd->parsed())
      return cmd_plan(config_path, map_path, start_vec, goal_vec, out_path);
    if (bench_cmd->parsed()) return cmd_bench(out_dir, trials, seed);
    if (sim_cmd->parsed()) return cmd_simulate(scenario_id, out_dir, max_frames, seed);
    if (export_cmd->parsed()) return cmd_export(config_path, map_dir, png_path, occ_out);
    return kExitInvalid;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitInternal;
  }
}
