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

#include "travmap/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace travmap {

namespace {

double bilinear_raw(const std::vector<float>& field, int nx, int ny, double texel,
                    double x, double y) {
  const double u = x / texel - 0.5;
  const double v = y / texel - 0.5;
  int i0 = static_cast<int>(std::floor(u));
  int j0 = static_cast<int>(std::floor(v));
  i0 = std::clamp(i0, 0, nx - 2);
  j0 = std::clamp(j0, 0, ny - 2);
  const double fx = std::clamp(u - i0, 0.0, 1.0);
  const double fy = std::clamp(v - j0, 0.0, 1.0);
  const double h00 = field[static_cast<std::size_t>(j0) * nx + i0];
  const double h10 = field[static_cast<std::size_t>(j0) * nx + i0 + 1];
  const double h01 = field[static_cast<std::size_t>(j0 + 1) * nx + i0];
  const double h11 = field[static_cast<std::size_t>(j0 + 1) * nx + i0 + 1];
  return (1.0 - fy) * ((1.0 - fx) * h00 + fx * h10) + fy * ((1.0 - fx) * h01 + fx * h11);
}

bool hazard_class(std::uint8_t c) {
  return c == static_cast<std::uint8_t>(SemanticClass::Water) ||
         c == static_cast<std::uint8_t>(SemanticClass::RockPile) ||
         c == static_cast<std::uint8_t>(SemanticClass::Obstacle) ||
         c == static_cast<std::uint8_t>(SemanticClass::Excavator);
}

}  // namespace

double WorldRect::inset_depth(double x, double y) const {
  if (!contains(x, y)) return 0.0;
  return std::min(std::min(x - x0, x1 - x), std::min(y - y0, y1 - y));
}

World::World(ScenarioSpec spec, double width_m, double height_m, double texel)
    : spec_(std::move(spec)), width_(width_m), height_(height_m), texel_(texel) {
  if (width_m <= 0.0 || height_m <= 0.0 || texel <= 0.0)
    throw std::invalid_argument("World: field dimensions must be positive");
  nx_ = static_cast<int>(std::lround(width_m / texel));
  ny_ = static_cast<int>(std::lround(height_m / texel));
  const std::size_t n = static_cast<std::size_t>(nx_) * ny_;
  ground_.assign(n, 0.0f);
  class_.assign(n, static_cast<std::uint8_t>(SemanticClass::Flat));

  // Gentle base undulation so open ground is textured but far from any limit.
  Rng rng(spec_.terrain_seed);
  const double p1 = rng.uniform(0.0, 2.0 * M_PI);
  const double p2 = rng.uniform(0.0, 2.0 * M_PI);
  const double p3 = rng.uniform(0.0, 2.0 * M_PI);
  const double p4 = rng.uniform(0.0, 2.0 * M_PI);
  for (int j = 0; j < ny_; ++j) {
    const double y = (j + 0.5) * texel_;
    for (int i = 0; i < nx_; ++i) {
      const double x = (i + 0.5) * texel_;
      const double h = 0.02 * std::sin(2.0 * M_PI * x / 13.7 + p1) *
                           std::sin(2.0 * M_PI * y / 9.3 + p2) +
                       0.02 * std::sin(2.0 * M_PI * x / 7.9 + p3) *
                           std::cos(2.0 * M_PI * y / 11.1 + p4);
      ground_[static_cast<std::size_t>(j) * nx_ + i] = static_cast<float>(h);
    }
  }

  auto for_each_texel_in = [&](const WorldRect& r, auto&& fn) {
    const int i0 = std::max(0, static_cast<int>(std::floor(r.x0 / texel_)));
    const int j0 = std::max(0, static_cast<int>(std::floor(r.y0 / texel_)));
    const int i1 = std::min(nx_ - 1, static_cast<int>(std::floor(r.x1 / texel_)));
    const int j1 = std::min(ny_ - 1, static_cast<int>(std::floor(r.y1 / texel_)));
    for (int j = j0; j <= j1; ++j) {
      const double y = (j + 0.5) * texel_;
      for (int i = i0; i <= i1; ++i) {
        const double x = (i + 0.5) * texel_;
        if (r.contains(x, y)) fn(static_cast<std::size_t>(j) * nx_ + i, x, y);
      }
    }
  };

  // Terrain features first; boxes are baked into the surface field below.
  for (const Feature& f : spec_.features) {
    switch (f.kind) {
      case FeatureKind::Mound: {
        const double t = std::tan(deg2rad(f.slope_deg));
        for_each_texel_in(f.rect, [&](std::size_t idx, double x, double y) {
          const double rise = std::min(t * f.rect.inset_depth(x, y), f.height);
          ground_[idx] += static_cast<float>(rise);
          // Flanks read as uneven ground to the segmenter; the flat top keeps
          // its ground class.
          if (rise < f.height)
            class_[idx] = static_cast<std::uint8_t>(SemanticClass::Bumpy);
        });
        break;
      }
      case FeatureKind::Pit: {
        const double t = std::tan(deg2rad(f.slope_deg));
        for_each_texel_in(f.rect, [&](std::size_t idx, double x, double y) {
          const double drop = std::min(t * f.rect.inset_depth(x, y), f.height);
          ground_[idx] -= static_cast<float>(drop);
          if (drop < f.height)
            class_[idx] = static_cast<std::uint8_t>(SemanticClass::Bumpy);
        });
        break;
      }
      case FeatureKind::Bumpy: {
        for_each_texel_in(f.rect, [&](std::size_t idx, double x, double y) {
          const double taper = std::clamp(f.rect.inset_depth(x, y) / 0.5, 0.0, 1.0);
          ground_[idx] += static_cast<float>(f.height * taper *
                                             std::sin(2.0 * M_PI * x / 1.5) *
                                             std::sin(2.0 * M_PI * y / 1.5));
          class_[idx] = static_cast<std::uint8_t>(SemanticClass::Bumpy);
        });
        break;
      }
      case FeatureKind::Water: {
        // Level the sheet at the height the terrain had at its center. A
        // shore band blends terrain into the level over 0.6 m so the
        // waterline never shows a sharp step; the interior is dead flat.
        const float level = static_cast<float>(bilinear_raw(
            ground_, nx_, ny_, texel_, f.rect.center_x(), f.rect.center_y()));
        for_each_texel_in(f.rect, [&](std::size_t idx, double x, double y) {
          const double blend = std::clamp(f.rect.inset_depth(x, y) / 0.6, 0.0, 1.0);
          const double g = ground_[idx];
          ground_[idx] = static_cast<float>(g + blend * (level - g));
          class_[idx] = static_cast<std::uint8_t>(SemanticClass::Water);
        });
        break;
      }
      case FeatureKind::RockPile: {
        struct Rock { double cx, cy, r, h; };
        Rng rock_rng(f.seed);
        const double area = (f.rect.x1 - f.rect.x0) * (f.rect.y1 - f.rect.y0);
        const int rocks = std::max(3, static_cast<int>(std::lround(area * 0.8)));
        std::vector<Rock> pile(rocks);
        for (auto& rock : pile) {
          rock.r = rock_rng.uniform(0.25, 0.6);
          rock.cx = rock_rng.uniform(f.rect.x0 + rock.r, f.rect.x1 - rock.r);
          rock.cy = rock_rng.uniform(f.rect.y0 + rock.r, f.rect.y1 - rock.r);
          rock.h = rock_rng.uniform(0.15, 0.45);
        }
        for_each_texel_in(f.rect, [&](std::size_t idx, double x, double y) {
          double h = 0.0;
          for (const auto& rock : pile) {
            const double d = std::hypot(x - rock.cx, y - rock.cy);
            if (d < rock.r) h = std::max(h, rock.h * (1.0 - d / rock.r));
          }
          ground_[idx] += static_cast<float>(h);
          class_[idx] = static_cast<std::uint8_t>(SemanticClass::RockPile);
        });
        break;
      }
      case FeatureKind::Box:
        break;
    }
  }

  surface_ = ground_;
  for (const Feature& f : spec_.features) {
    if (f.kind != FeatureKind::Box) continue;
    const float top = static_cast<float>(
        bilinear_raw(ground_, nx_, ny_, texel_, f.rect.center_x(), f.rect.center_y()) +
        f.height);
    for_each_texel_in(f.rect, [&](std::size_t idx, double, double) {
      surface_[idx] = std::max(surface_[idx], top);
      class_[idx] = static_cast<std::uint8_t>(f.box_class);
    });
  }

  // True slope from the ground field only; boxes are not terrain.
  slope_deg_.assign(n, 0.0f);
  for (int j = 0; j < ny_; ++j) {
    for (int i = 0; i < nx_; ++i) {
      const int il = std::max(0, i - 1), ir = std::min(nx_ - 1, i + 1);
      const int jl = std::max(0, j - 1), jr = std::min(ny_ - 1, j + 1);
      const double gx = (ground_[static_cast<std::size_t>(j) * nx_ + ir] -
                         ground_[static_cast<std::size_t>(j) * nx_ + il]) /
                        ((ir - il) * texel_);
      const double gy = (ground_[static_cast<std::size_t>(jr) * nx_ + i] -
                         ground_[static_cast<std::size_t>(jl) * nx_ + i]) /
                        ((jr - jl) * texel_);
      slope_deg_[static_cast<std::size_t>(j) * nx_ + i] =
          static_cast<float>(rad2deg(std::atan(std::hypot(gx, gy))));
    }
  }

  hazard_.assign(n, 0);
  for (std::size_t idx = 0; idx < n; ++idx)
    hazard_[idx] = hazard_class(class_[idx]) || slope_deg_[idx] > kHazardSlopeDeg;
}

std::size_t World::texel_index(double x, double y) const {
  const int i = std::clamp(static_cast<int>(std::floor(x / texel_)), 0, nx_ - 1);
  const int j = std::clamp(static_cast<int>(std::floor(y / texel_)), 0, ny_ - 1);
  return static_cast<std::size_t>(j) * nx_ + i;
}

double World::bilinear(const std::vector<float>& field, double x, double y) const {
  return bilinear_raw(field, nx_, ny_, texel_, x, y);
}

double World::ground(double x, double y) const { return bilinear(ground_, x, y); }
double World::surface(double x, double y) const { return bilinear(surface_, x, y); }

std::uint8_t World::class_at(double x, double y) const { return class_[texel_index(x, y)]; }

double World::slope_deg_at(double x, double y) const {
  return slope_deg_[texel_index(x, y)];
}

bool World::hazard_at(double x, double y) const {
  return hazard_[texel_index(x, y)] != 0;
}

bool World::footprint_hits_hazard(const Pose2D& pose, const VehicleFootprint& fp) const {
  const double c = std::cos(pose.theta), s = std::sin(pose.theta);
  const double hl = 0.5 * fp.length, hw = 0.5 * fp.width;
  const double rx = hl * std::abs(c) + hw * std::abs(s);
  const double ry = hl * std::abs(s) + hw * std::abs(c);
  const int i0 = std::max(0, static_cast<int>(std::floor((pose.x - rx) / texel_)));
  const int j0 = std::max(0, static_cast<int>(std::floor((pose.y - ry) / texel_)));
  const int i1 = std::min(nx_ - 1, static_cast<int>(std::floor((pose.x + rx) / texel_)));
  const int j1 = std::min(ny_ - 1, static_cast<int>(std::floor((pose.y + ry) / texel_)));
  for (int j = j0; j <= j1; ++j) {
    const double y = (j + 0.5) * texel_;
    for (int i = i0; i <= i1; ++i) {
      if (!hazard_[static_cast<std::size_t>(j) * nx_ + i]) continue;
      const double x = (i + 0.5) * texel_;
      const double dx = x - pose.x, dy = y - pose.y;
      const double lo = dx * c + dy * s;
      const double la = -dx * s + dy * c;
      if (std::abs(lo) < hl && std::abs(la) < hw) return true;
    }
  }
  return false;
}

double SensorConfig::focal_px() const {
  return 0.5 * image_width / std::tan(0.5 * deg2rad(hfov_deg));
}

Eigen::Matrix4d camera_mount_extrinsic(const SensorConfig& cfg) {
  const double p = deg2rad(cfg.pitch_down_deg);
  Eigen::Matrix3d R;
  R.row(0) = Eigen::Vector3d(0.0, -1.0, 0.0);                      // camera x: right
  R.row(1) = Eigen::Vector3d(-std::sin(p), 0.0, -std::cos(p));     // camera y: down
  R.row(2) = Eigen::Vector3d(std::cos(p), 0.0, -std::sin(p));      // camera z: forward
  Eigen::Matrix4d E = Eigen::Matrix4d::Identity();
  E.topLeftCorner<3, 3>() = R;
  E.topRightCorner<3, 1>() = -R * Eigen::Vector3d(0.0, 0.0, cfg.mount_height);
  return E;
}

Eigen::Matrix4d world_to_robot(const Pose2D& pose, double z0) {
  const double c = std::cos(pose.theta), s = std::sin(pose.theta);
  Eigen::Matrix3d R;
  R << c, s, 0.0, -s, c, 0.0, 0.0, 0.0, 1.0;
  Eigen::Matrix4d T = Eigen::Matrix4d::Identity();
  T.topLeftCorner<3, 3>() = R;
  T.topRightCorner<3, 1>() = -R * Eigen::Vector3d(pose.x, pose.y, z0);
  return T;
}

CameraModel sensor_camera(const World& world, const Pose2D& pose, const SensorConfig& cfg) {
  CameraModel cam;
  const double f = cfg.focal_px();
  cam.K << f, 0.0, 0.5 * cfg.image_width, 0.0, f, 0.5 * cfg.image_height, 0.0, 0.0, 1.0;
  cam.E = camera_mount_extrinsic(cfg) * world_to_robot(pose, world.ground(pose.x, pose.y));
  cam.width = cfg.image_width;
  cam.height = cfg.image_height;
  return cam;
}

namespace {

LabelImage render_labels(const World& world, const CameraModel& cam, const Pose2D& pose,
                         const SensorConfig& cfg) {
  LabelImage img(cam.width, cam.height);
  std::vector<float> zbuf(static_cast<std::size_t>(cam.width) * cam.height,
                          std::numeric_limits<float>::infinity());
  const double half = 0.5 * deg2rad(cfg.hfov_deg) + 0.1;
  const double cap = cfg.max_range + 2.0;
  const double texel = world.texel();
  const double fx = cam.K(0, 0);
  const double x_lo = std::max(0.0, pose.x - cap), x_hi = std::min(world.width(), pose.x + cap);
  const double y_lo = std::max(0.0, pose.y - cap), y_hi = std::min(world.height(), pose.y + cap);
  for (double y = (std::floor(y_lo / texel) + 0.5) * texel; y < y_hi; y += texel) {
    for (double x = (std::floor(x_lo / texel) + 0.5) * texel; x < x_hi; x += texel) {
      const double dx = x - pose.x, dy = y - pose.y;
      const double range2 = dx * dx + dy * dy;
      if (range2 > cap * cap || range2 < 0.09) continue;
      if (std::abs(angle_diff(std::atan2(dy, dx), pose.theta)) > half) continue;
      const Eigen::Vector4d pc = cam.E * Eigen::Vector4d(x, y, world.surface(x, y), 1.0);
      const double zc = pc.z();
      if (zc < 0.3) continue;
      const double u = cam.K(0, 0) * pc.x() / zc + cam.K(0, 2);
      const double v = cam.K(1, 1) * pc.y() / zc + cam.K(1, 2);
      const int iu = static_cast<int>(std::floor(u));
      const int iv = static_cast<int>(std::floor(v));
      const int r = std::clamp(static_cast<int>(std::ceil(0.5 * fx * texel / zc)), 0, 4);
      if (iu + r < 0 || iu - r >= cam.width || iv + r < 0 || iv - r >= cam.height) continue;
      const std::uint8_t label = world.class_at(x, y);
      for (int pv = std::max(0, iv - r); pv <= std::min(cam.height - 1, iv + r); ++pv) {
        for (int pu = std::max(0, iu - r); pu <= std::min(cam.width - 1, iu + r); ++pu) {
          const std::size_t idx = static_cast<std::size_t>(pv) * cam.width + pu;
          if (zc < zbuf[idx] - 1e-9) {
            zbuf[idx] = static_cast<float>(zc);
            img.set(pu, pv, label);
          }
        }
      }
    }
  }
  return img;
}

}  // namespace

SensorFrame sense(const World& world, const Pose2D& pose, double stamp,
                  const SensorConfig& cfg, Rng& rng) {
  SensorFrame frame;
  frame.stamp = stamp;
  frame.camera = sensor_camera(world, pose, cfg);
  frame.cloud.reserve(cfg.points_per_frame);
  const double half = 0.5 * deg2rad(cfg.hfov_deg);
  for (int i = 0; i < cfg.points_per_frame; ++i) {
    const double az = rng.uniform(-half, half);
    const double r = rng.uniform(cfg.min_range, cfg.max_range);
    const double x = pose.x + r * std::cos(pose.theta + az);
    const double y = pose.y + r * std::sin(pose.theta + az);
    if (!world.in_field(x, y)) continue;
    double z = world.surface(x, y);
    if (cfg.noise_sigma > 0.0) z += rng.normal(0.0, cfg.noise_sigma);
    frame.cloud.push_back({stamp, x, y, z});
  }
  frame.labels = render_labels(world, frame.camera, pose, cfg);
  return frame;
}

std::vector<Pose2D> survey_poses(const World& world, double row_spacing, double step,
                                 double margin) {
  std::vector<Pose2D> poses;
  int row = 0;
  for (double y = 0.5 * row_spacing; y < world.height() - 1.0; y += row_spacing, ++row) {
    const double x0 = margin, x1 = world.width() - margin;
    if (row % 2 == 0) {
      for (double x = x0; x <= x1 + 1e-9; x += step) poses.push_back({x, y, 0.0});
    } else {
      for (double x = x1; x >= x0 - 1e-9; x -= step) poses.push_back({x, y, M_PI});
    }
  }
  return poses;
}

std::vector<ScenarioSpec> default_scenario_suite() {
  using SC = SemanticClass;
  std::vector<ScenarioSpec> suite;

  suite.push_back({.id = 1,
                   .name = "river_bridge",
                   .difficult_terrain = true,
                   .has_obstacles = true,
                   .flat_water = true,
                   .start = {4.0, 12.0, 0.0},
                   .goal_region = {29.2, 4.0, 36.5, 18.0},
                   .terrain_seed = 101,
                   .features = {
                       {.kind = FeatureKind::Bumpy, .rect = {6.0, 18.0, 14.0, 22.8}, .height = 0.03},
                       {.kind = FeatureKind::Box, .rect = {8.0, 3.0, 10.0, 5.0}, .height = 1.2, .box_class = SC::Obstacle},
                       {.kind = FeatureKind::Box, .rect = {12.0, 6.0, 14.0, 8.0}, .height = 1.0, .box_class = SC::Obstacle},
                       {.kind = FeatureKind::Water, .rect = {16.0, 0.0, 26.0, 18.0}},
                   }});

  suite.push_back({.id = 2,
                   .name = "staggered_bands",
                   .difficult_terrain = true,
                   .has_obstacles = true,
                   .flat_water = true,
                   .start = {3.0, 2.8, 0.0},
                   .goal_region = {32.8, 4.0, 36.8, 20.0},
                   .terrain_seed = 102,
                   .features = {
                       {.kind = FeatureKind::Bumpy, .rect = {18.0, 2.0, 24.0, 6.0}, .height = 0.03},
                       {.kind = FeatureKind::Water, .rect = {14.0, 5.6, 17.2, 24.0}},
                       {.kind = FeatureKind::Water, .rect = {26.0, 0.0, 29.2, 18.4}},
                       {.kind = FeatureKind::Box, .rect = {20.0, 6.0, 20.2, 12.0}, .height = 0.08, .box_class = SC::Obstacle},
                       {.kind = FeatureKind::Box, .rect = {8.0, 12.0, 9.6, 14.0}, .height = 1.0, .box_class = SC::Obstacle},
                   }});

  suite.push_back({.id = 3,
                   .name = "bumpy_pond",
                   .difficult_terrain = true,
                   .start = {3.0, 12.0, 0.0},
                   .goal_region = {33.4, 6.0, 36.8, 18.0},
                   .terrain_seed = 103,
                   .features = {
                       {.kind = FeatureKind::Bumpy, .rect = {8.0, 4.0, 30.0, 20.0}, .height = 0.03},
                       {.kind = FeatureKind::Water, .rect = {18.0, 10.0, 22.0, 13.2}},
                   }});

  suite.push_back({.id = 4,
                   .name = "pit_water_boxes",
                   .difficult_terrain = true,
                   .has_obstacles = true,
                   .start = {3.0, 4.0, 0.0},
                   .goal_region = {33.0, 4.0, 36.8, 9.8},
                   .terrain_seed = 104,
                   .features = {
                       {.kind = FeatureKind::Pit, .rect = {10.0, 14.0, 16.0, 20.0}, .height = 1.0, .slope_deg = 26.0},
                       {.kind = FeatureKind::Water, .rect = {24.0, 4.0, 28.0, 8.0}},
                       {.kind = FeatureKind::Box, .rect = {20.0, 12.0, 22.0, 14.0}, .height = 1.2, .box_class = SC::Obstacle},
                       {.kind = FeatureKind::Box, .rect = {30.0, 14.0, 32.0, 16.0}, .height = 1.0, .box_class = SC::Obstacle},
                       {.kind = FeatureKind::Box, .rect = {26.0, 12.0, 26.2, 14.4}, .height = 0.08, .box_class = SC::Obstacle},
                   }});

  suite.push_back({.id = 5,
                   .name = "bar_field",
                   .has_obstacles = true,
                   .start = {3.0, 12.0, 0.0},
                   .goal_region = {33.4, 6.0, 36.8, 18.0},
                   .terrain_seed = 105,
                   .features = {
                       {.kind = FeatureKind::Box, .rect = {10.0, 6.0, 10.2, 10.8}, .height = 0.08, .box_class = SC::Obstacle},
                       {.kind = FeatureKind::Box, .rect = {16.0, 13.2, 16.2, 18.0}, .height = 0.08, .box_class = SC::Obstacle},
                       {.kind = FeatureKind::Box, .rect = {22.0, 6.0, 22.2, 10.8}, .height = 0.08, .box_class = SC::Obstacle},
                       {.kind = FeatureKind::Box, .rect = {28.0, 13.2, 28.2, 18.0}, .height = 0.08, .box_class = SC::Obstacle},
                   }});

  suite.push_back({.id = 6,
                   .name = "rock_garden",
                   .difficult_terrain = true,
                   .has_obstacles = true,
                   .start = {3.0, 11.0, 0.0},
                   .goal_region = {32.8, 10.0, 36.8, 20.0},
                   .terrain_seed = 106,
                   .features = {
                       {.kind = FeatureKind::Mound, .rect = {6.0, 14.0, 12.0, 20.0}, .height = 0.8, .slope_deg = 20.0},
                       {.kind = FeatureKind::Mound, .rect = {28.0, 2.0, 32.0, 8.0}, .height = 0.8, .slope_deg = 20.0},
                       {.kind = FeatureKind::RockPile, .rect = {12.0, 4.0, 16.0, 8.0}, .seed = 61},
                       {.kind = FeatureKind::RockPile, .rect = {22.0, 14.0, 26.0, 18.0}, .seed = 62},
                       {.kind = FeatureKind::RockPile, .rect = {16.0, 18.0, 20.0, 21.2}, .seed = 63},
                       {.kind = FeatureKind::Box, .rect = {18.0, 10.0, 20.0, 12.0}, .height = 1.2, .box_class = SC::Obstacle},
                   }});

  suite.push_back({.id = 7,
                   .name = "box_maze",
                   .has_obstacles = true,
                   .start = {3.0, 12.0, 0.0},
                   .goal_region = {35.2, 4.0, 36.8, 20.0},
                   .terrain_seed = 107,
                   .features = {
                       {.kind = FeatureKind::Box, .rect = {10.0, 0.0, 12.0, 14.4}, .height = 1.5, .box_class = SC::Obstacle},
                       {.kind = FeatureKind::Box, .rect = {20.0, 9.6, 22.0, 24.0}, .height = 1.5, .box_class = SC::Obstacle},
                       {.kind = FeatureKind::Box, .rect = {29.0, 0.0, 31.0, 14.4}, .height = 1.5, .box_class = SC::Obstacle},
                   }});

  suite.push_back({.id = 8,
                   .name = "excavator_yard",
                   .has_obstacles = true,
                   .start = {3.0, 4.0, 0.0},
                   .goal_region = {33.4, 9.2, 36.8, 20.0},
                   .terrain_seed = 108,
                   .features = {
                       {.kind = FeatureKind::Box, .rect = {16.0, 10.0, 20.0, 13.2}, .height = 2.4, .box_class = SC::Excavator},
                       {.kind = FeatureKind::Box, .rect = {26.0, 4.0, 30.0, 7.2}, .height = 2.4, .box_class = SC::Excavator},
                       {.kind = FeatureKind::Box, .rect = {10.0, 16.0, 12.0, 18.0}, .height = 1.0, .box_class = SC::Obstacle},
                       {.kind = FeatureKind::Box, .rect = {22.0, 18.0, 24.0, 20.0}, .height = 1.0, .box_class = SC::Obstacle},
                   }});

  suite.push_back({.id = 9,
                   .name = "rolling_hills_pit",
                   .difficult_terrain = true,
                   .start = {3.0, 11.0, 0.0},
                   .goal_region = {33.4, 6.0, 36.8, 18.0},
                   .terrain_seed = 109,
                   .features = {
                       {.kind = FeatureKind::Mound, .rect = {8.0, 2.0, 14.0, 8.0}, .height = 0.9, .slope_deg = 20.0},
                       {.kind = FeatureKind::Mound, .rect = {16.0, 12.0, 24.0, 19.2}, .height = 1.0, .slope_deg = 20.0},
                       {.kind = FeatureKind::Mound, .rect = {26.0, 2.0, 32.0, 8.0}, .height = 0.9, .slope_deg = 20.0},
                       {.kind = FeatureKind::Pit, .rect = {8.0, 14.0, 13.2, 18.8}, .height = 0.9, .slope_deg = 26.0},
                   }});

  return suite;
}

}  // namespace travmap
