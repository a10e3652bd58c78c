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

#include <cmath>
#include <queue>
#include <vector>

#include "doctest.h"
#include "travmap/planner.hpp"
#include "travmap/rng.hpp"

using namespace travmap;

namespace {

OccupancyGrid empty_grid(double origin_x, double origin_y, int w, int h, double res) {
  OccupancyGrid grid;
  grid.spec = GridSpec{origin_x, origin_y, w, h, res};
  grid.states.assign(static_cast<std::size_t>(w) * h, OccState::Free);
  return grid;
}

void fill_rect(OccupancyGrid& grid, double x0, double y0, double x1, double y1,
               OccState state) {
  const auto& s = grid.spec;
  for (int iy = 0; iy < s.height; ++iy)
    for (int ix = 0; ix < s.width; ++ix) {
      const auto c = s.cell_center({ix, iy});
      if (c.x() >= x0 && c.x() < x1 && c.y() >= y0 && c.y() < y1) grid.set(ix, iy, state);
    }
}

// Reference shortest-path field, deliberately written differently from the
// library version: plain array scan relaxation until settled.
std::vector<double> reference_dijkstra(const OccupancyGrid& grid, const CellIndex& goal) {
  const auto& s = grid.spec;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(static_cast<std::size_t>(s.cell_count()), inf);
  if (grid.at(goal) != OccState::Free) return dist;
  dist[s.flat(goal)] = 0.0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int iy = 0; iy < s.height; ++iy)
      for (int ix = 0; ix < s.width; ++ix) {
        if (grid.at(ix, iy) != OccState::Free) continue;
        double best = dist[iy * s.width + ix];
        for (int dy = -1; dy <= 1; ++dy)
          for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            const int nx = ix + dx, ny = iy + dy;
            if (nx < 0 || nx >= s.width || ny < 0 || ny >= s.height) continue;
            if (grid.at(nx, ny) != OccState::Free) continue;
            const double step = (dx == 0 || dy == 0) ? s.resolution : s.resolution * M_SQRT2;
            best = std::min(best, dist[ny * s.width + nx] + step);
          }
        if (best < dist[iy * s.width + ix]) {
          dist[iy * s.width + ix] = best;
          changed = true;
        }
      }
  }
  return dist;
}

double path_euclidean_length(const PlannedPath& path) {
  double len = 0.0;
  for (std::size_t i = 1; i < path.poses.size(); ++i)
    len += std::hypot(path.poses[i].x - path.poses[i - 1].x,
                      path.poses[i].y - path.poses[i - 1].y);
  return len;
}

}  // namespace

TEST_CASE("collision_check overlaps cells but ignores zero-area touches") {
  auto grid = empty_grid(0.0, 0.0, 100, 100, 0.2);
  fill_rect(grid, 10.0, 10.0, 10.2, 10.2, OccState::Occupied);  // one cell
  VehicleFootprint fp;  // 5.0 x 3.4

  CHECK_FALSE(collision_check({3.0, 3.0, 0.3}, fp, grid));
  CHECK(collision_check({10.1, 10.1, 0.0}, fp, grid));
  CHECK(collision_check({10.1, 10.1, 1.1}, fp, grid));

  // Front edge exactly on the cell's left edge: zero-area contact.
  CHECK_FALSE(collision_check({10.0 - 2.5, 10.1, 0.0}, fp, grid));
  CHECK(collision_check({10.0 - 2.5 + 1e-6, 10.1, 0.0}, fp, grid));

  // Rotated footprint covering the cell, and one safely clear of it.
  CHECK(collision_check({8.0, 10.1, deg2rad(45.0)}, fp, grid));
  CHECK_FALSE(collision_check({14.0, 14.0, deg2rad(45.0)}, fp, grid));
}

TEST_CASE("collision_check honors the unknown-cell policy") {
  auto grid = empty_grid(0.0, 0.0, 50, 50, 0.2);
  fill_rect(grid, 5.0, 5.0, 5.2, 5.2, OccState::Unknown);
  VehicleFootprint fp;
  CHECK(collision_check({5.1, 5.1, 0.0}, fp, grid, true));
  CHECK_FALSE(collision_check({5.1, 5.1, 0.0}, fp, grid, false));
}

TEST_CASE("collision_check agrees with a dense point-sampling oracle") {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    auto grid = empty_grid(0.0, 0.0, 60, 60, 0.2);
    for (int i = 0; i < 25; ++i) {
      const int ix = rng.uniform_int(0, 59);
      const int iy = rng.uniform_int(0, 59);
      grid.set(ix, iy, OccState::Occupied);
    }
    VehicleFootprint fp;
    const Pose2D pose{rng.uniform(3.0, 9.0), rng.uniform(3.0, 9.0),
                      rng.uniform(-M_PI, M_PI)};

    // Sample strictly interior footprint points; each hit implies overlap
    // with positive area, so the exact test must agree.
    bool oracle_hit = false;
    const double c = std::cos(pose.theta), s = std::sin(pose.theta);
    for (double lo = -2.49; lo <= 2.49 && !oracle_hit; lo += 0.02)
      for (double la = -1.69; la <= 1.69 && !oracle_hit; la += 0.02) {
        const double x = pose.x + lo * c - la * s;
        const double y = pose.y + lo * s + la * c;
        const auto idx = grid.spec.world_to_index(x, y);
        if (idx && grid.at(*idx) == OccState::Occupied) oracle_hit = true;
      }
    if (oracle_hit) CHECK(collision_check(pose, fp, grid));
    if (!collision_check(pose, fp, grid)) CHECK_FALSE(oracle_hit);
  }
}

TEST_CASE("holonomic heuristic matches a reference shortest-path field") {
  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    auto grid = empty_grid(0.0, 0.0, 15, 15, 0.2);
    for (int i = 0; i < 30; ++i)
      grid.set(rng.uniform_int(0, 14), rng.uniform_int(0, 14), OccState::Occupied);
    const CellIndex goal{rng.uniform_int(0, 14), rng.uniform_int(0, 14)};

    const auto field = holonomic_heuristic(grid, goal);
    const auto want = reference_dijkstra(grid, goal);
    if (grid.at(goal) != OccState::Free) {
      CHECK_FALSE(field.has_value());
      continue;
    }
    REQUIRE(field.has_value());
    for (int flat = 0; flat < grid.spec.cell_count(); ++flat) {
      if (std::isinf(want[flat]))
        CHECK(std::isinf((*field)[flat]));
      else
        CHECK((*field)[flat] == doctest::Approx(want[flat]).epsilon(1e-9));
    }
  }
}

TEST_CASE("holonomic heuristic walks diagonals at sqrt(2) cost") {
  auto grid = empty_grid(0.0, 0.0, 10, 10, 0.2);
  const auto field = holonomic_heuristic(grid, {9, 9});
  REQUIRE(field.has_value());
  CHECK((*field)[0] == doctest::Approx(9.0 * M_SQRT2 * 0.2).epsilon(1e-12));
  CHECK((*field)[9] == doctest::Approx(9.0 * 0.2).epsilon(1e-12));  // straight row
  CHECK_FALSE(holonomic_heuristic(grid, {20, 3}).has_value());      // outside
}

TEST_CASE("empty-map plan runs straight and docks on the exact goal") {
  auto grid = empty_grid(0.0, 0.0, 120, 60, 0.2);  // 24 x 12 m
  const Pose2D start{4.0, 6.0, 0.0};
  const Pose2D goal{14.0, 6.0, 0.0};
  const auto result = plan(grid, start, goal, VehicleFootprint{}, PlannerConfig{});
  REQUIRE(result.status == PlanStatus::Success);
  CHECK(std::abs(result.path.total_length - 10.0) <= 0.02 * 10.0);
  REQUIRE_FALSE(result.path.poses.empty());
  const auto& last = result.path.poses.back();
  CHECK(last.x == doctest::Approx(goal.x).epsilon(1e-9));
  CHECK(last.y == doctest::Approx(goal.y).epsilon(1e-9));
  CHECK(angle_diff(last.theta, goal.theta) < 1e-9);
  // Stored poses are dense: no two consecutive poses further than one cell.
  for (std::size_t i = 1; i < result.path.poses.size(); ++i) {
    const double d = std::hypot(result.path.poses[i].x - result.path.poses[i - 1].x,
                                result.path.poses[i].y - result.path.poses[i - 1].y);
    CHECK(d <= 0.2 + 1e-9);
  }
  // Reported length matches the traversed polyline.
  CHECK(path_euclidean_length(result.path) ==
        doctest::Approx(result.path.total_length).epsilon(1e-3));
}

TEST_CASE("every pose of a returned path is collision-free") {
  auto grid = empty_grid(0.0, 0.0, 100, 100, 0.2);  // 20 x 20 m
  fill_rect(grid, 9.0, 0.0, 10.0, 13.0, OccState::Occupied);
  fill_rect(grid, 15.0, 7.0, 16.0, 20.0, OccState::Occupied);
  const Pose2D start{4.0, 4.0, 0.0};
  const Pose2D goal{18.0, 16.0, deg2rad(90.0)};
  const auto result = plan(grid, start, goal, VehicleFootprint{}, PlannerConfig{});
  REQUIRE(result.status == PlanStatus::Success);
  for (const auto& p : result.path.poses)
    CHECK_FALSE(collision_check(p, VehicleFootprint{}, grid));
  CHECK(result.path.total_length >=
        std::hypot(goal.x - start.x, goal.y - start.y) - 0.5);
}

TEST_CASE("a corridor too narrow for the footprint yields no path") {
  auto grid = empty_grid(0.0, 0.0, 80, 40, 0.2);  // 16 x 8 m
  // Wall across the middle with a 1 m gap: passable for the holonomic
  // heuristic, impossible for a 3.4 m wide footprint.
  fill_rect(grid, 7.8, 0.0, 8.2, 3.4, OccState::Occupied);
  fill_rect(grid, 7.8, 4.4, 8.2, 8.0, OccState::Occupied);
  const auto result =
      plan(grid, {3.5, 4.0, 0.0}, {12.5, 4.0, 0.0}, VehicleFootprint{}, PlannerConfig{});
  CHECK(result.status == PlanStatus::NoPath);
  CHECK(result.expansions > 0);
}

TEST_CASE("start validity is checked before searching") {
  auto grid = empty_grid(0.0, 0.0, 50, 50, 0.2);
  fill_rect(grid, 4.0, 4.0, 6.0, 6.0, OccState::Occupied);
  const auto inside =
      plan(grid, {5.0, 5.0, 0.0}, {8.0, 8.0, 0.0}, VehicleFootprint{}, PlannerConfig{});
  CHECK(inside.status == PlanStatus::InvalidStart);
  const auto outside =
      plan(grid, {-3.0, 5.0, 0.0}, {8.0, 8.0, 0.0}, VehicleFootprint{}, PlannerConfig{});
  CHECK(outside.status == PlanStatus::InvalidStart);
}

TEST_CASE("unreachable goals fail fast") {
  auto grid = empty_grid(0.0, 0.0, 50, 50, 0.2);
  fill_rect(grid, 7.0, 7.0, 7.2, 7.2, OccState::Occupied);
  // Goal cell itself blocked.
  auto result = plan(grid, {3.0, 3.0, 0.0}, {7.1, 7.1, 0.0}, VehicleFootprint{},
                     PlannerConfig{});
  CHECK(result.status == PlanStatus::NoPath);
  CHECK(result.expansions == 0);
  // Goal outside the map.
  result = plan(grid, {3.0, 3.0, 0.0}, {42.0, 3.0, 0.0}, VehicleFootprint{}, PlannerConfig{});
  CHECK(result.status == PlanStatus::NoPath);
  CHECK(result.expansions == 0);
}

TEST_CASE("a goal behind the start requires reverse in a dead-end corridor") {
  auto grid = empty_grid(0.0, 0.0, 100, 40, 0.2);  // 20 x 8 m
  // Corridor 4 m wide, closed on three sides.
  fill_rect(grid, 0.0, 0.0, 20.0, 2.0, OccState::Occupied);
  fill_rect(grid, 0.0, 6.0, 20.0, 8.0, OccState::Occupied);
  fill_rect(grid, 19.0, 0.0, 20.0, 8.0, OccState::Occupied);
  const Pose2D start{10.0, 4.0, 0.0};
  const Pose2D goal{4.0, 4.0, 0.0};  // behind the start, same heading

  VehicleFootprint fwd_only;
  fwd_only.allow_reverse = false;
  PlannerConfig cfg;
  cfg.max_expansions = 120000;
  CHECK(plan(grid, start, goal, fwd_only, cfg).status == PlanStatus::NoPath);

  VehicleFootprint with_reverse;  // reverse on by default
  const auto result = plan(grid, start, goal, with_reverse, cfg);
  CHECK(result.status == PlanStatus::Success);
}

TEST_CASE("planning is deterministic") {
  auto grid = empty_grid(0.0, 0.0, 80, 80, 0.2);
  fill_rect(grid, 6.0, 2.0, 7.0, 12.0, OccState::Occupied);
  fill_rect(grid, 10.0, 6.0, 11.0, 16.0, OccState::Occupied);
  const Pose2D start{3.0, 8.0, 0.0};
  const Pose2D goal{13.5, 8.0, deg2rad(30.0)};

  const auto a = plan(grid, start, goal, VehicleFootprint{}, PlannerConfig{});
  const auto b = plan(grid, start, goal, VehicleFootprint{}, PlannerConfig{});
  REQUIRE(a.status == PlanStatus::Success);
  REQUIRE(b.status == PlanStatus::Success);
  CHECK(a.expansions == b.expansions);
  REQUIRE(a.path.poses.size() == b.path.poses.size());
  for (std::size_t i = 0; i < a.path.poses.size(); ++i) {
    CHECK(a.path.poses[i].x == b.path.poses[i].x);
    CHECK(a.path.poses[i].y == b.path.poses[i].y);
    CHECK(a.path.poses[i].theta == b.path.poses[i].theta);
  }
}

TEST_CASE("zero minimum turn radius clamps to one cell and still plans") {
  auto grid = empty_grid(0.0, 0.0, 60, 60, 0.2);
  VehicleFootprint nimble;
  nimble.length = 1.0;
  nimble.width = 0.8;
  nimble.min_turn_radius = 0.0;
  const auto result =
      plan(grid, {2.0, 2.0, 0.0}, {9.0, 9.0, deg2rad(90.0)}, nimble, PlannerConfig{});
  CHECK(result.status == PlanStatus::Success);
}

TEST_CASE("an inflated heuristic never loses the direct route") {
  auto grid = empty_grid(0.0, 0.0, 120, 60, 0.2);
  PlannerConfig weighted;
  weighted.heuristic_weight = 2.5;
  const auto result =
      plan(grid, {4.0, 6.0, 0.0}, {14.0, 6.0, 0.0}, VehicleFootprint{}, weighted);
  REQUIRE(result.status == PlanStatus::Success);
  CHECK(std::abs(result.path.total_length - 10.0) <= 0.2);
}
