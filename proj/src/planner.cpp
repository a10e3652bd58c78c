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

#include "travmap/planner.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <unordered_map>

namespace travmap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool blocked(OccState s, bool unknown_blocks) {
  return s == OccState::Occupied || (unknown_blocks && s == OccState::Unknown);
}

std::array<Eigen::Vector2d, 4> footprint_corners(const Pose2D& pose,
                                                 const VehicleFootprint& fp) {
  const double c = std::cos(pose.theta);
  const double s = std::sin(pose.theta);
  const double hl = 0.5 * fp.length;
  const double hw = 0.5 * fp.width;
  const Eigen::Vector2d fwd{c, s};
  const Eigen::Vector2d left{-s, c};
  const Eigen::Vector2d base{pose.x, pose.y};
  return {base + fwd * hl + left * hw, base + fwd * hl - left * hw,
          base - fwd * hl - left * hw, base - fwd * hl + left * hw};
}

// Separating-axis overlap between the footprint rectangle and one axis
// aligned cell. Touching edges (zero-area overlap) do not collide.
bool rect_overlaps_cell(const std::array<Eigen::Vector2d, 4>& corners,
                        const Eigen::Vector2d& axis_fwd, const Eigen::Vector2d& axis_left,
                        double cx0, double cy0, double cx1, double cy1) {
  // Axes of the cell: x and y.
  double rminx = kInf, rmaxx = -kInf, rminy = kInf, rmaxy = -kInf;
  for (const auto& p : corners) {
    rminx = std::min(rminx, p.x());
    rmaxx = std::max(rmaxx, p.x());
    rminy = std::min(rminy, p.y());
    rmaxy = std::max(rmaxy, p.y());
  }
  if (rmaxx <= cx0 || rminx >= cx1 || rmaxy <= cy0 || rminy >= cy1) return false;

  // Axes of the footprint.
  const std::array<Eigen::Vector2d, 2> axes{axis_fwd, axis_left};
  const std::array<Eigen::Vector2d, 4> cell{{{cx0, cy0}, {cx1, cy0}, {cx1, cy1}, {cx0, cy1}}};
  for (const auto& axis : axes) {
    double rmin = kInf, rmax = -kInf, cmin = kInf, cmax = -kInf;
    for (const auto& p : corners) {
      const double d = p.dot(axis);
      rmin = std::min(rmin, d);
      rmax = std::max(rmax, d);
    }
    for (const auto& p : cell) {
      const double d = p.dot(axis);
      cmin = std::min(cmin, d);
      cmax = std::max(cmax, d);
    }
    if (rmax <= cmin || rmin >= cmax) return false;
  }
  return true;
}

// Squared Euclidean distance transform (Felzenszwalb/Huttenlocher), one
// dimension. f holds squared distances; BIG stands in for +inf so the
// parabola intersections stay finite.
constexpr double kBig = 1e12;

void edt_1d(const std::vector<double>& f, std::vector<double>& d, int n,
            std::vector<int>& v, std::vector<double>& z) {
  int k = 0;
  v[0] = 0;
  z[0] = -kBig;
  z[1] = kBig;
  for (int q = 1; q < n; ++q) {
    double s = ((f[q] + q * q) - (f[v[k]] + v[k] * v[k])) / (2.0 * q - 2.0 * v[k]);
    while (s <= z[k]) {
      --k;
      s = ((f[q] + q * q) - (f[v[k]] + v[k] * v[k])) / (2.0 * q - 2.0 * v[k]);
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = kBig;
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    d[q] = (q - v[k]) * (q - v[k]) + f[v[k]];
  }
}

// Per-cell distance (m) to the nearest blocked cell center.
std::vector<double> clearance_field(const OccupancyGrid& grid, bool unknown_blocks) {
  const int w = grid.spec.width;
  const int h = grid.spec.height;
  std::vector<double> field(static_cast<std::size_t>(w) * h);
  for (int iy = 0; iy < h; ++iy)
    for (int ix = 0; ix < w; ++ix)
      field[iy * w + ix] = blocked(grid.at(ix, iy), unknown_blocks) ? 0.0 : kBig;

  const int n = std::max(w, h);
  std::vector<double> row(n), out(n), z(n + 1);
  std::vector<int> v(n);
  for (int iy = 0; iy < h; ++iy) {
    for (int ix = 0; ix < w; ++ix) row[ix] = field[iy * w + ix];
    edt_1d(row, out, w, v, z);
    for (int ix = 0; ix < w; ++ix) field[iy * w + ix] = out[ix];
  }
  for (int ix = 0; ix < w; ++ix) {
    for (int iy = 0; iy < h; ++iy) row[iy] = field[iy * w + ix];
    edt_1d(row, out, h, v, z);
    for (int iy = 0; iy < h; ++iy) field[iy * w + ix] = out[iy];
  }
  for (auto& val : field) val = std::sqrt(val) * grid.spec.resolution;
  return field;
}

// Pose collision test with quick accept/reject through the clearance field,
// exact SAT otherwise. Matches collision_check() bit for bit; the bounds
// account for the pose sitting anywhere inside its cell.
struct CollisionTester {
  const OccupancyGrid& grid;
  const VehicleFootprint& fp;
  bool unknown_blocks;
  std::vector<double> clearance;
  double circumradius;
  double inradius;
  double cell_slack;

  CollisionTester(const OccupancyGrid& g, const VehicleFootprint& f, bool ub)
      : grid(g), fp(f), unknown_blocks(ub), clearance(clearance_field(g, ub)) {
    circumradius = 0.5 * std::hypot(fp.length, fp.width);
    inradius = 0.5 * std::min(fp.length, fp.width);
    cell_slack = g.spec.resolution * M_SQRT1_2;
  }

  // True when the base position lies inside the grid.
  bool base_in_map(const Pose2D& pose) const {
    return grid.spec.world_to_index(pose.x, pose.y).has_value();
  }

  bool collides(const Pose2D& pose) const {
    const auto idx = grid.spec.world_to_index(pose.x, pose.y);
    if (idx) {
      const double d = clearance[grid.spec.flat(*idx)];
      if (d - 2.0 * cell_slack > circumradius) return false;
      if (d + cell_slack < inradius) return true;
    }
    return collision_check(pose, fp, grid, unknown_blocks);
  }
};

struct Node {
  Pose2D pose;
  double g = 0.0;
  int parent = -1;
  double curvature = 0.0;  // primitive that led here
  int direction = 1;       // +1 forward, -1 reverse
  double arc_len = 0.0;
};

struct OpenEntry {
  double f = 0.0;
  std::uint64_t seq = 0;  // insertion order; earlier wins ties
  int node = -1;
};

struct OpenCompare {
  bool operator()(const OpenEntry& a, const OpenEntry& b) const {
    if (a.f != b.f) return a.f > b.f;
    return a.seq > b.seq;
  }
};

Pose2D advance(const Pose2D& p, double curvature, double signed_len) {
  Pose2D out;
  if (std::abs(curvature) < 1e-12) {
    out.x = p.x + signed_len * std::cos(p.theta);
    out.y = p.y + signed_len * std::sin(p.theta);
    out.theta = p.theta;
  } else {
    out.theta = wrap_angle(p.theta + curvature * signed_len);
    out.x = p.x + (std::sin(out.theta) - std::sin(p.theta)) / curvature;
    out.y = p.y - (std::cos(out.theta) - std::cos(p.theta)) / curvature;
  }
  return out;
}

}  // namespace

bool collision_check(const Pose2D& pose, const VehicleFootprint& footprint,
                     const OccupancyGrid& grid, bool unknown_blocks) {
  const auto corners = footprint_corners(pose, footprint);
  const Eigen::Vector2d fwd{std::cos(pose.theta), std::sin(pose.theta)};
  const Eigen::Vector2d left{-fwd.y(), fwd.x()};

  double minx = kInf, maxx = -kInf, miny = kInf, maxy = -kInf;
  for (const auto& c : corners) {
    minx = std::min(minx, c.x());
    maxx = std::max(maxx, c.x());
    miny = std::min(miny, c.y());
    maxy = std::max(maxy, c.y());
  }
  const auto& spec = grid.spec;
  const int ix0 = std::max(0, static_cast<int>(std::floor((minx - spec.origin_x) / spec.resolution)));
  const int ix1 = std::min(spec.width - 1,
                           static_cast<int>(std::floor((maxx - spec.origin_x) / spec.resolution)));
  const int iy0 = std::max(0, static_cast<int>(std::floor((miny - spec.origin_y) / spec.resolution)));
  const int iy1 = std::min(spec.height - 1,
                           static_cast<int>(std::floor((maxy - spec.origin_y) / spec.resolution)));
  for (int iy = iy0; iy <= iy1; ++iy) {
    for (int ix = ix0; ix <= ix1; ++ix) {
      if (!blocked(grid.at(ix, iy), unknown_blocks)) continue;
      const double cx0 = spec.origin_x + ix * spec.resolution;
      const double cy0 = spec.origin_y + iy * spec.resolution;
      if (rect_overlaps_cell(corners, fwd, left, cx0, cy0, cx0 + spec.resolution,
                             cy0 + spec.resolution))
        return true;
    }
  }
  return false;
}

std::optional<std::vector<double>> holonomic_heuristic(const OccupancyGrid& grid,
                                                       const CellIndex& goal,
                                                       bool unknown_blocks) {
  const auto& spec = grid.spec;
  if (!spec.in_bounds(goal) || blocked(grid.at(goal), unknown_blocks)) return std::nullopt;

  std::vector<double> dist(static_cast<std::size_t>(spec.cell_count()), kInf);
  using Entry = std::pair<double, int>;  // (distance, flat index)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  const int goal_flat = spec.flat(goal);
  dist[goal_flat] = 0.0;
  open.emplace(0.0, goal_flat);

  const double straight = spec.resolution;
  const double diagonal = spec.resolution * M_SQRT2;
  while (!open.empty()) {
    const auto [d, flat] = open.top();
    open.pop();
    if (d > dist[flat]) continue;
    const int ix = flat % spec.width;
    const int iy = flat / spec.width;
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        if (dx == 0 && dy == 0) continue;
        const int nx = ix + dx;
        const int ny = iy + dy;
        if (nx < 0 || nx >= spec.width || ny < 0 || ny >= spec.height) continue;
        if (blocked(grid.at(nx, ny), unknown_blocks)) continue;
        const double nd = d + ((dx == 0 || dy == 0) ? straight : diagonal);
        const int nflat = ny * spec.width + nx;
        if (nd < dist[nflat]) {
          dist[nflat] = nd;
          open.emplace(nd, nflat);
        }
      }
    }
  }
  return dist;
}

PlanResult plan(const OccupancyGrid& grid, const Pose2D& start, const Pose2D& goal,
                const VehicleFootprint& footprint, const PlannerConfig& config) {
  PlanResult result;
  const auto& spec = grid.spec;
  const double res = spec.resolution;
  const CollisionTester tester(grid, footprint, config.unknown_blocks);

  if (!tester.base_in_map(start) || tester.collides(start)) {
    result.status = PlanStatus::InvalidStart;
    return result;
  }

  const auto goal_idx = spec.world_to_index(goal.x, goal.y);
  if (!goal_idx) return result;  // goal outside the map: nothing to reach
  const auto heuristic_field = holonomic_heuristic(grid, *goal_idx, config.unknown_blocks);
  if (!heuristic_field) return result;  // goal cell blocked

  const double heading_tol = deg2rad(config.heading_tol_deg);
  const double weight = std::max(1.0, config.heuristic_weight);
  const auto h_of = [&](const Pose2D& p) {
    const auto idx = spec.world_to_index(p.x, p.y);
    const double grid_h = idx ? (*heuristic_field)[spec.flat(*idx)] : kInf;
    const double eucl = std::hypot(goal.x - p.x, goal.y - p.y);
    return weight * std::max(grid_h, eucl);
  };
  const auto near_goal = [&](const Pose2D& p) {
    return std::hypot(goal.x - p.x, goal.y - p.y) <= config.position_tol &&
           angle_diff(p.theta, goal.theta) <= heading_tol;
  };

  // Motion primitives: arcs of fixed length at zero and +/- minimum-radius
  // curvature, forward and (optionally) reverse.
  const double radius = std::max(footprint.min_turn_radius, res);
  const double arc = config.arc_length_factor * res;
  const double sample_step = 0.5 * res;
  const int samples_per_arc = static_cast<int>(std::ceil(arc / sample_step));
  std::vector<std::pair<double, int>> primitives;  // (curvature, direction)
  for (const double kappa : {0.0, 1.0 / radius, -1.0 / radius}) {
    primitives.emplace_back(kappa, 1);
    if (footprint.allow_reverse) primitives.emplace_back(kappa, -1);
  }

  const int bins = std::max(1, config.heading_bins);
  const double bin_width = 2.0 * M_PI / bins;
  const auto state_key = [&](const Pose2D& p) -> std::uint64_t {
    const auto idx = spec.world_to_index(p.x, p.y);
    int tb = static_cast<int>(std::floor((wrap_angle(p.theta) + M_PI) / bin_width));
    tb = std::clamp(tb, 0, bins - 1);
    return (static_cast<std::uint64_t>(spec.flat(*idx)) * bins) + tb;
  };

  std::vector<Node> arena;
  arena.push_back({start, 0.0, -1, 0.0, 1, 0.0});
  std::unordered_map<std::uint64_t, double> best_g;
  best_g[state_key(start)] = 0.0;

  std::priority_queue<OpenEntry, std::vector<OpenEntry>, OpenCompare> open;
  std::uint64_t seq = 0;
  open.push({h_of(start), seq++, 0});

  int goal_node = -1;
  while (!open.empty()) {
    const OpenEntry top = open.top();
    open.pop();
    const Node node = arena[top.node];  // by value: expansion grows the arena
    const auto it = best_g.find(state_key(node.pose));
    if (it != best_g.end() && node.g > it->second + 1e-12) continue;  // stale entry

    ++result.expansions;
    if (near_goal(node.pose)) {
      goal_node = top.node;
      break;
    }
    if (result.expansions > config.max_expansions) break;

    for (const auto& [kappa, dir] : primitives) {
      // Walk the arc in half-cell steps; every sample must be collision-free
      // and keep the base inside the map.
      Pose2D probe = node.pose;
      bool ok = true;
      for (int s = 1; s <= samples_per_arc; ++s) {
        probe = advance(node.pose, kappa, dir * arc * s / samples_per_arc);
        if (!tester.base_in_map(probe) || tester.collides(probe)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;

      const double step_cost = arc * (dir < 0 ? config.reverse_cost_factor : 1.0);
      const double child_g = node.g + step_cost;
      const std::uint64_t key = state_key(probe);
      const auto found = best_g.find(key);
      if (found != best_g.end() && found->second <= child_g) continue;
      best_g[key] = child_g;
      arena.push_back({probe, child_g, top.node, kappa, dir, arc});
      open.push({child_g + h_of(probe), seq++, static_cast<int>(arena.size()) - 1});
    }
  }

  if (goal_node < 0) return result;  // status stays NoPath

  // Reconstruct, re-sampling each arc densely.
  std::vector<int> chain;
  for (int n = goal_node; n >= 0; n = arena[n].parent) chain.push_back(n);
  std::reverse(chain.begin(), chain.end());

  PlannedPath path;
  path.poses.push_back(arena[chain.front()].pose);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const Node& child = arena[chain[i]];
    const Node& parent = arena[arena[chain[i]].parent >= 0 ? arena[chain[i]].parent : 0];
    for (int s = 1; s <= samples_per_arc; ++s) {
      path.poses.push_back(
          advance(parent.pose, child.curvature, child.direction * child.arc_len * s / samples_per_arc));
    }
    path.total_length += child.arc_len;
  }

  // Endpoint tidying: close the remaining gap to the exact goal pose with a
  // short, densely checked blend; keep the in-tolerance endpoint otherwise.
  const Pose2D end = path.poses.back();
  const double gap = std::hypot(goal.x - end.x, goal.y - end.y);
  const double turn = wrap_angle(goal.theta - end.theta);
  if (gap > 1e-9 || std::abs(turn) > 1e-9) {
    const int steps = std::max(1, static_cast<int>(std::ceil(gap / sample_step)));
    std::vector<Pose2D> blend;
    bool ok = true;
    for (int s = 1; s <= steps; ++s) {
      const double f = static_cast<double>(s) / steps;
      const Pose2D p{end.x + f * (goal.x - end.x), end.y + f * (goal.y - end.y),
                     wrap_angle(end.theta + f * turn)};
      if (!tester.base_in_map(p) || tester.collides(p)) {
        ok = false;
        break;
      }
      blend.push_back(p);
    }
    if (ok) {
      path.poses.insert(path.poses.end(), blend.begin(), blend.end());
      path.total_length += gap;
    }
  }

  result.status = PlanStatus::Success;
  result.path = std::move(path);
  return result;
}

}  // namespace travmap
