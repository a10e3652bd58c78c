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

#include "travmap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace travmap {

namespace {

// Nearest odd integer >= 1; ties round up. The comparison carries a small
// slack so quotients such as 0.6 / 0.1 that land a few ulps below an exact
// tie still round the same way as the tie itself.
int round_to_odd(double x) {
  const int lower = 2 * static_cast<int>(std::floor((x - 1.0) / 2.0)) + 1;
  const int upper = lower + 2;
  const int odd = (x - lower < upper - x - 1e-9) ? lower : upper;
  return std::max(1, odd);
}

// Collect (center, mean height) points of the non-absent cells in the
// window around idx.
int gather_neighborhood(const WindowedView& view, const CellIndex& idx, int window,
                        Eigen::Vector3d* pts, int max_pts) {
  const int half = window / 2;
  int n = 0;
  for (int dy = -half; dy <= half; ++dy) {
    for (int dx = -half; dx <= half; ++dx) {
      const int ix = idx.ix + dx;
      const int iy = idx.iy + dy;
      if (!view.has(ix, iy)) continue;
      if (n < max_pts) pts[n] = view.point(ix, iy);
      ++n;
    }
  }
  return n;
}

constexpr int kMaxFitWindow = 9;  // supports windows up to 9x9

}  // namespace

GeoThresholds derive_thresholds(const MachineSpec& machine, double resolution) {
  if (!machine.valid()) throw std::invalid_argument("derive_thresholds: invalid machine spec");
  if (resolution <= 0.0) throw std::invalid_argument("derive_thresholds: resolution must be > 0");
  GeoThresholds th;
  th.s_cri = machine.max_climb_deg - machine.margin_deg;
  th.s_safe = machine.safe_climb_deg;
  th.h_cri = 3.0 * std::tan(deg2rad(th.s_cri)) * resolution;
  th.h_safe = 3.0 * std::tan(deg2rad(th.s_safe)) * resolution;
  th.alpha1 = 0.5;
  th.alpha2 = 0.5;
  if (!th.valid())
    throw std::invalid_argument(
        "derive_thresholds: margin leaves no usable band between safe and critical slope");
  return th;
}

GeoWindows derive_windows(const MachineSpec& machine, double resolution) {
  if (!machine.valid()) throw std::invalid_argument("derive_windows: invalid machine spec");
  if (resolution <= 0.0) throw std::invalid_argument("derive_windows: resolution must be > 0");
  GeoWindows w;
  w.slope_window = std::max(3, round_to_odd(machine.track_width / resolution));
  w.step_window =
      std::max(w.slope_window, round_to_odd(0.5 * machine.track_separation / resolution));
  return w;
}

std::optional<NormalEstimate> estimate_normal(const WindowedView& view,
                                              const CellIndex& idx, int window) {
  Eigen::Vector3d pts[kMaxFitWindow * kMaxFitWindow];
  const int n = gather_neighborhood(view, idx, window, pts, kMaxFitWindow * kMaxFitWindow);
  if (n < 3) return std::nullopt;

  Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
  for (int i = 0; i < n; ++i) centroid += pts[i];
  centroid /= n;

  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector3d d = pts[i] - centroid;
    cov += d * d.transpose();
  }
  cov /= n;

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver;
  solver.computeDirect(cov);  // closed-form path for 3x3 symmetric matrices
  const Eigen::Vector3d evals = solver.eigenvalues();  // ascending
  if (evals(1) - evals(0) < 1e-12) return std::nullopt;  // degenerate fit

  Eigen::Vector3d n_vec = solver.eigenvectors().col(0);
  if (n_vec.z() < 0.0) n_vec = -n_vec;
  n_vec.normalize();
  return NormalEstimate{n_vec, evals, centroid, n};
}

double slope_of(const Eigen::Vector3d& normal) {
  const double nz = std::clamp(normal.z(), 0.0, 1.0);
  return rad2deg(std::acos(nz));
}

std::optional<double> step_height(const WindowedView& view, const CellIndex& idx,
                                  int window) {
  const Cell* center = view.cell(idx.ix, idx.iy);
  if (!center) return std::nullopt;
  const double zc = center->mean_height();
  const int half = window / 2;
  double best = -1.0;
  for (int dy = -half; dy <= half; ++dy) {
    for (int dx = -half; dx <= half; ++dx) {
      if (dx == 0 && dy == 0) continue;
      const Cell* c = view.cell(idx.ix + dx, idx.iy + dy);
      if (!c) continue;
      best = std::max(best, std::abs(zc - c->mean_height()));
    }
  }
  if (best < 0.0) return std::nullopt;  // no neighbor carries data
  return best;
}

std::optional<double> roughness(const WindowedView& view, const CellIndex& idx,
                                int window) {
  const auto est = estimate_normal(view, idx, window);
  if (!est) return std::nullopt;
  return roughness_with_normal(view, idx, *est, window);
}

double roughness_with_normal(const WindowedView& view, const CellIndex& idx,
                             const NormalEstimate& est, int window) {
  Eigen::Vector3d pts[kMaxFitWindow * kMaxFitWindow];
  const int n = gather_neighborhood(view, idx, window, pts, kMaxFitWindow * kMaxFitWindow);
  double sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = (pts[i] - est.centroid).dot(est.normal);
    sum_sq += d * d;
  }
  return std::sqrt(sum_sq);
}

double geometric_traversability(double slope_deg, double step_m,
                                const GeoThresholds& th) {
  if (slope_deg > th.s_cri || step_m > th.h_cri) return 0.0;
  if (slope_deg < th.s_safe && step_m < th.h_safe) return 1.0;
  const double cost = th.alpha1 * slope_deg / th.s_cri + th.alpha2 * step_m / th.h_cri;
  return std::max(1.0 - cost, 0.0);
}

}  // namespace travmap
