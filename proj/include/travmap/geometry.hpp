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

#include <Eigen/Core>

#include "travmap/grid_map.hpp"
#include "travmap/types.hpp"

namespace travmap {

/// Climbing and clearance limits of the carrier machine.
struct MachineSpec {
  double max_climb_deg = 35.0;   // mechanical climbing limit
  double safe_climb_deg = 10.0;  // slope considered unconditionally safe
  double track_width = 0.6;      // m, width of one track
  double track_separation = 2.75;  // m, distance between track centers
  double margin_deg = 5.0;       // safety margin subtracted from max_climb_deg

  bool valid() const {
    return safe_climb_deg > 0.0 && max_climb_deg > safe_climb_deg &&
           max_climb_deg < 90.0 && margin_deg >= 0.0 && track_width > 0.0 &&
           track_separation > track_width;
  }
};

/// Critical/safe limits for the geometric score.
struct GeoThresholds {
  double s_cri = 30.0;  // deg; slopes above are untraversable
  double s_safe = 10.0; // deg; slopes below are unconditionally fine
  double h_cri = 0.35;  // m; steps above are untraversable
  double h_safe = 0.10; // m; steps below are unconditionally fine
  double alpha1 = 0.5;  // slope weight
  double alpha2 = 0.5;  // step weight

  bool valid() const {
    return s_safe > 0.0 && s_cri > s_safe && s_cri < 90.0 && h_safe > 0.0 &&
           h_cri > h_safe && alpha1 >= 0.0 && alpha2 >= 0.0;
  }
};

/// Neighborhood sizes (odd cell counts) for the surface fit and the step
/// scan.
struct GeoWindows {
  int slope_window = 3;
  int step_window = 7;
};

/// Thresholds from the machine limits at a given grid resolution:
///   s_cri = max_climb - margin, s_safe = safe_climb,
///   h = 3 * tan(s) * resolution for the matching step limits.
/// Throws std::invalid_argument when the result violates GeoThresholds
/// ordering (invalid spec).
GeoThresholds derive_thresholds(const MachineSpec& machine, double resolution);

/// Window sizes from the machine footprint: the surface fit spans one track
/// width, the step scan spans half the track separation; both rounded to the
/// nearest odd cell count.
GeoWindows derive_windows(const MachineSpec& machine, double resolution);

struct NormalEstimate {
  Eigen::Vector3d normal;       // unit, normal.z() >= 0
  Eigen::Vector3d eigenvalues;  // ascending
  Eigen::Vector3d centroid;
  int cell_count = 0;
};

/// Surface normal of the cell from a PCA plane fit over the windowed
/// neighborhood (cell centers + mean heights). Absent when fewer than 3
/// cells carry data or the two smallest eigenvalues tie (degenerate fit,
/// e.g. collinear samples).
std::optional<NormalEstimate> estimate_normal(const WindowedView& view,
                                              const CellIndex& idx,
                                              int window = 3);

/// Slope angle in degrees, in [0, 90], from a unit surface normal.
double slope_of(const Eigen::Vector3d& normal);

/// Largest |height difference| between the cell and any non-absent neighbor
/// in the window. Absent neighbors are skipped, never zero-filled; absent
/// when the center has no data or no neighbor does.
std::optional<double> step_height(const WindowedView& view, const CellIndex& idx,
                                  int window = 7);

/// Root of the summed squared point-to-plane distances over the fit
/// neighborhood.
std::optional<double> roughness(const WindowedView& view, const CellIndex& idx,
                                int window = 3);

/// Same, reusing an already computed fit.
double roughness_with_normal(const WindowedView& view, const CellIndex& idx,
                             const NormalEstimate& est, int window = 3);

/// Piecewise geometric traversability in [0, 1]:
///   0                            if s > s_cri or h > h_cri
///   1                            if s < s_safe and h < h_safe
///   max(1 - (a1*s/s_cri + a2*h/h_cri), 0)  otherwise
double geometric_traversability(double slope_deg, double step_m,
                                const GeoThresholds& th);

}  // namespace travmap
