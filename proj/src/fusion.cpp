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

#include "travmap/fusion.hpp"

#include "travmap/semantics.hpp"

namespace travmap {

namespace {

bool forbidden(SemanticClass c) {
  return c == SemanticClass::Water || c == SemanticClass::RockPile ||
         c == SemanticClass::Obstacle || c == SemanticClass::Excavator;
}

}  // namespace

TraversabilityScore fuse(std::optional<SemanticClass> sem, std::optional<double> t_geo) {
  if (sem && forbidden(*sem)) return {0.0, TraversabilitySource::SemanticForbidden};
  if (sem && *sem == SemanticClass::Flat && (!t_geo || *t_geo > 0.0))
    return {1.0, TraversabilitySource::SemanticFlat};
  if (t_geo) return {*t_geo, TraversabilitySource::Geometric};
  return {std::nullopt, TraversabilitySource::Unknown};
}

int update_traversability_layer(ElevationGridMap& map, const GeoThresholds& th,
                                const GeoWindows& windows, double now, double window_s) {
  const WindowedView view(map, now, window_s);
  const auto& spec = map.spec();
  int updated = 0;
  for (int iy = 0; iy < spec.height; ++iy) {
    for (int ix = 0; ix < spec.width; ++ix) {
      if (!view.has(ix, iy)) continue;
      const CellIndex idx{ix, iy};
      Cell& cell = map.at(idx);

      const auto est = estimate_normal(view, idx, windows.slope_window);
      std::optional<double> slope;
      std::optional<double> rough;
      if (est) {
        slope = slope_of(est->normal);
        rough = roughness_with_normal(view, idx, *est, windows.slope_window);
      }
      const auto step = step_height(view, idx, windows.step_window);

      cell.slope_deg = slope;
      cell.step_height = step;
      cell.roughness = rough;

      std::optional<double> t_geo;
      if (slope && step) t_geo = geometric_traversability(*slope, *step, th);
      const auto score = fuse(majority_label(cell), t_geo);
      cell.traversability = score.value;
      cell.trav_source = score.source;
      ++updated;
    }
  }
  return updated;
}

}  // namespace travmap
