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

#include "travmap/geometry.hpp"
#include "travmap/grid_map.hpp"
#include "travmap/types.hpp"

namespace travmap {

struct TraversabilityScore {
  std::optional<double> value;  // in [0, 1] when present
  TraversabilitySource source = TraversabilitySource::Unknown;
};

/// Combine the semantic verdict with the geometric score:
///   - water / rock pile / obstacle / excavator force 0,
///   - flat forces 1 unless geometry reports an outright 0,
///   - everything else passes the geometric score through.
/// Semantic verdicts need no geometry; pass-through classes without
/// geometry stay absent.
TraversabilityScore fuse(std::optional<SemanticClass> sem, std::optional<double> t_geo);

/// Recompute slope, step, roughness and fused traversability for every cell
/// inside the time window. Layers are recomputed from scratch, not patched;
/// cells that fall out of the window keep their last computed values.
/// Returns the number of cells updated.
int update_traversability_layer(ElevationGridMap& map, const GeoThresholds& th,
                                const GeoWindows& windows, double now, double window_s);

}  // namespace travmap
