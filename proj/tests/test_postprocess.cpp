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
#include <set>
#include <vector>

#include "doctest.h"
#include "travmap/postprocess.hpp"
#include "travmap/rng.hpp"

using namespace travmap;

namespace {

// Map whose cells carry hand-assigned traversability scores and heights.
// A single height sample pins the mean; the score layer is set directly.
ElevationGridMap scored_map(const GridSpec& spec, double default_t, double default_z) {
  ElevationGridMap map(spec);
  for (int iy = 0; iy < spec.height; ++iy)
    for (int ix = 0; ix < spec.width; ++ix) {
      const auto c = spec.cell_center({ix, iy});
      std::vector<PointStamped> pt{{0.0, c.x(), c.y(), default_z}};
      map.insert_points(pt);
      map.at(ix, iy).traversability = default_t;
      map.at(ix, iy).trav_source = TraversabilitySource::Geometric;
    }
  return map;
}

void set_cell(ElevationGridMap& map, int ix, int iy, double t, double z) {
  Cell& c = map.at(ix, iy);
  c.traversability = t;
  const auto ctr = map.spec().cell_center({ix, iy});
  std::vector<PointStamped> pts;
  // Flood the FIFO so the mean becomes exactly z.
  for (int i = 0; i < map.heights_per_cell(); ++i) pts.push_back({0.0, ctr.x(), ctr.y(), z});
  map.insert_points(pts);
  map.at(ix, iy).traversability = t;
}

}  // namespace

TEST_CASE("regions are 8-connected components that partition low cells") {
  const GridSpec spec{0.0, 0.0, 10, 10, 0.2};
  auto map = scored_map(spec, 0.9, 0.0);
  // Diagonal chain: one region under 8-connectivity.
  set_cell(map, 1, 1, 0.2, 0.0);
  set_cell(map, 2, 2, 0.3, 0.0);
  set_cell(map, 3, 3, 0.4, 0.0);
  // Separate block two cells away.
  set_cell(map, 7, 7, 0.1, 0.0);
  set_cell(map, 8, 7, 0.1, 0.0);
  // Absent cells never join a region.
  map.at(5, 5).traversability.reset();

  const auto regions = find_nontraversable_regions(map, 0.6);
  REQUIRE(regions.size() == 2);
  std::set<int> sizes;
  for (const auto& r : regions) sizes.insert(static_cast<int>(r.cells.size()));
  CHECK(sizes == std::set<int>{2, 3});

  std::set<std::pair<int, int>> seen;
  for (const auto& r : regions)
    for (const auto& c : r.cells) CHECK(seen.insert({c.ix, c.iy}).second);
  CHECK(seen.size() == 5);

  const auto& diag = regions[0].cells.size() == 3 ? regions[0] : regions[1];
  CHECK(diag.mean_traversability == doctest::Approx((0.2 + 0.3 + 0.4) / 3.0));
  CHECK(diag.span_x == doctest::Approx(0.6));  // three cells at 0.2 m
  CHECK(diag.span_y == doctest::Approx(0.6));
}

TEST_CASE("relative height compares the region peak to its traversable border") {
  const GridSpec spec{0.0, 0.0, 10, 10, 0.2};
  auto map = scored_map(spec, 0.9, 0.2);
  set_cell(map, 5, 5, 0.1, 0.5);
  const auto regions = find_nontraversable_regions(map, 0.6);
  REQUIRE(regions.size() == 1);
  CHECK(regions[0].relative_height == doctest::Approx(0.3));

  // Without any traversable border the height is unbounded.
  auto all_low = scored_map(spec, 0.1, 0.4);
  const auto whole = find_nontraversable_regions(all_low, 0.6);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].cells.size() == 100);
  CHECK(std::isinf(whole[0].relative_height));
}

TEST_CASE("promotion needs every criterion at once") {
  const GridSpec spec{0.0, 0.0, 20, 20, 0.2};
  const double t_occ = 0.6;
  const double h_cri = 0.35;
  const double sep = 2.75;  // span limit = 1.375 m

  SUBCASE("a small shallow pocket is promoted to exactly t_occ") {
    auto map = scored_map(spec, 0.9, 0.2);
    set_cell(map, 5, 5, 0.3, 0.3);
    set_cell(map, 6, 5, 0.2, 0.3);
    const auto regions = find_nontraversable_regions(map, t_occ);
    REQUIRE(regions.size() == 1);
    CHECK(remove_small_regions(map, regions, h_cri, sep, t_occ) == 2);
    CHECK(*map.at(5, 5).traversability == t_occ);
    CHECK(*map.at(6, 5).traversability == t_occ);
    CHECK(map.at(5, 5).trav_source == TraversabilitySource::Geometric);
  }
  SUBCASE("a mean at or above the occupancy threshold blocks promotion") {
    auto map = scored_map(spec, 0.9, 0.2);
    set_cell(map, 5, 5, 0.5, 0.2);
    const auto regions = find_nontraversable_regions(map, t_occ);
    REQUIRE(regions.size() == 1);
    // Re-evaluated against a stricter threshold the same region fails.
    CHECK(remove_small_regions(map, regions, h_cri, sep, 0.4) == 0);
    CHECK(*map.at(5, 5).traversability == 0.5);
  }
  SUBCASE("a tall region blocks promotion") {
    auto map = scored_map(spec, 0.9, 0.2);
    set_cell(map, 5, 5, 0.3, 0.2 + h_cri + 0.05);
    const auto regions = find_nontraversable_regions(map, t_occ);
    REQUIRE(regions.size() == 1);
    CHECK(remove_small_regions(map, regions, h_cri, sep, t_occ) == 0);
  }
  SUBCASE("a region wider than half the track separation blocks promotion") {
    auto map = scored_map(spec, 0.9, 0.2);
    for (int ix = 4; ix <= 10; ++ix) set_cell(map, ix, 5, 0.3, 0.2);  // 1.4 m
    const auto regions = find_nontraversable_regions(map, t_occ);
    REQUIRE(regions.size() == 1);
    CHECK(regions[0].span_x == doctest::Approx(1.4));
    CHECK(remove_small_regions(map, regions, h_cri, sep, t_occ) == 0);

    // One cell shorter fits under the limit.
    auto map2 = scored_map(spec, 0.9, 0.2);
    for (int ix = 4; ix <= 9; ++ix) set_cell(map2, ix, 5, 0.3, 0.2);  // 1.2 m
    const auto r2 = find_nontraversable_regions(map2, t_occ);
    REQUIRE(r2.size() == 1);
    CHECK(remove_small_regions(map2, r2, h_cri, sep, t_occ) == 6);
  }
  SUBCASE("an unbounded relative height blocks promotion") {
    auto map = scored_map(spec, 0.1, 0.2);  // everything low: no border
    const auto regions = find_nontraversable_regions(map, t_occ);
    REQUIRE(regions.size() == 1);
    CHECK(remove_small_regions(map, regions, h_cri, sep, t_occ) == 0);
  }
}

TEST_CASE("occupancy thresholding maps scores and absences to states") {
  const GridSpec spec{0.0, 0.0, 3, 1, 0.2};
  ElevationGridMap map(spec);
  map.at(0, 0).traversability = 0.6;   // exactly at the threshold: free
  map.at(1, 0).traversability = 0.59;  // occupied
  // (2, 0) stays absent.

  auto occ = to_occupancy(map, 0.6, UnknownPolicy::Occupied);
  CHECK(occ.at(0, 0) == OccState::Free);
  CHECK(occ.at(1, 0) == OccState::Occupied);
  CHECK(occ.at(2, 0) == OccState::Occupied);

  occ = to_occupancy(map, 0.6, UnknownPolicy::Free);
  CHECK(occ.at(2, 0) == OccState::Free);
  occ = to_occupancy(map, 0.6, UnknownPolicy::Unknown);
  CHECK(occ.at(2, 0) == OccState::Unknown);
}

TEST_CASE("region filtering only ever grows the free set") {
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const GridSpec spec{0.0, 0.0, 25, 25, 0.2};
    ElevationGridMap map(spec);
    for (int iy = 0; iy < spec.height; ++iy)
      for (int ix = 0; ix < spec.width; ++ix) {
        const auto c = spec.cell_center({ix, iy});
        std::vector<PointStamped> pt{{0.0, c.x(), c.y(), rng.uniform(0.0, 0.5)}};
        map.insert_points(pt);
        if (rng.uniform() < 0.85) map.at(ix, iy).traversability = rng.uniform(0.0, 1.0);
      }

    const auto before = to_occupancy(map, 0.6);
    const auto regions = find_nontraversable_regions(map, 0.6);
    const int promoted = remove_small_regions(map, regions, 0.35, 2.75, 0.6);
    const auto after = to_occupancy(map, 0.6);

    int flipped = 0;
    for (int iy = 0; iy < spec.height; ++iy)
      for (int ix = 0; ix < spec.width; ++ix) {
        if (before.at(ix, iy) == OccState::Free) CHECK(after.at(ix, iy) == OccState::Free);
        if (before.at(ix, iy) != after.at(ix, iy)) {
          CHECK(after.at(ix, iy) == OccState::Free);
          ++flipped;
        }
      }
    CHECK(flipped == promoted);
  }
}
