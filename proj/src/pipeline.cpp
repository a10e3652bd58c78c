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

#include "travmap/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <utility>

#include "travmap/fusion.hpp"

namespace travmap {

namespace {

constexpr std::size_t kMaxBufferedFrames = 16;

double ms_since(std::chrono::steady_clock::time_point t0) {
  const auto dt = std::chrono::steady_clock::now() - t0;
  return std::chrono::duration<double, std::milli>(dt).count();
}

}  // namespace

void StageTiming::add(double ms) {
  ++count;
  total_ms += ms;
  min_ms = std::min(min_ms, ms);
  max_ms = std::max(max_ms, ms);
}

Pipeline::Pipeline(const PipelineConfig& cfg)
    : cfg_(cfg),
      thresholds_(cfg.thresholds()),
      windows_(cfg.windows()),
      map_(cfg.grid, cfg.heights_per_cell) {}

void Pipeline::add_label_frame(double stamp, LabelImage image,
                               const CameraModel& camera) {
  if (!camera.valid()) throw std::invalid_argument("label frame: invalid camera model");
  frames_.push_back({stamp, std::move(image), camera});
  while (frames_.size() > kMaxBufferedFrames) frames_.pop_front();
}

const Pipeline::LabelFrame* Pipeline::nearest_frame(double stamp) const {
  const LabelFrame* best = nullptr;
  double best_dt = cfg_.image_match_tol_s;
  for (const auto& f : frames_) {
    const double dt = std::abs(f.stamp - stamp);
    if (dt <= best_dt) {
      best_dt = dt;
      best = &f;
    }
  }
  return best;
}

CloudReport Pipeline::process_cloud(std::span<const PointStamped> cloud, double now,
                                    bool update_layers_now) {
  const auto cycle_start = std::chrono::steady_clock::now();
  CloudReport report;

  if (cfg_.label_decay < 1.0) decay_label_histograms(map_, cfg_.label_decay);

  auto t0 = std::chrono::steady_clock::now();
  report.insert = map_.insert_points(cloud);
  timings_.insertion.add(ms_since(t0));

  if (const LabelFrame* frame = nearest_frame(now)) {
    t0 = std::chrono::steady_clock::now();
    const auto labeled = label_cloud(cloud, frame->image, frame->camera);
    for (const auto& lp : labeled)
      if (lp.label != kUnlabeled) ++report.labeled_points;
    accumulate_labels(map_, labeled);
    timings_.labeling.add(ms_since(t0));
    report.used_label_frame = true;
  }

  if (update_layers_now) {
    t0 = std::chrono::steady_clock::now();
    report.updated_cells = update_layers(now, cfg_.window_s);
    timings_.update.add(ms_since(t0));
  }

  timings_.cycle.add(ms_since(cycle_start));
  return report;
}

int Pipeline::update_layers(double now, double window_s) {
  return update_traversability_layer(map_, thresholds_, windows_, now, window_s);
}

int Pipeline::apply_region_filter() {
  auto regions = find_nontraversable_regions(map_, cfg_.t_occ);
  return remove_small_regions(map_, regions, thresholds_.h_cri,
                              cfg_.machine.track_separation, cfg_.t_occ);
}

OccupancyGrid Pipeline::occupancy() const {
  return to_occupancy(map_, cfg_.t_occ, cfg_.unknown_policy);
}

}  // namespace travmap
