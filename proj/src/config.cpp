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

#include "travmap/config.hpp"

#include <fstream>
#include <set>

#include "json.hpp"

#include "travmap/io.hpp"

namespace travmap {

namespace {

using nlohmann::json;

void check_keys(const json& j, const std::string& where,
                std::initializer_list<const char*> known) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  const std::set<std::string> allowed(known.begin(), known.end());
  for (const auto& [key, _] : j.items()) {
    if (!allowed.count(key))
      throw ParseError(where + ": unknown key '" + key + "'");
  }
}

template <typename T>
void get_if(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

PipelineConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open config");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }

  PipelineConfig cfg;
  try {
    check_keys(j, path,
               {"grid", "machine", "thresholds", "heights_per_cell", "window_s",
                "image_match_tol_s", "label_decay", "t_occ", "unknown_policy",
                "camera_calibration", "footprint", "planner"});
    if (j.contains("grid")) {
      const auto& g = j.at("grid");
      check_keys(g, path + ": grid", {"origin", "width", "height", "resolution"});
      if (g.contains("origin")) {
        cfg.grid.origin_x = g.at("origin").at(0).get<double>();
        cfg.grid.origin_y = g.at("origin").at(1).get<double>();
      }
      get_if(g, "width", cfg.grid.width);
      get_if(g, "height", cfg.grid.height);
      get_if(g, "resolution", cfg.grid.resolution);
      if (!cfg.grid.valid()) throw ParseError(path + ": invalid grid");
    }
    if (j.contains("machine")) {
      const auto& m = j.at("machine");
      check_keys(m, path + ": machine",
                 {"max_climb_deg", "safe_climb_deg", "track_width", "track_separation",
                  "margin_deg"});
      get_if(m, "max_climb_deg", cfg.machine.max_climb_deg);
      get_if(m, "safe_climb_deg", cfg.machine.safe_climb_deg);
      get_if(m, "track_width", cfg.machine.track_width);
      get_if(m, "track_separation", cfg.machine.track_separation);
      get_if(m, "margin_deg", cfg.machine.margin_deg);
      if (!cfg.machine.valid()) throw ParseError(path + ": invalid machine limits");
    }
    if (j.contains("thresholds")) {
      const auto& t = j.at("thresholds");
      check_keys(t, path + ": thresholds",
                 {"s_cri", "s_safe", "h_cri", "h_safe", "alpha1", "alpha2"});
      GeoThresholds th = cfg.thresholds();
      get_if(t, "s_cri", th.s_cri);
      get_if(t, "s_safe", th.s_safe);
      get_if(t, "h_cri", th.h_cri);
      get_if(t, "h_safe", th.h_safe);
      get_if(t, "alpha1", th.alpha1);
      get_if(t, "alpha2", th.alpha2);
      if (!th.valid()) throw ParseError(path + ": invalid thresholds");
      cfg.threshold_override = th;
    }
    get_if(j, "heights_per_cell", cfg.heights_per_cell);
    get_if(j, "window_s", cfg.window_s);
    get_if(j, "image_match_tol_s", cfg.image_match_tol_s);
    get_if(j, "label_decay", cfg.label_decay);
    get_if(j, "t_occ", cfg.t_occ);
    if (j.contains("unknown_policy")) {
      const auto p = j.at("unknown_policy").get<std::string>();
      if (p == "occupied") {
        cfg.unknown_policy = UnknownPolicy::Occupied;
      } else if (p == "free") {
        cfg.unknown_policy = UnknownPolicy::Free;
      } else if (p == "unknown") {
        cfg.unknown_policy = UnknownPolicy::Unknown;
      } else {
        throw ParseError(path + ": unknown_policy must be occupied, free or unknown");
      }
    }
    get_if(j, "camera_calibration", cfg.camera_calibration);
    if (j.contains("footprint")) {
      const auto& f = j.at("footprint");
      check_keys(f, path + ": footprint",
                 {"length", "width", "min_turn_radius", "allow_reverse"});
      get_if(f, "length", cfg.footprint.length);
      get_if(f, "width", cfg.footprint.width);
      get_if(f, "min_turn_radius", cfg.footprint.min_turn_radius);
      get_if(f, "allow_reverse", cfg.footprint.allow_reverse);
      if (cfg.footprint.length <= 0.0 || cfg.footprint.width <= 0.0 ||
          cfg.footprint.min_turn_radius < 0.0)
        throw ParseError(path + ": invalid footprint");
    }
    if (j.contains("planner")) {
      const auto& p = j.at("planner");
      check_keys(p, path + ": planner",
                 {"heading_bins", "arc_length_factor", "position_tol", "heading_tol_deg",
                  "reverse_cost_factor", "heuristic_weight", "max_expansions",
                  "unknown_blocks"});
      get_if(p, "heading_bins", cfg.planner.heading_bins);
      get_if(p, "arc_length_factor", cfg.planner.arc_length_factor);
      get_if(p, "position_tol", cfg.planner.position_tol);
      get_if(p, "heading_tol_deg", cfg.planner.heading_tol_deg);
      get_if(p, "reverse_cost_factor", cfg.planner.reverse_cost_factor);
      get_if(p, "heuristic_weight", cfg.planner.heuristic_weight);
      get_if(p, "max_expansions", cfg.planner.max_expansions);
      get_if(p, "unknown_blocks", cfg.planner.unknown_blocks);
      if (cfg.planner.heading_bins < 4 || cfg.planner.arc_length_factor <= 0.0 ||
          cfg.planner.position_tol <= 0.0 || cfg.planner.heading_tol_deg <= 0.0 ||
          cfg.planner.heuristic_weight < 1.0 || cfg.planner.max_expansions < 1)
        throw ParseError(path + ": invalid planner settings");
    }
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (cfg.heights_per_cell < 1 || cfg.heights_per_cell > 64)
    throw ParseError(path + ": heights_per_cell must be in [1, 64]");
  if (cfg.window_s <= 0.0) throw ParseError(path + ": window_s must be > 0");
  if (cfg.label_decay <= 0.0 || cfg.label_decay > 1.0)
    throw ParseError(path + ": label_decay must be in (0, 1]");
  if (!(cfg.t_occ > 0.0 && cfg.t_occ < 1.0))
    throw ParseError(path + ": t_occ must be in (0, 1)");
  return cfg;
}

void write_config(const std::string& path, const PipelineConfig& cfg) {
  json j;
  j["grid"] = {{"origin", {cfg.grid.origin_x, cfg.grid.origin_y}},
               {"width", cfg.grid.width},
               {"height", cfg.grid.height},
               {"resolution", cfg.grid.resolution}};
  j["machine"] = {{"max_climb_deg", cfg.machine.max_climb_deg},
                  {"safe_climb_deg", cfg.machine.safe_climb_deg},
                  {"track_width", cfg.machine.track_width},
                  {"track_separation", cfg.machine.track_separation},
                  {"margin_deg", cfg.machine.margin_deg}};
  if (cfg.threshold_override) {
    const auto& t = *cfg.threshold_override;
    j["thresholds"] = {{"s_cri", t.s_cri},   {"s_safe", t.s_safe}, {"h_cri", t.h_cri},
                       {"h_safe", t.h_safe}, {"alpha1", t.alpha1}, {"alpha2", t.alpha2}};
  }
  j["heights_per_cell"] = cfg.heights_per_cell;
  j["window_s"] = cfg.window_s;
  j["image_match_tol_s"] = cfg.image_match_tol_s;
  j["label_decay"] = cfg.label_decay;
  j["t_occ"] = cfg.t_occ;
  j["unknown_policy"] = cfg.unknown_policy == UnknownPolicy::Occupied ? "occupied"
                        : cfg.unknown_policy == UnknownPolicy::Free   ? "free"
                                                                      : "unknown";
  if (!cfg.camera_calibration.empty()) j["camera_calibration"] = cfg.camera_calibration;
  j["footprint"] = {{"length", cfg.footprint.length},
                    {"width", cfg.footprint.width},
                    {"min_turn_radius", cfg.footprint.min_turn_radius},
                    {"allow_reverse", cfg.footprint.allow_reverse}};
  j["planner"] = {{"heading_bins", cfg.planner.heading_bins},
                  {"arc_length_factor", cfg.planner.arc_length_factor},
                  {"position_tol", cfg.planner.position_tol},
                  {"heading_tol_deg", cfg.planner.heading_tol_deg},
                  {"reverse_cost_factor", cfg.planner.reverse_cost_factor},
                  {"heuristic_weight", cfg.planner.heuristic_weight},
                  {"max_expansions", cfg.planner.max_expansions},
                  {"unknown_blocks", cfg.planner.unknown_blocks}};
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot open for writing");
  out << j.dump(2) << "\n";
}

}  // namespace travmap
