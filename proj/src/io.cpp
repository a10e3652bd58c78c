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

#include "travmap/io.hpp"

#include <zlib.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace travmap {

namespace {

using nlohmann::json;

std::ifstream open_input(const std::string& path, std::ios::openmode mode = std::ios::in) {
  std::ifstream in(path, mode);
  if (!in) throw ParseError(path + ": cannot open for reading");
  return in;
}

std::ofstream open_output(const std::string& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode);
  if (!out) throw ParseError(path + ": cannot open for writing");
  return out;
}

bool skip_line(const std::string& line) {
  for (const char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;  // blank
}

json load_json(const std::string& path) {
  auto in = open_input(path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return j;
}

void save_json(const std::string& path, const json& j) {
  auto out = open_output(path);
  out << j.dump(2) << "\n";
}

json gridspec_to_json(const GridSpec& spec) {
  return json{{"origin", {spec.origin_x, spec.origin_y}},
              {"width", spec.width},
              {"height", spec.height},
              {"resolution", spec.resolution}};
}

GridSpec gridspec_from_json(const json& j, const std::string& path) {
  GridSpec spec;
  try {
    spec.origin_x = j.at("origin").at(0).get<double>();
    spec.origin_y = j.at("origin").at(1).get<double>();
    spec.width = j.at("width").get<int>();
    spec.height = j.at("height").get<int>();
    spec.resolution = j.at("resolution").get<double>();
  } catch (const json::exception& e) {
    throw ParseError(path + ": bad grid spec: " + e.what());
  }
  if (!spec.valid()) throw ParseError(path + ": invalid grid spec values");
  return spec;
}

std::string sidecar_path(const std::string& pgm_path) {
  std::filesystem::path p(pgm_path);
  p.replace_extension(".json");
  return p.string();
}

void write_layer_csv(const std::string& path, const GridSpec& spec,
                     const std::function<std::optional<double>(int, int)>& value) {
  auto out = open_output(path);
  char buf[64];
  for (int iy = 0; iy < spec.height; ++iy) {
    std::string line;
    for (int ix = 0; ix < spec.width; ++ix) {
      if (ix) line += ',';
      const auto v = value(ix, iy);
      if (!v) {
        line += "nan";
      } else {
        std::snprintf(buf, sizeof(buf), "%.9g", *v);
        line += buf;
      }
    }
    out << line << "\n";
  }
}

std::vector<std::optional<double>> read_layer_csv(const std::string& path,
                                                  const GridSpec& spec) {
  auto in = open_input(path);
  std::vector<std::optional<double>> values;
  values.reserve(static_cast<std::size_t>(spec.cell_count()));
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() && static_cast<int>(values.size()) == spec.cell_count()) break;
    std::stringstream ss(line);
    std::string field;
    int col = 0;
    while (std::getline(ss, field, ',')) {
      ++col;
      if (field == "nan") {
        values.emplace_back(std::nullopt);
        continue;
      }
      try {
        values.emplace_back(std::stod(field));
      } catch (const std::exception&) {
        throw ParseError(path, line_no, "bad number '" + field + "'");
      }
    }
    if (col != spec.width) throw ParseError(path, line_no, "expected " +
                                            std::to_string(spec.width) + " columns");
  }
  if (static_cast<int>(values.size()) != spec.cell_count())
    throw ParseError(path + ": row count does not match the grid spec");
  return values;
}

std::uint32_t png_crc(const std::uint8_t* data, std::size_t len) {
  return static_cast<std::uint32_t>(crc32(0L, data, static_cast<uInt>(len)));
}

void png_chunk(std::ofstream& out, const char type[4], const std::vector<std::uint8_t>& data) {
  const auto be32 = [](std::uint32_t v) {
    return std::array<std::uint8_t, 4>{static_cast<std::uint8_t>(v >> 24),
                                       static_cast<std::uint8_t>(v >> 16),
                                       static_cast<std::uint8_t>(v >> 8),
                                       static_cast<std::uint8_t>(v)};
  };
  const auto len = be32(static_cast<std::uint32_t>(data.size()));
  out.write(reinterpret_cast<const char*>(len.data()), 4);
  std::vector<std::uint8_t> body(4 + data.size());
  std::memcpy(body.data(), type, 4);
  if (!data.empty()) std::memcpy(body.data() + 4, data.data(), data.size());
  out.write(reinterpret_cast<const char*>(body.data()), static_cast<std::streamsize>(body.size()));
  const auto crc = be32(png_crc(body.data(), body.size()));
  out.write(reinterpret_cast<const char*>(crc.data()), 4);
}

}  // namespace

std::vector<PointStamped> read_point_cloud(const std::string& path) {
  auto in = open_input(path);
  std::vector<PointStamped> points;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    std::istringstream ss(line);
    PointStamped p;
    if (!(ss >> p.t >> p.x >> p.y >> p.z))
      throw ParseError(path, line_no, "expected 't x y z'");
    std::string extra;
    if (ss >> extra) throw ParseError(path, line_no, "trailing data '" + extra + "'");
    points.push_back(p);
  }
  return points;
}

void write_point_cloud(const std::string& path, const std::vector<PointStamped>& points) {
  auto out = open_output(path);
  char buf[160];
  for (const auto& p : points) {
    std::snprintf(buf, sizeof(buf), "%.6f %.6f %.6f %.6f\n", p.t, p.x, p.y, p.z);
    out << buf;
  }
}

void write_pgm(const std::string& path, int width, int height,
               const std::vector<std::uint8_t>& bytes) {
  if (static_cast<std::size_t>(width) * height != bytes.size())
    throw ParseError(path + ": pixel buffer does not match dimensions");
  auto out = open_output(path, std::ios::out | std::ios::binary);
  out << "P5\n" << width << " " << height << "\n255\n";
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

void read_pgm(const std::string& path, int& width, int& height,
              std::vector<std::uint8_t>& bytes) {
  auto in = open_input(path, std::ios::in | std::ios::binary);
  std::string magic;
  in >> magic;
  if (magic != "P5") throw ParseError(path + ": not a binary PGM (P5)");
  const auto next_token = [&]() {
    std::string tok;
    while (in >> tok) {
      if (tok[0] == '#') {
        std::string rest;
        std::getline(in, rest);
        continue;
      }
      return tok;
    }
    throw ParseError(path + ": truncated header");
  };
  int maxval = 0;
  try {
    width = std::stoi(next_token());
    height = std::stoi(next_token());
    maxval = std::stoi(next_token());
  } catch (const std::exception&) {
    throw ParseError(path + ": malformed header");
  }
  if (width <= 0 || height <= 0 || maxval != 255)
    throw ParseError(path + ": unsupported dimensions or maxval");
  in.get();  // single whitespace after maxval
  bytes.resize(static_cast<std::size_t>(width) * height);
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (in.gcount() != static_cast<std::streamsize>(bytes.size()))
    throw ParseError(path + ": truncated pixel data");
}

LabelImage read_label_image(const std::string& path) {
  int w = 0, h = 0;
  std::vector<std::uint8_t> bytes;
  read_pgm(path, w, h, bytes);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    if (bytes[i] >= kNumSemanticClasses && bytes[i] != kUnlabeled)
      throw ParseError(path + ": pixel " + std::to_string(i) + " holds invalid class " +
                       std::to_string(bytes[i]));
  }
  LabelImage img(w, h);
  img.data() = std::move(bytes);
  return img;
}

void write_label_image(const std::string& path, const LabelImage& image) {
  write_pgm(path, image.width(), image.height(), image.data());
}

CameraCalibration read_camera_calibration(const std::string& path) {
  const json j = load_json(path);
  CameraCalibration calib;
  try {
    const auto k = j.at("K");
    const auto e = j.at("E");
    if (k.size() != 9 || e.size() != 16)
      throw ParseError(path + ": K must hold 9 values and E 16");
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) calib.camera.K(r, c) = k.at(r * 3 + c).get<double>();
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) calib.camera.E(r, c) = e.at(r * 4 + c).get<double>();
    calib.camera.width = j.at("width").get<int>();
    calib.camera.height = j.at("height").get<int>();
    if (j.contains("extrinsic_frame")) {
      const auto frame = j.at("extrinsic_frame").get<std::string>();
      if (frame == "robot") {
        calib.extrinsic_in_robot_frame = true;
      } else if (frame != "world") {
        throw ParseError(path + ": extrinsic_frame must be 'world' or 'robot'");
      }
    }
  } catch (const json::exception& ex) {
    throw ParseError(path + ": " + ex.what());
  }
  if (!calib.camera.valid())
    throw ParseError(path + ": calibration is not a valid pinhole setup "
                            "(K upper-triangular, E rigid)");
  return calib;
}

void write_camera_calibration(const std::string& path, const CameraModel& cam,
                              bool extrinsic_in_robot_frame) {
  json j;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) j["K"].push_back(cam.K(r, c));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) j["E"].push_back(cam.E(r, c));
  j["width"] = cam.width;
  j["height"] = cam.height;
  j["extrinsic_frame"] = extrinsic_in_robot_frame ? "robot" : "world";
  save_json(path, j);
}

std::vector<Pose> read_pose_stream(const std::string& path) {
  auto in = open_input(path);
  std::vector<Pose> poses;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    std::istringstream ss(line);
    Pose p;
    double qx, qy, qz, qw;
    if (!(ss >> p.stamp >> p.position.x() >> p.position.y() >> p.position.z() >> qx >> qy >>
          qz >> qw))
      throw ParseError(path, line_no, "expected 't x y z qx qy qz qw'");
    p.orientation = Eigen::Quaterniond(qw, qx, qy, qz);
    if (!p.normalized(1e-6))
      throw ParseError(path, line_no, "quaternion is not unit length");
    poses.push_back(p);
  }
  return poses;
}

void write_pose_stream(const std::string& path, const std::vector<Pose>& poses) {
  auto out = open_output(path);
  char buf[256];
  for (const auto& p : poses) {
    std::snprintf(buf, sizeof(buf), "%.6f %.6f %.6f %.6f %.9f %.9f %.9f %.9f\n", p.stamp,
                  p.position.x(), p.position.y(), p.position.z(), p.orientation.x(),
                  p.orientation.y(), p.orientation.z(), p.orientation.w());
    out << buf;
  }
}

std::vector<LabelFrameRef> read_label_manifest(const std::string& path) {
  auto in = open_input(path);
  const auto dir = std::filesystem::path(path).parent_path();
  std::vector<LabelFrameRef> refs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    std::istringstream ss(line);
    LabelFrameRef ref;
    std::string rel;
    if (!(ss >> ref.t >> rel)) throw ParseError(path, line_no, "expected 't path'");
    ref.path = (dir / rel).string();
    refs.push_back(ref);
  }
  return refs;
}

void write_map_dump(const std::string& dir, const ElevationGridMap& map) {
  std::filesystem::create_directories(dir);
  const auto& spec = map.spec();
  const auto path = [&](const char* name) {
    return (std::filesystem::path(dir) / name).string();
  };
  write_layer_csv(path("height.csv"), spec, [&](int ix, int iy) -> std::optional<double> {
    const Cell& c = map.at(ix, iy);
    if (c.empty()) return std::nullopt;
    return c.mean_height();
  });
  write_layer_csv(path("slope.csv"), spec,
                  [&](int ix, int iy) { return map.at(ix, iy).slope_deg; });
  write_layer_csv(path("step.csv"), spec,
                  [&](int ix, int iy) { return map.at(ix, iy).step_height; });
  write_layer_csv(path("roughness.csv"), spec,
                  [&](int ix, int iy) { return map.at(ix, iy).roughness; });
  write_layer_csv(path("traversability.csv"), spec,
                  [&](int ix, int iy) { return map.at(ix, iy).traversability; });
  save_json(path("gridspec.json"), gridspec_to_json(spec));
}

ElevationGridMap read_map_dump(const std::string& dir) {
  const auto path = [&](const char* name) {
    return (std::filesystem::path(dir) / name).string();
  };
  const auto spec = gridspec_from_json(load_json(path("gridspec.json")), path("gridspec.json"));
  ElevationGridMap map(spec);
  const auto heights = read_layer_csv(path("height.csv"), spec);
  const auto slopes = read_layer_csv(path("slope.csv"), spec);
  const auto steps = read_layer_csv(path("step.csv"), spec);
  const auto rough = read_layer_csv(path("roughness.csv"), spec);
  const auto trav = read_layer_csv(path("traversability.csv"), spec);
  for (int iy = 0; iy < spec.height; ++iy) {
    for (int ix = 0; ix < spec.width; ++ix) {
      const int flat = iy * spec.width + ix;
      Cell& c = map.at(ix, iy);
      if (heights[flat]) c.add_height(*heights[flat], 0.0, map.heights_per_cell());
      c.slope_deg = slopes[flat];
      c.step_height = steps[flat];
      c.roughness = rough[flat];
      c.traversability = trav[flat];
      if (trav[flat]) c.trav_source = TraversabilitySource::Geometric;
    }
  }
  return map;
}

void write_occupancy_pgm(const std::string& path, const OccupancyGrid& grid) {
  const auto& spec = grid.spec;
  std::vector<std::uint8_t> bytes(static_cast<std::size_t>(spec.cell_count()));
  for (int iy = 0; iy < spec.height; ++iy) {
    for (int ix = 0; ix < spec.width; ++ix) {
      std::uint8_t v = 205;
      switch (grid.at(ix, iy)) {
        case OccState::Free: v = 254; break;
        case OccState::Occupied: v = 0; break;
        case OccState::Unknown: v = 205; break;
      }
      bytes[static_cast<std::size_t>(spec.height - 1 - iy) * spec.width + ix] = v;
    }
  }
  write_pgm(path, spec.width, spec.height, bytes);
  json j = gridspec_to_json(spec);
  j["encoding"] = {{"free", 254}, {"occupied", 0}, {"unknown", 205}};
  save_json(sidecar_path(path), j);
}

OccupancyGrid read_occupancy_pgm(const std::string& path) {
  const auto side = sidecar_path(path);
  const auto spec = gridspec_from_json(load_json(side), side);
  int w = 0, h = 0;
  std::vector<std::uint8_t> bytes;
  read_pgm(path, w, h, bytes);
  if (w != spec.width || h != spec.height)
    throw ParseError(path + ": image dimensions disagree with the sidecar");
  OccupancyGrid grid;
  grid.spec = spec;
  grid.states.resize(bytes.size());
  for (int iy = 0; iy < h; ++iy) {
    for (int ix = 0; ix < w; ++ix) {
      const std::uint8_t v = bytes[static_cast<std::size_t>(h - 1 - iy) * w + ix];
      OccState s;
      if (v == 254) {
        s = OccState::Free;
      } else if (v == 0) {
        s = OccState::Occupied;
      } else if (v == 205) {
        s = OccState::Unknown;
      } else {
        throw ParseError(path + ": unexpected pixel value " + std::to_string(v));
      }
      grid.set(ix, iy, s);
    }
  }
  return grid;
}

void write_path_csv(const std::string& path, const std::vector<Pose2D>& poses) {
  auto out = open_output(path);
  char buf[128];
  for (const auto& p : poses) {
    std::snprintf(buf, sizeof(buf), "%.6f %.6f %.6f\n", p.x, p.y, p.theta);
    out << buf;
  }
}

std::vector<Pose2D> read_path_csv(const std::string& path) {
  auto in = open_input(path);
  std::vector<Pose2D> poses;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    std::istringstream ss(line);
    Pose2D p;
    if (!(ss >> p.x >> p.y >> p.theta)) throw ParseError(path, line_no, "expected 'x y theta'");
    poses.push_back(p);
  }
  return poses;
}

void write_png_rgb(const std::string& path, int width, int height,
                   const std::vector<std::uint8_t>& rgb) {
  if (static_cast<std::size_t>(width) * height * 3 != rgb.size())
    throw ParseError(path + ": pixel buffer does not match dimensions");

  // Raw scanlines, each prefixed with filter type 0.
  std::vector<std::uint8_t> raw(static_cast<std::size_t>(height) * (1 + width * 3));
  for (int y = 0; y < height; ++y) {
    auto* row = raw.data() + static_cast<std::size_t>(y) * (1 + width * 3);
    row[0] = 0;
    std::memcpy(row + 1, rgb.data() + static_cast<std::size_t>(y) * width * 3,
                static_cast<std::size_t>(width) * 3);
  }
  uLongf comp_len = compressBound(static_cast<uLong>(raw.size()));
  std::vector<std::uint8_t> compressed(comp_len);
  if (compress2(compressed.data(), &comp_len, raw.data(), static_cast<uLong>(raw.size()), 6) !=
      Z_OK)
    throw ParseError(path + ": zlib compression failed");
  compressed.resize(comp_len);

  auto out = open_output(path, std::ios::out | std::ios::binary);
  static const std::uint8_t sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
  out.write(reinterpret_cast<const char*>(sig), 8);

  std::vector<std::uint8_t> ihdr(13);
  const auto put32 = [](std::uint8_t* p, std::uint32_t v) {
    p[0] = static_cast<std::uint8_t>(v >> 24);
    p[1] = static_cast<std::uint8_t>(v >> 16);
    p[2] = static_cast<std::uint8_t>(v >> 8);
    p[3] = static_cast<std::uint8_t>(v);
  };
  put32(ihdr.data(), static_cast<std::uint32_t>(width));
  put32(ihdr.data() + 4, static_cast<std::uint32_t>(height));
  ihdr[8] = 8;   // bit depth
  ihdr[9] = 2;   // color type: RGB
  ihdr[10] = 0;  // compression
  ihdr[11] = 0;  // filter
  ihdr[12] = 0;  // interlace
  png_chunk(out, "IHDR", ihdr);
  png_chunk(out, "IDAT", compressed);
  png_chunk(out, "IEND", {});
}

void write_traversability_png(const std::string& path, const ElevationGridMap& map) {
  const auto& spec = map.spec();
  std::vector<std::uint8_t> rgb(static_cast<std::size_t>(spec.cell_count()) * 3);
  const int grey[3] = {128, 128, 128};
  const int green[3] = {40, 160, 40};
  for (int iy = 0; iy < spec.height; ++iy) {
    for (int ix = 0; ix < spec.width; ++ix) {
      const auto t = map.at(ix, iy).traversability;
      std::uint8_t c[3] = {30, 30, 30};  // absent
      if (t) {
        for (int k = 0; k < 3; ++k)
          c[k] = static_cast<std::uint8_t>(std::lround(grey[k] + *t * (green[k] - grey[k])));
      }
      const std::size_t px =
          (static_cast<std::size_t>(spec.height - 1 - iy) * spec.width + ix) * 3;
      rgb[px] = c[0];
      rgb[px + 1] = c[1];
      rgb[px + 2] = c[2];
    }
  }
  write_png_rgb(path, spec.width, spec.height, rgb);
}

}  // namespace travmap
