// Copyright 2026 The RadonKit Authors
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

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "radon/error.hpp"
#include "radon/partition.hpp"
#include "radon/point.hpp"
#include "radon/rational.hpp"

namespace radon {

/// On-disk instance document. `meta` is free-form provenance (seed,
/// generator parameters); it is carried along but never interpreted.
struct InstanceFile {
  PointSet instance;
  nlohmann::json meta;  // null when absent

  InstanceFile(PointSet ps, nlohmann::json m = nullptr)
      : instance(std::move(ps)), meta(std::move(m)) {}
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw ParseError("cannot read file: " + path);
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open file for writing: " + path);
  out << text;
  out.flush();
  if (!out) throw Error("cannot write file: " + path);
}

namespace detail {

/// Object keys sorted recursively; arrays and scalars pass through.
/// nlohmann::json already stores objects in a std::map, so converting a
/// whole tree suffices, but meta may arrive as ordered_json from a parse.
inline nlohmann::ordered_json canonical_json(const nlohmann::json& j) {
  if (j.is_object()) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [key, value] : j.items()) {
      out[key] = canonical_json(value);
    }
    return out;
  }
  if (j.is_array()) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& value : j) out.push_back(canonical_json(value));
    return out;
  }
  return j;
}

inline nlohmann::ordered_json coords_json(const Point& p) {
  nlohmann::ordered_json row = nlohmann::ordered_json::array();
  for (const Rational& q : p.coords) row.push_back(to_string(q));
  return row;
}

inline nlohmann::ordered_json labels_json(const std::vector<int>& labels) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (int label : labels) out.push_back(label);
  return out;
}

inline nlohmann::ordered_json rationals_json(const std::vector<Rational>& qs) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const Rational& q : qs) out.push_back(to_string(q));
  return out;
}

inline nlohmann::ordered_json partition_json(const Partition& p) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  out.push_back(labels_json(p.side_I));
  out.push_back(labels_json(p.side_J));
  return out;
}

inline nlohmann::ordered_json certificate_json(const RadonCertificate& cert) {
  nlohmann::ordered_json root;
  root["partition"] = partition_json(cert.partition);
  root["witness"] = rationals_json(cert.witness.coords);
  root["coeffs_I"] = rationals_json(cert.coeffs_I);
  root["coeffs_J"] = rationals_json(cert.coeffs_J);
  return root;
}

}  // namespace detail

/// Canonical bytes of an instance document: fixed key order (dim,
/// points, meta), meta keys sorted at every depth, two-space indent,
/// one trailing newline. parse -> emit is the identity on these bytes.
inline std::string emit_instance(const InstanceFile& file) {
  nlohmann::ordered_json root;
  root["dim"] = file.instance.dim;
  nlohmann::ordered_json pts = nlohmann::ordered_json::array();
  for (const Point& p : file.instance.points) {
    pts.push_back(detail::coords_json(p));
  }
  root["points"] = pts;
  if (!file.meta.is_null()) {
    root["meta"] = detail::canonical_json(file.meta);
  }
  return root.dump(2) + "\n";
}

inline InstanceFile parse_instance_text(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("instance document must be a JSON object");
  for (const auto& [key, value] : root.items()) {
    (void)value;
    if (key != "dim" && key != "points" && key != "meta") {
      throw ParseError("unknown key in instance document: " + key);
    }
  }
  if (!root.contains("dim") || !root["dim"].is_number_integer()) {
    throw ParseError("instance document needs an integer \"dim\"");
  }
  const long long dim = root["dim"].get<long long>();
  if (dim < 1 || dim > 32) throw ParseError("\"dim\" out of range [1, 32]");
  if (!root.contains("points") || !root["points"].is_array()) {
    throw ParseError("instance document needs a \"points\" array");
  }
  std::vector<Point> points;
  for (const auto& row : root["points"]) {
    if (!row.is_array()) throw ParseError("each point must be an array of rational strings");
    Vec coords;
    for (const auto& cell : row) {
      if (!cell.is_string()) throw ParseError("coordinates must be rational strings");
      coords.push_back(rational_from_string(cell.get<std::string>()));
    }
    points.push_back(Point{std::move(coords)});
  }
  nlohmann::json meta = nullptr;
  if (root.contains("meta")) {
    if (!root["meta"].is_object()) throw ParseError("\"meta\" must be a JSON object");
    meta = root["meta"];
  }
  return InstanceFile(PointSet(static_cast<int>(dim), std::move(points)), std::move(meta));
}

inline InstanceFile load_instance(const std::string& path) {
  return parse_instance_text(read_file(path));
}

/// FNV-1a, 64-bit. Stable across platforms; used only to fingerprint
/// canonical instance bytes in reports.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Fingerprint of the geometry alone: meta is excluded, so regenerating
/// an instance with different provenance keeps the same digest.
inline std::string instance_digest(const PointSet& ps) {
  const std::string bytes = emit_instance(InstanceFile(ps));
  const std::uint64_t h = fnv1a64(bytes);
  std::ostringstream out;
  out << std::hex << std::setfill('0') << std::setw(16) << h;
  return out.str();
}

inline std::string emit_certificate(const RadonCertificate& cert) {
  return detail::certificate_json(cert).dump(2) + "\n";
}

inline RadonCertificate parse_certificate_text(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("certificate document must be a JSON object");
  const auto labels = [](const nlohmann::json& arr) {
    std::vector<int> out;
    for (const auto& cell : arr) {
      if (!cell.is_number_integer()) throw ParseError("labels must be integers");
      out.push_back(cell.get<int>());
    }
    return out;
  };
  const auto rationals = [&root](const char* key) {
    if (!root.contains(key) || !root[key].is_array()) {
      throw ParseError(std::string("certificate needs a \"") + key + "\" array");
    }
    Vec out;
    for (const auto& cell : root[key]) {
      if (!cell.is_string()) throw ParseError("expected rational strings");
      out.push_back(rational_from_string(cell.get<std::string>()));
    }
    return out;
  };
  if (!root.contains("partition") || !root["partition"].is_array() ||
      root["partition"].size() != 2 || !root["partition"][0].is_array() ||
      !root["partition"][1].is_array()) {
    throw ParseError("certificate needs a \"partition\" pair of label arrays");
  }
  const std::vector<int> side_I = labels(root["partition"][0]);
  const std::vector<int> side_J = labels(root["partition"][1]);
  const int total = static_cast<int>(side_I.size() + side_J.size());
  RadonCertificate cert{Partition(side_I, side_J, total), Point{rationals("witness")},
                        rationals("coeffs_I"), rationals("coeffs_J")};
  return cert;
}

}  // namespace radon
