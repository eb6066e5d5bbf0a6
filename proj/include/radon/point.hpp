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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "radon/error.hpp"
#include "radon/rational.hpp"

namespace radon {

/// Coordinate vector used for points and directions alike.
using Vec = std::vector<Rational>;

/// A point of R^d with exact rational coordinates, d >= 1.
struct Point {
  Vec coords;

  Point() = default;
  explicit Point(Vec c) : coords(std::move(c)) {
    if (coords.empty()) throw InvalidInputError("point needs at least one coordinate");
  }
  Point(std::initializer_list<Rational> c) : Point(Vec(c)) {}

  int dim() const { return static_cast<int>(coords.size()); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

inline Vec operator-(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw InvalidInputError("point dimension mismatch");
  Vec out(a.coords.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coords[i] - b.coords[i];
  return out;
}

inline Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InvalidInputError("vector dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec scaled(const Vec& v, const Rational& c) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

inline Point translated(const Point& p, const Vec& v, const Rational& t) {
  if (static_cast<std::size_t>(p.dim()) != v.size())
    throw InvalidInputError("vector dimension mismatch");
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = p.coords[i] + t * v[i];
  return Point(std::move(out));
}

inline std::string to_string(const Point& p) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < p.dim(); ++i) os << (i ? ", " : "") << to_string(p[i]);
  os << ")";
  return os.str();
}

/// A labeled configuration of n pairwise-distinct points in R^d.
/// Labels are the 1-based positions 1..n; every query and report in the
/// library speaks in these labels.
struct PointSet {
  int dim = 0;
  std::vector<Point> points;

  PointSet() = default;
  PointSet(int d, std::vector<Point> pts) : dim(d), points(std::move(pts)) {
    if (dim < 1) throw InvalidInputError("dimension must be >= 1");
    if (points.empty()) throw InvalidInputError("point set must be nonempty");
    for (const Point& p : points)
      if (p.dim() != dim)
        throw InvalidInputError("point dimension " + std::to_string(p.dim()) +
                                " does not match ambient dimension " + std::to_string(dim));
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = i + 1; j < points.size(); ++j)
        if (points[i] == points[j])
          throw InvalidInputError("points " + std::to_string(i + 1) + " and " +
                                  std::to_string(j + 1) + " coincide");
  }

  int size() const { return static_cast<int>(points.size()); }

  /// Point by 1-based label.
  const Point& point(int label) const {
    if (label < 1 || label > size())
      throw InvalidInputError("label " + std::to_string(label) + " out of range");
    return points[static_cast<std::size_t>(label - 1)];
  }

  std::vector<Point> points_of(const std::vector<int>& labels) const {
    std::vector<Point> out;
    out.reserve(labels.size());
    for (int l : labels) out.push_back(point(l));
    return out;
  }

  friend bool operator==(const PointSet&, const PointSet&) = default;
};

}  // namespace radon
