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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "radon/linalg.hpp"
#include "radon/point.hpp"

namespace radon {

/// Orientation of d+1 points in R^d: the sign of the determinant of the
/// d x d matrix of edge vectors from the first point. Zero exactly when
/// the points are affinely dependent. Exact, no tolerance.
inline int orientation(std::span<const Point> simplex_points) {
  if (simplex_points.empty()) throw InvalidInputError("orientation of an empty tuple");
  const int d = simplex_points[0].dim();
  if (static_cast<int>(simplex_points.size()) != d + 1)
    throw InvalidInputError("orientation in R^" + std::to_string(d) + " needs exactly " +
                            std::to_string(d + 1) + " points, got " +
                            std::to_string(simplex_points.size()));
  for (const Point& p : simplex_points)
    if (p.dim() != d) throw InvalidInputError("orientation: point dimension mismatch");
  Matrix m(static_cast<std::size_t>(d));
  for (std::size_t i = 0; i + 1 < simplex_points.size(); ++i)
    m[i] = simplex_points[i + 1] - simplex_points[0];
  return sign(determinant(std::move(m)));
}

inline int orientation(const std::vector<Point>& simplex_points) {
  return orientation(std::span<const Point>(simplex_points));
}

/// Result of a general-position test; when the test fails, one violating
/// (d+1)-subset of labels is reported.
struct GeneralPositionReport {
  bool ok = false;
  std::vector<int> violating_subset;  // empty when ok
};

/// True iff every (d+1)-subset of the points is affinely independent.
/// On failure the first violating subset, in lexicographic label order,
/// is returned.
inline GeneralPositionReport check_general_position(const PointSet& ps) {
  const std::size_t n = ps.points.size();
  const std::size_t k = static_cast<std::size_t>(ps.dim) + 1;
  if (n < k) return {true, {}};
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<Point> subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = ps.points[idx[i]];
    if (orientation(subset) == 0) {
      std::vector<int> labels(k);
      for (std::size_t i = 0; i < k; ++i) labels[i] = static_cast<int>(idx[i]) + 1;
      return {false, labels};
    }
    // next k-combination of {0..n-1}, lexicographic
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return {true, {}};
}

inline bool is_general_position(const PointSet& ps) { return check_general_position(ps).ok; }

/// Throws DegenerateInputError naming the violating subset unless ps is
/// in general position.
inline void require_general_position(const PointSet& ps) {
  const GeneralPositionReport r = check_general_position(ps);
  if (r.ok) return;
  std::string msg = "points not in general position; affinely dependent subset {";
  for (std::size_t i = 0; i < r.violating_subset.size(); ++i)
    msg += (i ? "," : "") + std::to_string(r.violating_subset[i]);
  msg += "}";
  throw DegenerateInputError(msg, r.violating_subset);
}

}  // namespace radon
