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
#include <utility>
#include <vector>

#include "radon/hyperplane.hpp"
#include "radon/point.hpp"

namespace radon {

/// Exact affine coordinates on a hyperplane h of R^d, identifying h with
/// R^(d-1). Built by eliminating one coordinate (the one with the largest
/// |normal| entry, lowest index on ties), so both chart maps are rational
/// and mutually inverse.
struct Chart {
  Hyperplane hyperplane;
  std::size_t dropped;          // eliminated coordinate index
  Point origin;                 // point on the hyperplane
  std::vector<Vec> basis;       // d-1 directions spanning the hyperplane
};

inline Chart build_chart(const Hyperplane& h) {
  const std::size_t d = static_cast<std::size_t>(h.dim());
  if (d < 2) throw InvalidInputError("charts need ambient dimension >= 2");
  std::size_t k = 0;
  for (std::size_t j = 1; j < d; ++j)
    if (abs(h.normal[j]) > abs(h.normal[k])) k = j;

  Vec origin(d, Rational(0));
  origin[k] = h.offset / h.normal[k];
  std::vector<Vec> basis;
  basis.reserve(d - 1);
  for (std::size_t j = 0; j < d; ++j) {
    if (j == k) continue;
    Vec e(d, Rational(0));
    e[j] = 1;
    e[k] = -h.normal[j] / h.normal[k];
    basis.push_back(std::move(e));
  }
  return Chart{h, k, Point(std::move(origin)), std::move(basis)};
}

/// Coordinates of a hyperplane point in the chart frame. The point must
/// satisfy the hyperplane equation exactly.
inline Point chart_down(const Chart& c, const Point& x) {
  if (x.dim() != c.hyperplane.dim())
    throw InvalidInputError("chart_down: point dimension mismatch");
  if (c.hyperplane.side(x) != 0)
    throw InvalidInputError("chart_down: point does not lie on the hyperplane");
  Vec y;
  y.reserve(x.coords.size() - 1);
  for (std::size_t j = 0; j < x.coords.size(); ++j)
    if (j != c.dropped) y.push_back(x.coords[j]);
  return Point(std::move(y));
}

/// Hyperplane point with the given chart coordinates.
inline Point chart_up(const Chart& c, const Point& y) {
  const std::size_t d = static_cast<std::size_t>(c.hyperplane.dim());
  if (y.coords.size() + 1 != d) throw InvalidInputError("chart_up: coordinate count mismatch");
  Vec x = c.origin.coords;
  for (std::size_t j = 0; j < c.basis.size(); ++j)
    for (std::size_t i = 0; i < d; ++i)
      if (c.basis[j][i] != 0) x[i] += y.coords[j] * c.basis[j][i];
  return Point(std::move(x));
}

}  // namespace radon
