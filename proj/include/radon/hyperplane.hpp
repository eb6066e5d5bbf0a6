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

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "radon/point.hpp"
#include "radon/simplex.hpp"

namespace radon {

/// The affine hyperplane {x : normal . x = offset} in R^d.
struct Hyperplane {
  Vec normal;
  Rational offset;

  Hyperplane(Vec n, Rational c) : normal(std::move(n)), offset(std::move(c)) {
    if (std::all_of(normal.begin(), normal.end(), [](const Rational& q) { return q == 0; }))
      throw InvalidInputError("hyperplane normal must be nonzero");
  }

  int dim() const { return static_cast<int>(normal.size()); }

  /// Signed side of a point: +1 above, -1 below, 0 on the hyperplane.
  int side(const Point& p) const {
    if (p.dim() != dim()) throw InvalidInputError("hyperplane/point dimension mismatch");
    return sign(dot(normal, p.coords) - offset);
  }

  Rational evaluate(const Point& p) const { return dot(normal, p.coords) - offset; }
};

/// The unique point of the open segment (a, b) on h, exact, when a and b
/// lie strictly on opposite sides; absent otherwise (including the cases
/// where an endpoint sits on h).
inline std::optional<Point> segment_hyperplane_intersection(const Point& a, const Point& b,
                                                            const Hyperplane& h) {
  if (a.dim() != b.dim() || a.dim() != h.dim())
    throw InvalidInputError("segment/hyperplane dimension mismatch");
  const Rational sa = h.evaluate(a);
  const Rational sb = h.evaluate(b);
  if (sign(sa) * sign(sb) >= 0) return std::nullopt;
  const Rational t = sa / (sa - sb);  // in (0, 1) by the strict sign condition
  return translated(a, b - a, t);
}

/// A hyperplane strictly separating the apex point from every other point
/// of the set: normal . apex > offset and normal . other < offset. Built
/// by solving the feasibility system normal . (apex - other) >= 1 with the
/// exact simplex and splitting the offset halfway between the apex and the
/// nearest other point. Throws DegenerateInputError when no strict
/// separator exists, i.e. the apex is not a vertex of the convex hull.
inline Hyperplane separating_hyperplane(const PointSet& ps, int apex) {
  const std::size_t d = static_cast<std::size_t>(ps.dim);
  const Point& apex_pt = ps.point(apex);
  std::vector<const Point*> others;
  for (int l = 1; l <= ps.size(); ++l)
    if (l != apex) others.push_back(&ps.point(l));
  if (others.empty()) throw InvalidInputError("separation needs at least two points");

  // Variables: u (d), v (d), surplus s (one per other point); w = u - v.
  const std::size_t m = others.size();
  FeasibilitySystem sys;
  sys.a.assign(m, std::vector<Rational>(2 * d + m, Rational(0)));
  sys.b.assign(m, Rational(1));
  for (std::size_t i = 0; i < m; ++i) {
    const Vec diff = apex_pt - *others[i];
    for (std::size_t k = 0; k < d; ++k) {
      sys.a[i][k] = diff[k];
      sys.a[i][d + k] = -diff[k];
    }
    sys.a[i][2 * d + i] = -1;
  }
  const auto sol = lp_feasible(sys);
  if (!sol)
    throw DegenerateInputError("point " + std::to_string(apex) +
                               " is not strictly separable (not a hull vertex)");
  Vec normal(d);
  for (std::size_t k = 0; k < d; ++k) normal[k] = (*sol)[k] - (*sol)[d + k];

  Rational apex_value = dot(normal, apex_pt.coords);
  Rational max_other = dot(normal, others[0]->coords);
  for (std::size_t i = 1; i < m; ++i)
    max_other = std::max(max_other, dot(normal, others[i]->coords));
  Hyperplane h(std::move(normal), (apex_value + max_other) / 2);
  if (h.side(apex_pt) <= 0) throw Error("separating hyperplane failed its own post-condition");
  for (const Point* p : others)
    if (h.side(*p) >= 0) throw Error("separating hyperplane failed its own post-condition");
  return h;
}

}  // namespace radon
