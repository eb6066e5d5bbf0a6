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

#include <optional>
#include <utility>
#include <vector>

#include "radon/point.hpp"
#include "radon/simplex.hpp"

namespace radon {

/// Constraint system for "x is a convex combination of the generators":
/// one row per coordinate plus the sum-to-one row, generators as columns.
inline FeasibilitySystem convex_membership_system(const Point& x,
                                                  const std::vector<Point>& generators) {
  if (generators.empty()) throw InvalidInputError("hull of an empty generator list");
  const std::size_t d = static_cast<std::size_t>(x.dim());
  for (const Point& g : generators)
    if (g.dim() != x.dim()) throw InvalidInputError("hull generators dimension mismatch");
  FeasibilitySystem sys;
  sys.a.assign(d + 1, std::vector<Rational>(generators.size(), Rational(0)));
  sys.b.assign(d + 1, Rational(0));
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < generators.size(); ++i) sys.a[k][i] = generators[i][k];
    sys.b[k] = x[k];
  }
  for (std::size_t i = 0; i < generators.size(); ++i) sys.a[d][i] = 1;
  sys.b[d] = 1;
  return sys;
}

/// Barycentric coefficients putting x in the convex hull of the
/// generators (nonnegative, summing to one, reproducing x exactly), or
/// absent when x lies outside. Decided by exact phase-1 simplex.
inline std::optional<std::vector<Rational>> hull_membership(
    const Point& x, const std::vector<Point>& generators) {
  return lp_feasible(convex_membership_system(x, generators));
}

/// Intersection of the ray origin + t (through - origin), t >= 0, with a
/// convex hull: the hull point of minimal ray parameter.
struct RayHit {
  Rational t;
  Point point;
  std::vector<Rational> coefficients;  // barycentric, over the generators
};

/// First point where the ray from origin through `through` meets the
/// convex hull of the generators, found by minimizing the ray parameter
/// subject to exact membership constraints; absent when the ray misses.
/// If the origin itself lies in the hull the hit has t = 0.
inline std::optional<RayHit> ray_simplex_intersection(const Point& origin, const Point& through,
                                                      const std::vector<Point>& generators) {
  if (origin == through) throw InvalidInputError("ray needs two distinct points");
  if (origin.dim() != through.dim())
    throw InvalidInputError("ray endpoints dimension mismatch");
  if (generators.empty()) throw InvalidInputError("hull of an empty generator list");
  for (const Point& g : generators)
    if (g.dim() != origin.dim()) throw InvalidInputError("hull generators dimension mismatch");

  const std::size_t d = static_cast<std::size_t>(origin.dim());
  const std::size_t m = generators.size();
  const Vec dir = through - origin;
  // Variables: lambda (m), then t.
  FeasibilitySystem sys;
  sys.a.assign(d + 1, std::vector<Rational>(m + 1, Rational(0)));
  sys.b.assign(d + 1, Rational(0));
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < m; ++i) sys.a[k][i] = generators[i][k];
    sys.a[k][m] = -dir[k];
    sys.b[k] = origin[k];
  }
  for (std::size_t i = 0; i < m; ++i) sys.a[d][i] = 1;
  sys.b[d] = 1;

  std::vector<Rational> objective(m + 1, Rational(0));
  objective[m] = 1;
  LpResult res = lp_optimize(sys, objective, LpSense::kMinimize);
  if (res.status == LpStatus::kInfeasible) return std::nullopt;
  if (res.status != LpStatus::kOptimal) throw Error("ray parameter cannot be unbounded below");
  std::vector<Rational> coeffs(res.solution.begin(), res.solution.begin() + static_cast<std::ptrdiff_t>(m));
  Point hit = translated(origin, dir, res.value);
  return RayHit{std::move(res.value), std::move(hit), std::move(coeffs)};
}

}  // namespace radon
