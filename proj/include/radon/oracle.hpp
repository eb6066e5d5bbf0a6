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
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "radon/partition.hpp"
#include "radon/point.hpp"
#include "radon/simplex.hpp"

namespace radon {

/// How two convex hulls meet: not at all, in exactly one point, or in
/// more than one point.
enum class HullsIntersection { kEmpty, kSingle, kMulti };

struct HullsIntersectionInfo {
  HullsIntersection kind = HullsIntersection::kEmpty;
  std::optional<Point> point;  // set exactly when kind == kSingle
};

/// Classifies the intersection of conv(P) and conv(Q) exactly. Feasibility
/// of {sum lambda_i P_i = sum mu_j Q_j, both convex} decides emptiness;
/// when feasible, the intersection is a single point iff minimizing and
/// maximizing each coordinate of the common point agree. The test is
/// purely extensional: no general-position assumption is involved.
inline HullsIntersectionInfo hulls_intersection_info(const std::vector<Point>& p,
                                                     const std::vector<Point>& q) {
  if (p.empty() || q.empty()) throw InvalidInputError("hulls of empty point lists");
  const int dim = p[0].dim();
  for (const Point& pt : p)
    if (pt.dim() != dim) throw InvalidInputError("hull point dimension mismatch");
  for (const Point& pt : q)
    if (pt.dim() != dim) throw InvalidInputError("hull point dimension mismatch");

  const std::size_t d = static_cast<std::size_t>(dim);
  const std::size_t np = p.size(), nq = q.size();
  // Variables: lambda over P, then mu over Q.
  FeasibilitySystem sys;
  sys.a.assign(d + 2, std::vector<Rational>(np + nq, Rational(0)));
  sys.b.assign(d + 2, Rational(0));
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < np; ++i) sys.a[k][i] = p[i][k];
    for (std::size_t j = 0; j < nq; ++j) sys.a[k][np + j] = -q[j][k];
  }
  for (std::size_t i = 0; i < np; ++i) sys.a[d][i] = 1;
  sys.b[d] = 1;
  for (std::size_t j = 0; j < nq; ++j) sys.a[d + 1][np + j] = 1;
  sys.b[d + 1] = 1;

  SimplexSolver solver(sys);
  if (!solver.feasible()) return {HullsIntersection::kEmpty, std::nullopt};

  // Coordinate k of the common point is a linear functional of lambda.
  Vec coords(d);
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<Rational> objective(np + nq, Rational(0));
    for (std::size_t i = 0; i < np; ++i) objective[i] = p[i][k];
    LpResult lo = solver.optimize(objective, LpSense::kMinimize);
    LpResult hi = solver.optimize(objective, LpSense::kMaximize);
    if (lo.status != LpStatus::kOptimal || hi.status != LpStatus::kOptimal)
      throw Error("bounded intersection system reported unbounded");
    if (lo.value != hi.value) return {HullsIntersection::kMulti, std::nullopt};
    coords[k] = std::move(lo.value);
  }
  return {HullsIntersection::kSingle, Point(std::move(coords))};
}

/// Everything the exhaustive check learned about one instance: all Radon
/// partitions (single-point hull intersections) with their witnesses, and
/// how many bipartitions intersect at all.
struct OracleReport {
  PointSet instance;
  std::vector<std::pair<Partition, Point>> radon_partitions;
  int intersecting_partitions = 0;
};

/// Ground truth by enumeration: classifies every canonical bipartition of
/// the labels (label 1 pinned to the first side, 2^(n-1) - 1 candidates)
/// with hulls_intersection_info. No uniqueness is assumed; the report
/// simply lists what was found.
inline OracleReport brute_force_radon(const PointSet& ps) {
  const int n = ps.size();
  if (n < 2) throw InvalidInputError("bipartitions need at least two points");
  if (n > 24) throw InvalidInputError("enumeration capped at 24 points");

  OracleReport report{ps, {}, 0};
  const std::uint32_t masks = (1u << (n - 1)) - 1;  // all-ones mask would empty side J
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    std::vector<int> side_i{1}, side_j;
    for (int label = 2; label <= n; ++label) {
      if (mask >> (label - 2) & 1u) side_i.push_back(label);
      else side_j.push_back(label);
    }
    const HullsIntersectionInfo info =
        hulls_intersection_info(ps.points_of(side_i), ps.points_of(side_j));
    if (info.kind != HullsIntersection::kEmpty) ++report.intersecting_partitions;
    if (info.kind == HullsIntersection::kSingle)
      report.radon_partitions.emplace_back(Partition(side_i, side_j, n), *info.point);
  }
  std::sort(report.radon_partitions.begin(), report.radon_partitions.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return report;
}

}  // namespace radon
