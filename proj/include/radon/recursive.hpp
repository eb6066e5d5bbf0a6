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
#include <cstddef>
#include <utility>
#include <vector>

#include "radon/chart.hpp"
#include "radon/hull.hpp"
#include "radon/hyperplane.hpp"
#include "radon/partition.hpp"
#include "radon/point.hpp"
#include "radon/predicates.hpp"

namespace radon {

/// One central projection through an apex: the separating hyperplane, its
/// chart, the projected (d-1)-dimensional configuration, and the label
/// bookkeeping connecting it back to the source instance.
struct ProjectionRecord {
  int apex = 0;               // label of the projection center
  Hyperplane hyperplane;      // strict separator of apex vs. the rest
  Chart chart;                // coordinates on the hyperplane
  PointSet projected;         // images of the non-apex points, dim d-1
  std::vector<int> label_map; // projected label k -> source label label_map[k-1]
};

/// The lift of one recursion step: the sub-instance witness raised back to
/// the hyperplane, and the two points where the ray from the apex through
/// it enters the two sub-partition hulls. y1 is the nearer hit, so y1 lies
/// on the segment from the apex to y2.
struct LiftTrace {
  Point sub_witness;           // lifted witness, on the hyperplane
  Point y1;                    // nearer ray hit
  Point y2;                    // farther ray hit
  Rational t_near;             // ray parameters of y1 and y2
  Rational t_far;
  std::vector<int> near_side;  // source-instance labels whose hull y1 hit
  std::vector<int> far_side;
};

/// Everything one recursion level did, with the instance it did it to.
struct LevelTrace {
  PointSet instance;
  ProjectionRecord projection;
  LiftTrace lift;
};

struct RecursiveResult {
  RadonCertificate certificate;
  std::vector<LevelTrace> levels;  // outermost first; empty in dimension 1
};

/// The projection center: label of the lexicographically largest point.
/// Distinct points make the maximum unique, and a coordinatewise maximum
/// is always a vertex of the convex hull, hence strictly separable.
inline int choose_apex(const PointSet& ps) {
  int best = 1;
  for (int l = 2; l <= ps.size(); ++l)
    if (ps.point(l) > ps.point(best)) best = l;
  return best;
}

/// Projects every non-apex point onto a separating hyperplane along its
/// segment to the apex and charts the images down to R^(d-1). The
/// projected configuration is verified to be in general position; a
/// failure (impossible for general-position input) is reported against
/// the source labels, apex included.
inline ProjectionRecord project_through_apex(const PointSet& ps, int apex) {
  if (ps.dim < 2) throw InvalidInputError("projection needs ambient dimension >= 2");
  Hyperplane h = separating_hyperplane(ps, apex);
  Chart chart = build_chart(h);
  const Point& apex_pt = ps.point(apex);

  std::vector<int> label_map;
  std::vector<Point> projected;
  for (int l = 1; l <= ps.size(); ++l) {
    if (l == apex) continue;
    const auto crossing = segment_hyperplane_intersection(apex_pt, ps.point(l), h);
    if (!crossing) throw Error("strict separation guarantees every segment crosses");
    projected.push_back(chart_down(chart, *crossing));
    label_map.push_back(l);
  }

  for (std::size_t i = 0; i < projected.size(); ++i)
    for (std::size_t j = i + 1; j < projected.size(); ++j)
      if (projected[i] == projected[j]) {
        std::vector<int> subset{label_map[i], label_map[j], apex};
        std::sort(subset.begin(), subset.end());
        throw DegenerateInputError("projections of points " + std::to_string(label_map[i]) +
                                       " and " + std::to_string(label_map[j]) + " coincide",
                                   subset);
      }

  PointSet sub(ps.dim - 1, std::move(projected));
  const GeneralPositionReport gp = check_general_position(sub);
  if (!gp.ok) {
    std::vector<int> source;
    source.reserve(gp.violating_subset.size() + 1);
    for (int k : gp.violating_subset) source.push_back(label_map[static_cast<std::size_t>(k - 1)]);
    source.push_back(apex);
    std::sort(source.begin(), source.end());
    throw DegenerateInputError("projected configuration lost general position", source);
  }
  return ProjectionRecord{apex, std::move(h), std::move(chart), std::move(sub),
                          std::move(label_map)};
}

namespace detail {

inline std::vector<Rational> membership_coefficients(const PointSet& ps, const Point& witness,
                                                     const std::vector<int>& side) {
  auto coeffs = hull_membership(witness, ps.points_of(side));
  if (!coeffs) throw Error("witness escaped the hull it was constructed in");
  return *coeffs;
}

inline RadonCertificate certificate_for(const PointSet& ps, const std::vector<int>& a,
                                        const std::vector<int>& b, Point witness) {
  RadonCertificate cert;
  cert.partition = Partition(a, b, ps.size());
  cert.coeffs_I = membership_coefficients(ps, witness, cert.partition.side_I);
  cert.coeffs_J = membership_coefficients(ps, witness, cert.partition.side_J);
  cert.witness = std::move(witness);
  return cert;
}

inline RadonCertificate radon_recursive_impl(const PointSet& ps,
                                             std::vector<LevelTrace>* trace) {
  const int d = ps.dim;
  if (ps.size() != d + 2)
    throw InvalidInputError("expected d+2 points in R^d, got " + std::to_string(ps.size()));
  require_general_position(ps);

  if (d == 1) {
    // Three points on a line: the two outer ones against the middle one.
    std::vector<int> order{1, 2, 3};
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return ps.point(a)[0] < ps.point(b)[0]; });
    return certificate_for(ps, {order[0], order[2]}, {order[1]}, ps.point(order[1]));
  }

  const int apex = choose_apex(ps);
  ProjectionRecord projection = project_through_apex(ps, apex);
  const RadonCertificate sub = radon_recursive_impl(projection.projected, trace);

  const auto pull_back = [&](const std::vector<int>& sub_side) {
    std::vector<int> out;
    out.reserve(sub_side.size());
    for (int k : sub_side) out.push_back(projection.label_map[static_cast<std::size_t>(k - 1)]);
    return out;
  };
  std::vector<int> side_a = pull_back(sub.partition.side_I);
  std::vector<int> side_b = pull_back(sub.partition.side_J);

  const Point lifted = chart_up(projection.chart, sub.witness);
  const Point& apex_pt = ps.point(apex);
  auto hit_a = ray_simplex_intersection(apex_pt, lifted, ps.points_of(side_a));
  auto hit_b = ray_simplex_intersection(apex_pt, lifted, ps.points_of(side_b));
  if (!hit_a || !hit_b) throw Error("ray through the lifted witness must meet both hulls");
  if (hit_a->t <= 0 || hit_b->t <= 0 || hit_a->t == hit_b->t)
    throw Error("ray parameters must be distinct and positive in general position");

#ifdef RADON_FAULT_INJECT
  const bool a_nearer = hit_a->t > hit_b->t;  // deliberately wrong comparison
#else
  const bool a_nearer = hit_a->t < hit_b->t;
#endif
  auto& near_hit = a_nearer ? *hit_a : *hit_b;
  auto& far_hit = a_nearer ? *hit_b : *hit_a;
  std::vector<int>& near_side = a_nearer ? side_a : side_b;
  std::vector<int>& far_side = a_nearer ? side_b : side_a;

  if (trace) {
    LiftTrace lift{lifted,     near_hit.point, far_hit.point, near_hit.t,
                   far_hit.t,  near_side,      far_side};
    trace->push_back(LevelTrace{ps, projection, std::move(lift)});
  }

  // The nearer hull meets the simplex spanned by the apex and the farther
  // side in exactly the near hit, which is therefore the witness.
  std::vector<int> with_apex = far_side;
  with_apex.push_back(apex);
  return certificate_for(ps, near_side, with_apex, near_hit.point);
}

}  // namespace detail

/// The dimension-reduction computation of the Radon certificate: separate
/// an apex, project the remaining points through it onto a hyperplane,
/// recurse one dimension down, lift the sub-witness back along a ray, and
/// attach the apex to the far side. Dimension 1 is solved directly.
inline RadonCertificate radon_recursive(const PointSet& ps) {
  return detail::radon_recursive_impl(ps, nullptr);
}

/// Same computation, returning the per-level projection and lift records
/// (outermost level first) alongside the certificate.
inline RecursiveResult radon_recursive_traced(const PointSet& ps) {
  RecursiveResult out;
  out.certificate = detail::radon_recursive_impl(ps, &out.levels);
  std::reverse(out.levels.begin(), out.levels.end());
  return out;
}

}  // namespace radon
