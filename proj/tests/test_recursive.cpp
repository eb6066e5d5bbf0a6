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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstddef>
#include <vector>

#include "radon/algebraic.hpp"
#include "radon/generate.hpp"
#include "radon/hull.hpp"
#include "radon/prng.hpp"
#include "radon/recursive.hpp"

using radon::LevelTrace;
using radon::Partition;
using radon::Point;
using radon::PointSet;
using radon::ProjectionRecord;
using radon::RadonCertificate;
using radon::Rational;
using radon::RecursiveResult;
using radon::Vec;

namespace {

Rational q(long long n, long long d = 1) {
  return Rational(radon::Integer(n), radon::Integer(d));
}

// Ray parameter of `p` on the ray apex -> dir, recovered from the first
// coordinate where dir is nonzero; requires p to lie on the ray.
Rational ray_parameter(const Point& apex, const Vec& dir, const Point& p) {
  for (std::size_t k = 0; k < dir.size(); ++k)
    if (dir[k] != 0) return (p[k] - apex[k]) / dir[k];
  throw radon::InvalidInputError("zero direction");
}

void check_projection(const PointSet& ps, const ProjectionRecord& rec) {
  const Point& apex_pt = ps.point(rec.apex);
  REQUIRE(rec.projected.dim == ps.dim - 1);
  REQUIRE(rec.projected.size() == ps.size() - 1);
  REQUIRE(static_cast<int>(rec.label_map.size()) == ps.size() - 1);
  REQUIRE(radon::check_general_position(rec.projected).ok);
  REQUIRE(rec.hyperplane.evaluate(apex_pt) > 0);
  for (int k = 1; k <= rec.projected.size(); ++k) {
    const int src = rec.label_map[static_cast<std::size_t>(k - 1)];
    REQUIRE(src != rec.apex);
    REQUIRE(rec.hyperplane.evaluate(ps.point(src)) < 0);
    // The chart image lifts back onto the open segment apex -> source.
    const Point lifted = radon::chart_up(rec.chart, rec.projected.point(k));
    REQUIRE(rec.hyperplane.evaluate(lifted) == 0);
    const Vec dir = ps.point(src) - apex_pt;
    const Rational t = ray_parameter(apex_pt, dir, lifted);
    REQUIRE(t > 0);
    REQUIRE(t < 1);
    REQUIRE(lifted == radon::translated(apex_pt, dir, t));
  }
}

}  // namespace

TEST_CASE("apex is the lexicographically largest point") {
  const PointSet ps(2, {Point{q(2), q(0)}, Point{q(0), q(5)}, Point{q(2), q(3)},
                        Point{q(1), q(1)}});
  CHECK(radon::choose_apex(ps) == 3);

  const PointSet line(1, {Point{q(0)}, Point{q(7)}, Point{q(2)}});
  CHECK(radon::choose_apex(line) == 2);
}

TEST_CASE("dimension one isolates the middle point") {
  const PointSet ps(1, {Point{q(0)}, Point{q(1)}, Point{q(2)}});
  const RadonCertificate cert = radon::radon_recursive(ps);
  CHECK(cert.partition == Partition({1, 3}, {2}, 3));
  CHECK(cert.witness == Point{q(1)});
  CHECK(radon::certificate_valid(ps, cert));

  // Labels follow the geometry, not the input order.
  const PointSet scrambled(1, {Point{q(5)}, Point{q(-1)}, Point{q(2)}});
  const RadonCertificate cert2 = radon::radon_recursive(scrambled);
  CHECK(cert2.partition == Partition({1, 2}, {3}, 3));
  CHECK(cert2.witness == Point{q(2)});
}

TEST_CASE("random one-dimensional instances isolate the middle point") {
  radon::SplitMix64 rng(83);
  for (int k = 0; k < 40; ++k) {
    const PointSet ps = radon::generate_instance(1, rng.next(), 50).instance;
    const RadonCertificate cert = radon::radon_recursive(ps);
    std::vector<int> order{1, 2, 3};
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return ps.point(a)[0] < ps.point(b)[0]; });
    // Outer pair against the middle point; canonicalization decides which
    // side is which when label 1 is the middle.
    REQUIRE(cert.partition == Partition({order[0], order[2]}, {order[1]}, 3));
    REQUIRE(cert.witness == ps.point(order[1]));
  }
}

TEST_CASE("projection through the apex of a planar instance") {
  const PointSet ps(2, {Point{q(0), q(0)}, Point{q(2), q(0)}, Point{q(0), q(2)},
                        Point{q(3), q(3)}});
  REQUIRE(radon::choose_apex(ps) == 4);
  const ProjectionRecord rec = radon::project_through_apex(ps, 4);
  CHECK(rec.apex == 4);
  CHECK(rec.label_map == std::vector<int>{1, 2, 3});
  check_projection(ps, rec);
}

TEST_CASE("projection rejects too-low ambient dimension") {
  const PointSet ps(1, {Point{q(0)}, Point{q(1)}, Point{q(2)}});
  CHECK_THROWS_AS(radon::project_through_apex(ps, 3), radon::InvalidInputError);
}

TEST_CASE("frozen three-dimensional instance, fully traced") {
  const PointSet ps(3, {Point{q(-3), q(0), q(0)}, Point{q(0), q(-2), q(1)},
                        Point{q(0), q(3), q(1)}, Point{q(3), q(0), q(0)},
                        Point{q(4), q(0), q(3)}});
  REQUIRE(radon::choose_apex(ps) == 5);
  const RecursiveResult res = radon::radon_recursive_traced(ps);
  CHECK(res.certificate.partition == Partition({1, 4, 5}, {2, 3}, 5));
  CHECK(res.certificate.witness == Point{q(0), q(0), q(1)});
  CHECK(res.certificate.coeffs_I == std::vector<Rational>{q(5, 9), q(1, 9), q(1, 3)});
  CHECK(res.certificate.coeffs_J == std::vector<Rational>{q(3, 5), q(2, 5)});
  CHECK(radon::certificate_valid(ps, res.certificate));

  // Depth is exactly d-1, outermost level first.
  REQUIRE(res.levels.size() == 2);
  CHECK(res.levels[0].instance.size() == 5);
  CHECK(res.levels[0].projection.apex == 5);
  CHECK(res.levels[1].instance.size() == 4);
}

TEST_CASE("traced runs satisfy the step invariants") {
  radon::SplitMix64 rng(89);
  for (int dim = 2; dim <= 5; ++dim) {
    for (int k = 0; k < 6; ++k) {
      const PointSet ps = radon::generate_instance(dim, rng.next(), 9).instance;
      const RecursiveResult res = radon::radon_recursive_traced(ps);
      REQUIRE(res.levels.size() == static_cast<std::size_t>(dim - 1));
      REQUIRE(radon::certificate_valid(ps, res.certificate));
      REQUIRE(res.certificate == radon::radon_recursive(ps));

      for (const LevelTrace& level : res.levels) {
        const PointSet& inst = level.instance;
        REQUIRE(level.projection.apex == radon::choose_apex(inst));
        check_projection(inst, level.projection);

        // The ray from the apex through the lifted witness hits both
        // sub-hulls at distinct positive parameters, nearer one first.
        const Point& apex_pt = inst.point(level.projection.apex);
        REQUIRE(level.projection.hyperplane.evaluate(level.lift.sub_witness) == 0);
        const Vec dir = level.lift.sub_witness - apex_pt;
        REQUIRE(level.lift.t_near > 0);
        REQUIRE(level.lift.t_near < level.lift.t_far);
        REQUIRE(level.lift.y1 == radon::translated(apex_pt, dir, level.lift.t_near));
        REQUIRE(level.lift.y2 == radon::translated(apex_pt, dir, level.lift.t_far));
        REQUIRE(radon::hull_membership(level.lift.y1, inst.points_of(level.lift.near_side))
                    .has_value());
        REQUIRE(radon::hull_membership(level.lift.y2, inst.points_of(level.lift.far_side))
                    .has_value());
      }

      // The outermost witness is the nearer hit of the outermost lift.
      REQUIRE(res.certificate.witness == res.levels.front().lift.y1);
    }
  }
}

TEST_CASE("recursive and algebraic methods give the same partition") {
  radon::SplitMix64 rng(97);
  for (int dim = 1; dim <= 5; ++dim) {
    for (int k = 0; k < 8; ++k) {
      const PointSet ps = radon::generate_instance(dim, rng.next(), 9).instance;
      const RadonCertificate rec = radon::radon_recursive(ps);
      const RadonCertificate alg = radon::radon_algebraic(ps);
      REQUIRE(rec.partition == alg.partition);
      REQUIRE(rec.witness == alg.witness);
      REQUIRE(rec.coeffs_I == alg.coeffs_I);
      REQUIRE(rec.coeffs_J == alg.coeffs_J);
    }
  }
}

TEST_CASE("partition is stable under affine maps") {
  radon::SplitMix64 rng(101);
  for (int dim = 2; dim <= 4; ++dim) {
    const PointSet ps = radon::generate_instance(dim, rng.next(), 9).instance;
    const RadonCertificate before = radon::radon_recursive(ps);

    // Shear plus translation; the apex choice may change, the partition
    // cannot.
    std::vector<Point> mapped;
    for (const Point& p : ps.points) {
      Vec out(static_cast<std::size_t>(dim));
      for (std::size_t c = 0; c < out.size(); ++c) out[c] = p[c] + q(3) * p[0] - q(7);
      out[0] = p[0] - q(7);
      mapped.emplace_back(std::move(out));
    }
    const PointSet transformed(dim, mapped);
    const RadonCertificate after = radon::radon_recursive(transformed);
    REQUIRE(after.partition == before.partition);
  }
}

TEST_CASE("degenerate input is rejected with the offending subset") {
  const PointSet ps(2, {Point{q(0), q(0)}, Point{q(1), q(1)}, Point{q(2), q(2)},
                        Point{q(0), q(7)}});
  bool thrown = false;
  try {
    radon::radon_recursive(ps);
  } catch (const radon::DegenerateInputError& e) {
    thrown = true;
    CHECK(e.violating_subset == std::vector<int>{1, 2, 3});
  }
  CHECK(thrown);

  CHECK_THROWS_AS(radon::radon_recursive(PointSet(2, {Point{q(0), q(0)}, Point{q(1), q(0)},
                                                      Point{q(0), q(1)}})),
                  radon::InvalidInputError);
}
