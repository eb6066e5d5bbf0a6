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

#include <cstddef>
#include <vector>

#include "radon/algebraic.hpp"
#include "radon/generate.hpp"
#include "radon/hull.hpp"
#include "radon/oracle.hpp"
#include "radon/prng.hpp"

using radon::HullsIntersection;
using radon::HullsIntersectionInfo;
using radon::OracleReport;
using radon::Partition;
using radon::Point;
using radon::PointSet;
using radon::Rational;

namespace {

Rational q(long long n, long long d = 1) {
  return Rational(radon::Integer(n), radon::Integer(d));
}

}  // namespace

TEST_CASE("crossing diagonals meet in one point") {
  const std::vector<Point> a = {Point{q(0), q(0)}, Point{q(2), q(2)}};
  const std::vector<Point> b = {Point{q(0), q(2)}, Point{q(2), q(0)}};
  const HullsIntersectionInfo info = radon::hulls_intersection_info(a, b);
  REQUIRE(info.kind == HullsIntersection::kSingle);
  REQUIRE(info.point.has_value());
  CHECK(*info.point == Point{q(1), q(1)});
}

TEST_CASE("disjoint hulls are classified empty") {
  const std::vector<Point> a = {Point{q(0), q(0)}, Point{q(1), q(0)}};
  const std::vector<Point> b = {Point{q(3), q(0)}, Point{q(4), q(1)}};
  const HullsIntersectionInfo info = radon::hulls_intersection_info(a, b);
  CHECK(info.kind == HullsIntersection::kEmpty);
  CHECK_FALSE(info.point.has_value());
}

TEST_CASE("overlapping collinear segments meet in many points") {
  const std::vector<Point> a = {Point{q(0)}, Point{q(2)}};
  const std::vector<Point> b = {Point{q(1)}, Point{q(3)}};
  CHECK(radon::hulls_intersection_info(a, b).kind == HullsIntersection::kMulti);

  // Touching at a single shared endpoint is still a single point.
  const std::vector<Point> c = {Point{q(2)}, Point{q(3)}};
  const HullsIntersectionInfo touch =
      radon::hulls_intersection_info(a, c);
  REQUIRE(touch.kind == HullsIntersection::kSingle);
  CHECK(*touch.point == Point{q(2)});
}

TEST_CASE("classification is symmetric in its arguments") {
  radon::SplitMix64 rng(103);
  for (int k = 0; k < 30; ++k) {
    const int dim = 1 + static_cast<int>(rng.next_below(3));
    const auto random_points = [&](std::size_t count) {
      std::vector<Point> pts;
      for (std::size_t i = 0; i < count; ++i) {
        radon::Vec coords(static_cast<std::size_t>(dim));
        for (Rational& c : coords) c = q(rng.next_in_range(-4, 4));
        pts.emplace_back(std::move(coords));
      }
      return pts;
    };
    const std::vector<Point> a = random_points(1 + rng.next_below(3));
    const std::vector<Point> b = random_points(1 + rng.next_below(3));
    const HullsIntersectionInfo ab = radon::hulls_intersection_info(a, b);
    const HullsIntersectionInfo ba = radon::hulls_intersection_info(b, a);
    REQUIRE(ab.kind == ba.kind);
    if (ab.kind == HullsIntersection::kSingle) REQUIRE(*ab.point == *ba.point);
  }
}

TEST_CASE("classification validates its inputs") {
  CHECK_THROWS_AS(radon::hulls_intersection_info({}, {Point{q(0)}}), radon::InvalidInputError);
  CHECK_THROWS_AS(radon::hulls_intersection_info({Point{q(0)}}, {}), radon::InvalidInputError);
  CHECK_THROWS_AS(radon::hulls_intersection_info({Point{q(0)}}, {Point{q(0), q(1)}}),
                  radon::InvalidInputError);
}

TEST_CASE("enumeration on three collinear points") {
  const PointSet ps(1, {Point{q(0)}, Point{q(1)}, Point{q(2)}});
  const OracleReport report = radon::brute_force_radon(ps);
  // Candidates: {1}|{2,3}, {1,2}|{3}, {1,3}|{2}. Only the last one has
  // intersecting hulls.
  REQUIRE(report.radon_partitions.size() == 1);
  CHECK(report.radon_partitions[0].first == Partition({1, 3}, {2}, 3));
  CHECK(report.radon_partitions[0].second == Point{q(1)});
  CHECK(report.intersecting_partitions == 1);
}

TEST_CASE("enumeration on the square corners") {
  const PointSet ps(2, {Point{q(0), q(0)}, Point{q(1), q(0)}, Point{q(0), q(1)},
                        Point{q(1), q(1)}});
  const OracleReport report = radon::brute_force_radon(ps);
  REQUIRE(report.radon_partitions.size() == 1);
  CHECK(report.radon_partitions[0].first == Partition({1, 4}, {2, 3}, 4));
  CHECK(report.radon_partitions[0].second == Point{q(1, 2), q(1, 2)});
  CHECK(report.intersecting_partitions == 1);
}

TEST_CASE("enumeration sees every intersection of a degenerate instance") {
  const PointSet ps(2, {Point{q(0), q(0)}, Point{q(1), q(0)}, Point{q(2), q(0)},
                        Point{q(0), q(1)}});
  const OracleReport report = radon::brute_force_radon(ps);
  // Points 1, 2, 3 are collinear: 2 lies in conv{1,3}, with or without 4.
  REQUIRE(report.radon_partitions.size() == 2);
  CHECK(report.radon_partitions[0].first == Partition({1, 3}, {2, 4}, 4));
  CHECK(report.radon_partitions[0].second == Point{q(1), q(0)});
  CHECK(report.radon_partitions[1].first == Partition({1, 3, 4}, {2}, 4));
  CHECK(report.radon_partitions[1].second == Point{q(1), q(0)});
  CHECK(report.intersecting_partitions == 2);
}

TEST_CASE("enumeration guards its size limits") {
  CHECK_THROWS_AS(radon::brute_force_radon(PointSet(1, {Point{q(0)}})),
                  radon::InvalidInputError);
}

TEST_CASE("single witnesses belong to both hulls") {
  radon::SplitMix64 rng(107);
  for (int dim = 1; dim <= 3; ++dim) {
    for (int k = 0; k < 8; ++k) {
      const PointSet ps = radon::generate_instance(dim, rng.next(), 7).instance;
      const OracleReport report = radon::brute_force_radon(ps);
      REQUIRE(report.radon_partitions.size() == 1);
      REQUIRE(report.intersecting_partitions == 1);
      for (const auto& [partition, witness] : report.radon_partitions) {
        REQUIRE(radon::hull_membership(witness, ps.points_of(partition.side_I)).has_value());
        REQUIRE(radon::hull_membership(witness, ps.points_of(partition.side_J)).has_value());
      }
    }
  }
}

TEST_CASE("oracle agrees with the algebraic certificate") {
  radon::SplitMix64 rng(109);
  for (int dim = 1; dim <= 4; ++dim) {
    for (int k = 0; k < 6; ++k) {
      const PointSet ps = radon::generate_instance(dim, rng.next(), 8).instance;
      const OracleReport report = radon::brute_force_radon(ps);
      const radon::RadonCertificate cert = radon::radon_algebraic(ps);
      REQUIRE(report.radon_partitions.size() == 1);
      REQUIRE(report.radon_partitions[0].first == cert.partition);
      REQUIRE(report.radon_partitions[0].second == cert.witness);
    }
  }
}
