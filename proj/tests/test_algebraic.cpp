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
#include "radon/partition.hpp"
#include "radon/prng.hpp"
#include "support/laplace.hpp"

using radon::AffineDependence;
using radon::Partition;
using radon::Point;
using radon::PointSet;
using radon::RadonCertificate;
using radon::Rational;
using radon::Vec;

namespace {

Rational q(long long n, long long d = 1) {
  return Rational(radon::Integer(n), radon::Integer(d));
}

}  // namespace

TEST_CASE("dependence of three collinear points") {
  const PointSet ps(1, {Point{q(0)}, Point{q(1)}, Point{q(2)}});
  const AffineDependence dep = radon::affine_dependence(ps);
  CHECK(dep.coefficients == std::vector<Rational>{q(1), q(-2), q(1)});
}

TEST_CASE("dependence of the square corners") {
  const PointSet ps(2, {Point{q(0), q(0)}, Point{q(1), q(0)}, Point{q(0), q(1)},
                        Point{q(1), q(1)}});
  const AffineDependence dep = radon::affine_dependence(ps);
  CHECK(dep.coefficients == std::vector<Rational>{q(1), q(-1), q(-1), q(1)});
}

TEST_CASE("dependence wants exactly d+2 points") {
  CHECK_THROWS_AS(radon::affine_dependence(PointSet(2, {Point{q(0), q(0)}, Point{q(1), q(0)},
                                                        Point{q(0), q(1)}})),
                  radon::InvalidInputError);
}

TEST_CASE("dependence is a kernel vector with leading coefficient one") {
  radon::SplitMix64 rng(71);
  for (int dim = 1; dim <= 5; ++dim) {
    for (int k = 0; k < 12; ++k) {
      const PointSet ps = radon::generate_instance(dim, rng.next(), 9).instance;
      const AffineDependence dep = radon::affine_dependence(ps);
      REQUIRE(dep.coefficients.size() == ps.points.size());

      // Defining equations, checked directly.
      Rational sum(0);
      Vec weighted(static_cast<std::size_t>(dim), Rational(0));
      for (std::size_t i = 0; i < dep.coefficients.size(); ++i) {
        sum += dep.coefficients[i];
        for (std::size_t c = 0; c < weighted.size(); ++c)
          weighted[c] += dep.coefficients[i] * ps.points[i][c];
      }
      REQUIRE(sum == 0);
      for (const Rational& w : weighted) REQUIRE(w == 0);

      // Normalization: first nonzero coefficient is +1.
      for (const Rational& c : dep.coefficients) {
        if (c == 0) continue;
        REQUIRE(c == 1);
        break;
      }
    }
  }
}

TEST_CASE("dependence agrees with the cofactor oracle") {
  radon::SplitMix64 rng(73);
  for (int dim = 1; dim <= 4; ++dim) {
    for (int k = 0; k < 15; ++k) {
      const PointSet ps = radon::generate_instance(dim, rng.next(), 8).instance;
      const AffineDependence dep = radon::affine_dependence(ps);
      CHECK(dep.coefficients == testsupport::cofactor_dependence(ps));
    }
  }
}

TEST_CASE("certificate for three collinear points isolates the middle") {
  const PointSet ps(1, {Point{q(0)}, Point{q(1)}, Point{q(2)}});
  const RadonCertificate cert = radon::radon_algebraic(ps);
  CHECK(cert.partition == Partition({1, 3}, {2}, 3));
  CHECK(cert.witness == Point{q(1)});
  CHECK(cert.coeffs_I == std::vector<Rational>{q(1, 2), q(1, 2)});
  CHECK(cert.coeffs_J == std::vector<Rational>{q(1)});
  CHECK(radon::certificate_valid(ps, cert));
}

TEST_CASE("certificate for the square crosses the diagonals") {
  const PointSet ps(2, {Point{q(0), q(0)}, Point{q(1), q(0)}, Point{q(0), q(1)},
                        Point{q(1), q(1)}});
  const RadonCertificate cert = radon::radon_algebraic(ps);
  CHECK(cert.partition == Partition({1, 4}, {2, 3}, 4));
  CHECK(cert.witness == Point{q(1, 2), q(1, 2)});
  CHECK(radon::certificate_valid(ps, cert));
}

TEST_CASE("certificate for a point inside a triangle") {
  const PointSet ps(2, {Point{q(0), q(0)}, Point{q(3), q(0)}, Point{q(0), q(3)},
                        Point{q(1), q(1)}});
  const RadonCertificate cert = radon::radon_algebraic(ps);
  CHECK(cert.partition == Partition({1, 2, 3}, {4}, 4));
  CHECK(cert.witness == Point{q(1), q(1)});
  CHECK(cert.coeffs_I == std::vector<Rational>{q(1, 3), q(1, 3), q(1, 3)});
  CHECK(cert.coeffs_J == std::vector<Rational>{q(1)});
}

TEST_CASE("certificate for a frozen three-dimensional instance") {
  const PointSet ps(3, {Point{q(-3), q(0), q(0)}, Point{q(0), q(-2), q(1)},
                        Point{q(0), q(3), q(1)}, Point{q(3), q(0), q(0)},
                        Point{q(4), q(0), q(3)}});
  const AffineDependence dep = radon::affine_dependence(ps);
  CHECK(dep.coefficients ==
        std::vector<Rational>{q(1), q(-27, 25), q(-18, 25), q(1, 5), q(3, 5)});
  const RadonCertificate cert = radon::radon_algebraic(ps);
  CHECK(cert.partition == Partition({1, 4, 5}, {2, 3}, 5));
  CHECK(cert.witness == Point{q(0), q(0), q(1)});
  CHECK(cert.coeffs_I == std::vector<Rational>{q(5, 9), q(1, 9), q(1, 3)});
  CHECK(cert.coeffs_J == std::vector<Rational>{q(3, 5), q(2, 5)});
  CHECK(radon::certificate_valid(ps, cert));
}

TEST_CASE("a zero coefficient is reported as degenerate") {
  const PointSet ps(2, {Point{q(0), q(0)}, Point{q(1), q(0)}, Point{q(2), q(0)},
                        Point{q(0), q(1)}});
  // lambda = (1, -2, 1, 0): the first three points are collinear.
  bool thrown = false;
  try {
    radon::radon_algebraic(ps);
  } catch (const radon::DegenerateInputError& e) {
    thrown = true;
    CHECK(e.violating_subset == std::vector<int>{1, 2, 3});
  }
  CHECK(thrown);
}

TEST_CASE("partition is invariant under affine maps, witness covariant") {
  radon::SplitMix64 rng(79);
  for (int dim = 1; dim <= 4; ++dim) {
    for (int k = 0; k < 8; ++k) {
      const PointSet ps = radon::generate_instance(dim, rng.next(), 9).instance;
      const RadonCertificate before = radon::radon_algebraic(ps);

      // Random invertible map: start from the identity and shear.
      radon::Matrix m(static_cast<std::size_t>(dim),
                      std::vector<Rational>(static_cast<std::size_t>(dim), Rational(0)));
      for (int i = 0; i < dim; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          if (i != j && rng.next_below(2) == 0)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                q(rng.next_in_range(-3, 3), rng.next_in_range(1, 2));
      if (radon::determinant(m) == 0) continue;
      Vec shift(static_cast<std::size_t>(dim));
      for (Rational& c : shift) c = q(rng.next_in_range(-5, 5));

      const auto apply = [&](const Point& p) {
        Vec out(static_cast<std::size_t>(dim), Rational(0));
        for (std::size_t r = 0; r < out.size(); ++r) {
          for (std::size_t c = 0; c < out.size(); ++c) out[r] += m[r][c] * p[c];
          out[r] += shift[r];
        }
        return Point(out);
      };

      std::vector<Point> mapped;
      for (const Point& p : ps.points) mapped.push_back(apply(p));
      const PointSet transformed(dim, mapped);
      const RadonCertificate after = radon::radon_algebraic(transformed);

      REQUIRE(after.partition == before.partition);
      REQUIRE(after.witness == apply(before.witness));
      REQUIRE(after.coeffs_I == before.coeffs_I);
      REQUIRE(after.coeffs_J == before.coeffs_J);
    }
  }
}
