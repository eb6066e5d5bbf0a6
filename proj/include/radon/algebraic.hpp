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
#include <string>
#include <utility>
#include <vector>

#include "radon/linalg.hpp"
#include "radon/partition.hpp"
#include "radon/point.hpp"

namespace radon {

/// Coefficients lambda_1..lambda_n, not all zero, with sum zero and
/// coefficient-weighted point sum zero: the algebraic witness that d+2
/// points in R^d are affinely dependent.
struct AffineDependence {
  std::vector<Rational> coefficients;
};

/// The (up to scale unique, in general position) affine dependence of the
/// d+2 points, computed by exact Gaussian elimination on the homogeneous
/// system {sum lambda_i = 0, sum lambda_i A_i = 0} and normalized so the
/// first nonzero coefficient is +1.
inline AffineDependence affine_dependence(const PointSet& ps) {
  const std::size_t d = static_cast<std::size_t>(ps.dim);
  const std::size_t n = ps.points.size();
  if (n != d + 2)
    throw InvalidInputError("affine dependence expects d+2 points, got " + std::to_string(n));
  Matrix m(d + 1, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    m[0][i] = 1;
    for (std::size_t k = 0; k < d; ++k) m[k + 1][i] = ps.points[i][k];
  }
  std::vector<Rational> lambda = kernel_vector(std::move(m));
  if (lambda.empty()) throw Error("d+2 points always carry an affine dependence");
  for (const Rational& q : lambda)
    if (q != 0) {
      if (q != 1) {
        const Rational inv = Rational(1) / q;
        for (Rational& x : lambda) x *= inv;
      }
      break;
    }
  return AffineDependence{std::move(lambda)};
}

/// Splits the labels by the sign of their dependence coefficient and reads
/// off the Radon certificate: the positive-coefficient points and the
/// negative-coefficient points share exactly the point
/// sum(lambda_i A_i) / sum(lambda_i) taken over either sign class. A zero
/// coefficient means the other d+1 points are affinely dependent, which is
/// reported as degenerate input.
inline RadonCertificate radon_from_dependence(const PointSet& ps, const AffineDependence& dep) {
  const std::vector<Rational>& lambda = dep.coefficients;
  if (lambda.size() != ps.points.size())
    throw InvalidInputError("dependence length does not match point count");
  std::vector<int> pos, neg;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const int s = sign(lambda[i]);
    if (s > 0) pos.push_back(static_cast<int>(i) + 1);
    else if (s < 0) neg.push_back(static_cast<int>(i) + 1);
    else {
      std::vector<int> rest;
      for (std::size_t j = 0; j < lambda.size(); ++j)
        if (j != i) rest.push_back(static_cast<int>(j) + 1);
      throw DegenerateInputError("zero dependence coefficient on point " + std::to_string(i + 1) +
                                     "; the remaining points are affinely dependent",
                                 rest);
    }
  }

  Rational total = 0;
  for (int l : pos) total += lambda[static_cast<std::size_t>(l - 1)];
  Vec witness(static_cast<std::size_t>(ps.dim), Rational(0));
  for (int l : pos) {
    const Rational w = lambda[static_cast<std::size_t>(l - 1)] / total;
    const Point& p = ps.point(l);
    for (std::size_t k = 0; k < witness.size(); ++k) witness[k] += w * p[k];
  }

  const auto side_coeffs = [&](const std::vector<int>& side) {
    std::vector<Rational> coeffs;
    coeffs.reserve(side.size());
    for (int l : side) coeffs.push_back(abs(lambda[static_cast<std::size_t>(l - 1)]) / total);
    return coeffs;
  };

  RadonCertificate cert;
  cert.partition = Partition(pos, neg, ps.size());
  cert.witness = Point(std::move(witness));
  cert.coeffs_I = side_coeffs(cert.partition.side_I);
  cert.coeffs_J = side_coeffs(cert.partition.side_J);
  return cert;
}

/// The classical algebraic computation of the Radon certificate.
inline RadonCertificate radon_algebraic(const PointSet& ps) {
  return radon_from_dependence(ps, affine_dependence(ps));
}

}  // namespace radon
