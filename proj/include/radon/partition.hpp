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
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "radon/error.hpp"
#include "radon/point.hpp"

namespace radon {

/// Canonical bipartition of the labels 1..n: both sides sorted, disjoint,
/// nonempty, covering all labels, with label 1 in side_I. Construction
/// canonicalizes (swaps the sides if needed) and validates.
struct Partition {
  std::vector<int> side_I;
  std::vector<int> side_J;

  Partition() = default;
  Partition(std::vector<int> a, std::vector<int> b, int n)
      : side_I(std::move(a)), side_J(std::move(b)) {
    std::sort(side_I.begin(), side_I.end());
    std::sort(side_J.begin(), side_J.end());
    if (side_I.empty() || side_J.empty())
      throw InvalidInputError("both sides of a partition must be nonempty");
    if (!side_I.empty() && !side_J.empty() && side_J.front() == 1) std::swap(side_I, side_J);
    if (side_I.front() != 1) throw InvalidInputError("label 1 missing from the partition");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto* side : {&side_I, &side_J})
      for (int l : *side) {
        if (l < 1 || l > n) throw InvalidInputError("partition label out of range");
        if (seen[static_cast<std::size_t>(l)])
          throw InvalidInputError("label " + std::to_string(l) + " appears twice");
        seen[static_cast<std::size_t>(l)] = true;
      }
    if (side_I.size() + side_J.size() != static_cast<std::size_t>(n))
      throw InvalidInputError("partition does not cover all labels");
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

inline std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < p.side_I.size(); ++i) os << (i ? "," : "") << p.side_I[i];
  os << "} | {";
  for (std::size_t i = 0; i < p.side_J.size(); ++i) os << (i ? "," : "") << p.side_J[i];
  os << "}";
  return os.str();
}

/// A Radon partition together with its proof: the single point common to
/// both convex hulls and the two barycentric coefficient vectors that
/// reproduce it from either side.
struct RadonCertificate {
  Partition partition;
  Point witness;
  std::vector<Rational> coeffs_I;  // aligned with partition.side_I
  std::vector<Rational> coeffs_J;  // aligned with partition.side_J

  friend bool operator==(const RadonCertificate&, const RadonCertificate&) = default;
};

/// Checks every certificate invariant against the instance it was issued
/// for: coefficients nonnegative and summing to one on each side, and both
/// convex combinations reproducing the witness exactly. Returns an error
/// description, empty on success.
inline std::string certificate_violation(const PointSet& ps, const RadonCertificate& cert) {
  const auto check_side = [&](const std::vector<int>& labels, const std::vector<Rational>& coeffs,
                              const char* name) -> std::string {
    if (labels.size() != coeffs.size())
      return std::string(name) + ": coefficient count does not match side size";
    Rational sum = 0;
    Vec combo(static_cast<std::size_t>(ps.dim), Rational(0));
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (coeffs[i] < 0) return std::string(name) + ": negative coefficient";
      sum += coeffs[i];
      const Point& p = ps.point(labels[i]);
      for (std::size_t k = 0; k < combo.size(); ++k) combo[k] += coeffs[i] * p[k];
    }
    if (sum != 1) return std::string(name) + ": coefficients sum to " + to_string(sum);
    if (Point(combo) != cert.witness)
      return std::string(name) + ": combination does not reproduce the witness";
    return {};
  };
  if (cert.witness.dim() != ps.dim) return "witness dimension mismatch";
  try {
    Partition copy(cert.partition.side_I, cert.partition.side_J, ps.size());
    if (copy != cert.partition) return "partition is not in canonical form";
  } catch (const InvalidInputError& e) {
    return std::string("partition invalid: ") + e.what();
  }
  if (auto err = check_side(cert.partition.side_I, cert.coeffs_I, "side_I"); !err.empty())
    return err;
  if (auto err = check_side(cert.partition.side_J, cert.coeffs_J, "side_J"); !err.empty())
    return err;
  return {};
}

inline bool certificate_valid(const PointSet& ps, const RadonCertificate& cert) {
  return certificate_violation(ps, cert).empty();
}

}  // namespace radon
