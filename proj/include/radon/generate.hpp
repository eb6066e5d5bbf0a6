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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "radon/error.hpp"
#include "radon/instance_io.hpp"
#include "radon/point.hpp"
#include "radon/predicates.hpp"
#include "radon/prng.hpp"
#include "radon/rational.hpp"

namespace radon {

inline constexpr long long kDefaultBound = 10;
inline constexpr int kGeneratorMaxAttempts = 1000;

/// Random general-position instance: d + 2 points whose coordinates are
/// num/den with num in [-bound, bound] and den in [1, min(bound, 100)].
/// Degenerate or colliding draws are rejected whole, never repaired, so
/// the accepted instance is a pure function of (dim, seed, bound). Gives
/// up after a fixed attempt budget; at these coordinate ranges rejection
/// is rare and exhaustion indicates a misconfigured bound, not bad luck.
inline InstanceFile generate_instance(int dim, std::uint64_t seed, long long bound) {
  if (dim < 1) throw InvalidInputError("dimension must be at least 1");
  if (dim > 32) throw InvalidInputError("dimension out of range [1, 32]");
  if (bound < 1) throw InvalidInputError("bound must be at least 1");
  const long long den_cap = bound < 100 ? bound : 100;
  SplitMix64 rng(seed);
  const int count = dim + 2;
  for (int attempt = 0; attempt < kGeneratorMaxAttempts; ++attempt) {
    std::vector<Point> points;
    points.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      Vec coords;
      coords.reserve(static_cast<std::size_t>(dim));
      for (int k = 0; k < dim; ++k) {
        const long long num = rng.next_in_range(-bound, bound);
        const long long den = rng.next_in_range(1, den_cap);
        coords.push_back(Rational(Integer(num), Integer(den)));
      }
      points.push_back(Point{std::move(coords)});
    }
    bool distinct = true;
    for (std::size_t i = 0; i < points.size() && distinct; ++i) {
      for (std::size_t j = i + 1; j < points.size(); ++j) {
        if (points[i] == points[j]) {
          distinct = false;
          break;
        }
      }
    }
    if (!distinct) continue;
    PointSet ps(dim, std::move(points));
    if (!is_general_position(ps)) continue;
    nlohmann::json meta;
    meta["bound"] = bound;
    meta["generator"] = "splitmix64";
    meta["seed"] = seed;
    return InstanceFile(std::move(ps), std::move(meta));
  }
  throw GeneratorFailure("no general-position instance after " +
                         std::to_string(kGeneratorMaxAttempts) + " attempts (dim " +
                         std::to_string(dim) + ", bound " + std::to_string(bound) + ")");
}

}  // namespace radon
