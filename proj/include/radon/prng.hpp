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

#include "radon/error.hpp"

namespace radon {

/// SplitMix64: the output of step k is a fixed 64-bit mix of
/// seed + (k+1) * 0x9e3779b97f4a7c15. Counter-based and trivially
/// portable, so instance streams can be reproduced from (seed, k) alone
/// in any language. Bounded draws use plain modulo reduction; that bias
/// is irrelevant at the ranges used here and keeps the derivation easy
/// to re-implement. This is the only randomness source in the project.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += kGamma;
    return mix(state_);
  }

  /// Uniform-ish draw in [0, bound), bound >= 1, by modulo reduction.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) throw InvalidInputError("empty draw range");
    return next() % bound;
  }

  /// Draw in the closed range [lo, hi].
  std::int64_t next_in_range(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw InvalidInputError("empty draw range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next_below(span));
  }

  /// Seed of substream `index` of `seed`: the index-th output of the
  /// generator itself. Used to give every (dimension, instance) pair of a
  /// fuzz run its own reproducible stream.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    return mix(seed + (index + 1) * kGamma);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace radon
