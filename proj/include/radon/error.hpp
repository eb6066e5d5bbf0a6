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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace radon {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structurally malformed input: dimension mismatch, duplicate points,
/// empty coordinate list, a point off its hyperplane, and so on.
struct InvalidInputError : Error {
  using Error::Error;
};

/// Input violates the general-position hypothesis (or an operation that
/// needs strict separation was handed a non-vertex apex). Carries the
/// offending point labels when they are known.
struct DegenerateInputError : Error {
  std::vector<int> violating_subset;

  explicit DegenerateInputError(const std::string& what) : Error(what) {}
  DegenerateInputError(const std::string& what, std::vector<int> subset)
      : Error(what), violating_subset(std::move(subset)) {}
};

/// Malformed file or string input (JSON, rational literals).
struct ParseError : Error {
  using Error::Error;
};

inline std::string labels_to_string(const std::vector<int>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(labels[i]);
  }
  out += "}";
  return out;
}

/// The rejection-sampling instance generator exhausted its resample cap.
struct GeneratorFailure : Error {
  using Error::Error;
};

}  // namespace radon
