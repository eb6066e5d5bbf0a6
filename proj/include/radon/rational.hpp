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
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "radon/error.hpp"

namespace radon {

/// Exact rational scalar: ratio of arbitrary-precision integers, kept in
/// canonical form (positive denominator, coprime numerator/denominator).
/// Every coordinate, coefficient and tableau entry in this library is a
/// Rational; no floating point appears anywhere in the kernel.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Integer numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

inline Integer denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

/// Sign of a rational: -1, 0 or +1.
inline int sign(const Rational& q) { return q.sign(); }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Serializes as "numerator/denominator", denominator always present and
/// positive, e.g. "-3/4", "7/1". This is the wire format used by every
/// JSON schema in the project.
inline std::string to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses the "num/den" wire format. Accepts exactly the grammar
/// -?[0-9]+/[1-9][0-9]* and canonicalizes the result, so "2/4" parses to
/// 1/2. Anything else (floats, whitespace, missing slash, zero or signed
/// denominator) is a parse error.
inline Rational rational_from_string(std::string_view s) {
  const auto bad = [&] {
    throw ParseError("not a rational \"num/den\" string: '" + std::string(s) + "'");
  };
  const std::size_t slash = s.find('/');
  if (slash == std::string_view::npos || slash == 0 || slash + 1 == s.size()) bad();
  std::string_view num = s.substr(0, slash);
  std::string_view den = s.substr(slash + 1);
  std::size_t i = (num[0] == '-') ? 1 : 0;
  if (i == num.size()) bad();
  for (; i < num.size(); ++i)
    if (num[i] < '0' || num[i] > '9') bad();
  if (den[0] < '1' || den[0] > '9') bad();
  for (std::size_t j = 1; j < den.size(); ++j)
    if (den[j] < '0' || den[j] > '9') bad();
  return Rational(Integer(std::string(num)), Integer(std::string(den)));
}

}  // namespace radon
