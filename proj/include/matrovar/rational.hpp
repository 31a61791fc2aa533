// Copyright 2026 The Authors.
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

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "matrovar/errors.hpp"

namespace matrovar {

// Exact rational scalar. boost's cpp_rational keeps gcd(|num|, den) = 1 and
// den >= 1 as a class invariant, which is exactly the canonical form we need.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RationalVector = std::vector<Rational>;

/// Serializes as "p" when the denominator is 1, otherwise "p/q".
inline std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

/// Parses "p" or "p/q". Throws InputError on garbage or zero denominator.
inline Rational parse_rational(const std::string& s) {
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (!is_int(s)) throw InputError("not a rational: '" + s + "'");
      return Rational(Int(s));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw InputError("not a rational: '" + s + "'");
    Int d(den);
    if (d == 0) throw InputError("zero denominator in '" + s + "'");
    return Rational(Int(num), d);
  } catch (const std::exception& e) {
    throw InputError(std::string("cannot parse rational '") + s + "': " + e.what());
  }
}

inline bool is_zero_vector(const RationalVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace matrovar
