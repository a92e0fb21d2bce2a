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

// Exact parsing and rounding of decimal fractions. Support thresholds and
// fractional budgets are specified as decimal strings; parsing them into
// num/den pairs and rounding with integer arithmetic avoids the classic
// floating-point ceiling bug (0.07 * 100 -> 7.000000000000001 -> ceil 8).

#pragma once

#include <cstdint>
#include <string_view>

namespace tierforge {

// Parses a non-negative decimal literal ("1", "0.25", ".5") into num/den
// with den a power of ten. Returns false on malformed input or overflow.
inline bool parse_decimal_rational(std::string_view text, std::uint64_t& num,
                                   std::uint64_t& den) {
  num = 0;
  den = 1;
  bool any_digit = false;
  bool seen_dot = false;
  for (char ch : text) {
    if (ch == '.') {
      if (seen_dot) return false;
      seen_dot = true;
      continue;
    }
    if (ch < '0' || ch > '9') return false;
    const std::uint64_t digit = static_cast<std::uint64_t>(ch - '0');
    if (num > (UINT64_MAX - digit) / 10) return false;
    num = num * 10 + digit;
    if (seen_dot) {
      if (den > UINT64_MAX / 10) return false;
      den *= 10;
    }
    any_digit = true;
  }
  return any_digit;
}

// ceil(scale * num / den) for den >= 1, exact via 128-bit intermediate.
inline std::uint64_t ceil_mul_div(std::uint64_t scale, std::uint64_t num,
                                  std::uint64_t den) {
  const unsigned __int128 prod =
      static_cast<unsigned __int128>(scale) * num + (den - 1);
  return static_cast<std::uint64_t>(prod / den);
}

}  // namespace tierforge
