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

// Exact ordering of utility ratios f/g without floating point. f values
// are integer numerators over one common denominator n, so ratios compare
// by cross-multiplication. Zero denominators follow the selection rule:
// a candidate with f > 0 and g = 0 covers queries for free and outranks
// every finite ratio (such candidates order among themselves by f), while
// a candidate with f = 0 is never worth selecting and ranks below
// everything.

#pragma once

#include <cstdint>

namespace tierforge {

struct GainPair {
  std::uint64_t f_num = 0;  // f-gain numerator (common denominator n)
  std::uint64_t g = 0;      // g-gain

  bool operator==(const GainPair&) const = default;
};

// Three-way comparison of the ratios a.f/a.g vs b.f/b.g under the total
// order described above: negative if a < b, zero if equal, positive if
// a > b.
inline int compare_gain_ratio(GainPair a, GainPair b) {
  // Rank classes: 0 = unselectable (f == 0), 1 = finite, 2 = infinite.
  const int class_a = a.f_num == 0 ? 0 : (a.g == 0 ? 2 : 1);
  const int class_b = b.f_num == 0 ? 0 : (b.g == 0 ? 2 : 1);
  if (class_a != class_b) return class_a < class_b ? -1 : 1;
  switch (class_a) {
    case 0:
      return 0;
    case 2:
      if (a.f_num == b.f_num) return 0;
      return a.f_num < b.f_num ? -1 : 1;
    default: {
      const unsigned __int128 lhs =
          static_cast<unsigned __int128>(a.f_num) * b.g;
      const unsigned __int128 rhs =
          static_cast<unsigned __int128>(b.f_num) * a.g;
      if (lhs == rhs) return 0;
      return lhs < rhs ? -1 : 1;
    }
  }
}

inline bool gain_ratio_less(GainPair a, GainPair b) {
  return compare_gain_ratio(a, b) < 0;
}

}  // namespace tierforge
