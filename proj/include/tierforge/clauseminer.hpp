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

// Candidate ground-set mining: every non-empty term set of bounded length
// whose weighted support in the query log reaches min_support, found by
// FP-growth over weighted transactions. The emitted set is exactly
// { c : 1 <= |c| <= max_clause_len, sum of weights of queries containing c
//       >= ceil(min_support * n) },
// ordered by support descending, then length ascending, then
// lexicographic term ids, optionally truncated to max_candidates.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tierforge/corpus.hpp"
#include "tierforge/matchengine.hpp"

namespace tierforge {

struct MinerConfig {
  // min_support as an exact rational in (0, 1].
  std::uint64_t support_num = 1;
  std::uint64_t support_den = 1000;
  std::uint32_t max_clause_len = 3;
  std::optional<std::uint64_t> max_candidates;
};

struct MinedClause {
  Clause clause;
  std::uint64_t support = 0;  // weighted occurrence count in the log
};

// ceil(min_support * n): the weighted-count threshold, always >= 1.
std::uint64_t support_threshold(const MinerConfig& cfg, std::uint64_t n);

// Throws std::invalid_argument when min_support is outside (0, 1] or
// max_clause_len is 0.
std::vector<MinedClause> mine_candidates(const QueryLog& log,
                                         const MinerConfig& cfg);

std::vector<Clause> strip_support(std::vector<MinedClause> mined);

// Clause serialization plus a tab-separated support column.
void save_candidates(const std::vector<MinedClause>& mined, const Vocab& vocab,
                     const std::string& path);

// Reads a candidates file: one clause per line, optionally followed by a
// tab and its support (missing support reads as 0). Comment and empty
// lines are skipped.
std::vector<MinedClause> load_candidates(const std::string& path,
                                         Vocab& vocab);

}  // namespace tierforge
