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

// Query-selection baselines. Instead of clauses they pick whole log
// queries for Tier 1; an incoming query stays in Tier 1 only on an exact
// match (same term set) with a selected query, and Tier 1 stores the
// union of the selected queries' match sets.
//
//   popularity_baseline  scores each document by the total weight of the
//                        log queries matching it, keeps the top-B
//                        documents, and selects the queries whose match
//                        sets are non-empty and fully inside that set
//   flowmax_baseline     same, scoring by the maximum matching query
//                        weight instead of the sum
//   flow_greedy_baseline runs the ratio greedy with queries as the
//                        candidates (covering a query = selecting it);
//                        empty-match queries are legitimate zero-cost
//                        picks here, unlike in the two heuristics above

#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "tierforge/corpus.hpp"
#include "tierforge/docset.hpp"
#include "tierforge/matchengine.hpp"
#include "tierforge/parallel.hpp"
#include "tierforge/scsk.hpp"

namespace tierforge {

struct QueryBaselineResult {
  std::vector<std::uint32_t> selected;  // indices into log.queries
  SolutionPath path;  // per-selection records (flow_greedy only)
  std::uint64_t f_num = 0;  // selected query weight
  std::uint64_t f_den = 1;  // total log weight
  std::uint64_t g = 0;      // induced Tier-1 document count
  std::uint64_t f_evals = 0;  // exact gain evaluations (flow_greedy only)
  std::uint64_t g_evals = 0;
  std::uint64_t wall_ns = 0;
};

QueryBaselineResult popularity_baseline(const InvertedIndex& index,
                                        const QueryLog& log,
                                        std::uint64_t budget,
                                        ThreadPool* pool = nullptr);
QueryBaselineResult flowmax_baseline(const InvertedIndex& index,
                                     const QueryLog& log, std::uint64_t budget,
                                     ThreadPool* pool = nullptr);
QueryBaselineResult flow_greedy_baseline(const InvertedIndex& index,
                                         const QueryLog& log,
                                         std::uint64_t budget,
                                         ThreadPool* pool = nullptr);

// A frozen query selection: exact-match routing plus the induced Tier-1
// document set.
class QuerySelection {
 public:
  // `queries` are term vectors in any order; they are normalized (sorted,
  // deduplicated) and the Tier-1 set is the union of their match sets.
  QuerySelection(std::vector<std::vector<TermId>> queries,
                 const InvertedIndex& index);

  // 1 when the normalized term set equals a selected query, else 2.
  int classify_query(const std::vector<TermId>& terms) const;

  const DocSet& tier1_docs() const { return tier1_; }
  const std::vector<std::vector<TermId>>& queries() const { return queries_; }

 private:
  struct TermVecHash {
    std::size_t operator()(const std::vector<TermId>& terms) const;
  };

  std::vector<std::vector<TermId>> queries_;
  std::unordered_set<std::vector<TermId>, TermVecHash> lookup_;
  DocSet tier1_;
};

// Selection files start with a "#type=query" marker line followed by one
// query per line in canonical clause order; the same reader/writer term
// conventions as clause files apply.
inline constexpr const char* kQuerySelectionMarker = "#type=query";

void save_query_selection(const std::vector<std::vector<TermId>>& queries,
                          const Vocab& vocab, const std::string& path);
std::vector<std::vector<TermId>> load_query_selection(const std::string& path,
                                                      Vocab& vocab);

// True when the file's first line is the query-selection marker.
bool is_query_selection_file(const std::string& path);

}  // namespace tierforge
