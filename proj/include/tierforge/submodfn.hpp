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

// The two functions the solvers optimize over a fixed candidate list:
//   f(X) = weighted fraction of log queries containing some clause of X
//          (monotone submodular; kept as an integer numerator over the
//          fixed denominator n so ties compare exactly), and
//   g(X) = |union of the candidates' match sets| = number of documents
//          Tier 1 must hold (monotone submodular set cover).
// ClauseStats precomputes each candidate's match set and matching-query
// list once; CoverageState then answers marginal gains incrementally.
// Gain queries are pure reads of an immutable snapshot and safe to run
// concurrently; commits are exclusive.

#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "tierforge/corpus.hpp"
#include "tierforge/docset.hpp"
#include "tierforge/matchengine.hpp"
#include "tierforge/parallel.hpp"

namespace tierforge {

struct ClauseStats {
  std::vector<Clause> clauses;  // the candidate ground set, order fixed
  std::vector<DocSet> match_sets;                   // m(c) per candidate
  std::vector<std::vector<std::uint32_t>> qmatch;   // query indices with c ⊆ q
  std::vector<std::uint64_t> query_weight;          // weight per log query
  std::vector<std::uint64_t> singleton_f_num;       // f({c}) numerator
  std::uint64_t n = 0;                              // denominator: log weight
  std::size_t n_docs = 0;

  std::size_t n_candidates() const { return clauses.size(); }
  std::uint64_t singleton_g(std::uint32_t cand) const {
    return match_sets[cand].count();
  }
};

// Computes match sets and matching-query lists for every candidate.
// Queries are scanned in parallel when a pool is given; the merge is by
// query index, so the result is identical for any thread count.
// `match_rep` picks the match-set representation (sparse keeps large
// candidate lists over big corpora affordable).
ClauseStats precompute_stats(std::vector<Clause> candidates,
                             const InvertedIndex& index, const QueryLog& log,
                             DocSet::Rep match_rep, ThreadPool* pool = nullptr);

// From-scratch evaluation over an arbitrary candidate subset; the oracle
// path used by tests and the exhaustive solver.
std::uint64_t eval_f_num(const ClauseStats& stats,
                         const std::vector<std::uint32_t>& subset);
std::uint64_t eval_g(const ClauseStats& stats,
                     const std::vector<std::uint32_t>& subset);

// Incremental solution state: the committed candidate set X, its covered
// documents and hit queries, and exact marginal gains against it.
class CoverageState {
 public:
  explicit CoverageState(const ClauseStats& stats);

  const ClauseStats& stats() const { return *stats_; }
  std::uint64_t f_num() const { return f_num_; }
  std::uint64_t f_den() const { return stats_->n; }
  std::uint64_t g_value() const { return g_; }
  const std::vector<std::uint32_t>& solution() const { return solution_; }
  bool committed(std::uint32_t cand) const { return in_solution_[cand] != 0; }

  // f(X ∪ {c}) − f(X) as a numerator over n: the weight of queries matched
  // by c and not yet hit. Pure.
  std::uint64_t f_gain_num(std::uint32_t cand) const;
  // g(X ∪ {c}) − g(X) = |m(c) \ covered|. Pure.
  std::uint64_t g_gain(std::uint32_t cand) const;

  // Adds `cand` to X and folds its coverage in. Throws std::logic_error on
  // a duplicate commit.
  void commit(std::uint32_t cand);

  const DocSet& covered_docs() const { return covered_; }

  // Exact-evaluation counters (one per f_gain_num / g_gain call), the
  // currency the lazy machinery is measured in.
  std::uint64_t f_evals() const {
    return f_evals_.load(std::memory_order_relaxed);
  }
  std::uint64_t g_evals() const {
    return g_evals_.load(std::memory_order_relaxed);
  }

 private:
  const ClauseStats* stats_;
  DocSet covered_;
  std::vector<char> query_hit_;
  std::vector<char> in_solution_;
  std::vector<std::uint32_t> solution_;
  std::uint64_t f_num_ = 0;
  std::uint64_t g_ = 0;
  mutable std::atomic<std::uint64_t> f_evals_{0};
  mutable std::atomic<std::uint64_t> g_evals_{0};
};

}  // namespace tierforge
