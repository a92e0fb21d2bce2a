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

#include "tierforge/submodfn.hpp"

#include <stdexcept>

namespace tierforge {

ClauseStats precompute_stats(std::vector<Clause> candidates,
                             const InvertedIndex& index, const QueryLog& log,
                             DocSet::Rep match_rep, ThreadPool* pool) {
  ClauseStats stats;
  stats.clauses = std::move(candidates);
  stats.n = log.total_weight;
  stats.n_docs = index.n_docs();
  stats.query_weight.reserve(log.queries.size());
  for (const Query& q : log.queries) stats.query_weight.push_back(q.weight);

  const std::size_t m = stats.clauses.size();
  stats.match_sets.assign(m, DocSet());
  const auto match_chunk = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      stats.match_sets[i] = index.match(stats.clauses[i].terms, match_rep);
  };
  if (pool != nullptr) {
    pool->parallel_for(m, match_chunk);
  } else {
    match_chunk(0, m);
  }

  // Matching queries per candidate: scan queries (in parallel) with the
  // subset-query index, then invert query->candidates lists sequentially
  // so qmatch is sorted by query index for any thread count.
  const ClauseIndex cindex(stats.clauses);
  std::vector<std::vector<std::uint32_t>> by_query(log.queries.size());
  const auto scan_chunk = [&](std::size_t begin, std::size_t end) {
    HitScratch scratch;
    for (std::size_t q = begin; q < end; ++q)
      cindex.matching_clauses(log.queries[q].terms, scratch, by_query[q]);
  };
  if (pool != nullptr) {
    pool->parallel_for(log.queries.size(), scan_chunk);
  } else {
    scan_chunk(0, log.queries.size());
  }

  stats.qmatch.assign(m, {});
  stats.singleton_f_num.assign(m, 0);
  for (std::size_t q = 0; q < by_query.size(); ++q) {
    for (std::uint32_t ci : by_query[q]) {
      stats.qmatch[ci].push_back(static_cast<std::uint32_t>(q));
      stats.singleton_f_num[ci] += log.queries[q].weight;
    }
  }
  return stats;
}

std::uint64_t eval_f_num(const ClauseStats& stats,
                         const std::vector<std::uint32_t>& subset) {
  std::vector<char> hit(stats.query_weight.size(), 0);
  std::uint64_t num = 0;
  for (std::uint32_t cand : subset) {
    for (std::uint32_t q : stats.qmatch[cand]) {
      if (!hit[q]) {
        hit[q] = 1;
        num += stats.query_weight[q];
      }
    }
  }
  return num;
}

std::uint64_t eval_g(const ClauseStats& stats,
                     const std::vector<std::uint32_t>& subset) {
  DocSet covered =
      DocSet::empty(stats.n_docs, DocSet::pick_rep(stats.n_docs));
  for (std::uint32_t cand : subset) covered.union_in(stats.match_sets[cand]);
  return covered.count();
}

CoverageState::CoverageState(const ClauseStats& stats)
    : stats_(&stats),
      covered_(DocSet::empty(stats.n_docs, DocSet::pick_rep(stats.n_docs))),
      query_hit_(stats.query_weight.size(), 0),
      in_solution_(stats.n_candidates(), 0) {}

std::uint64_t CoverageState::f_gain_num(std::uint32_t cand) const {
  f_evals_.fetch_add(1, std::memory_order_relaxed);
  std::uint64_t num = 0;
  for (std::uint32_t q : stats_->qmatch[cand])
    if (!query_hit_[q]) num += stats_->query_weight[q];
  return num;
}

std::uint64_t CoverageState::g_gain(std::uint32_t cand) const {
  g_evals_.fetch_add(1, std::memory_order_relaxed);
  return stats_->match_sets[cand].count_missing_in(covered_);
}

void CoverageState::commit(std::uint32_t cand) {
  if (in_solution_[cand]) throw std::logic_error("duplicate commit");
  in_solution_[cand] = 1;
  solution_.push_back(cand);
  covered_.union_in(stats_->match_sets[cand]);
  g_ = covered_.count();
  for (std::uint32_t q : stats_->qmatch[cand]) {
    if (!query_hit_[q]) {
      query_hit_[q] = 1;
      f_num_ += stats_->query_weight[q];
    }
  }
}

}  // namespace tierforge
