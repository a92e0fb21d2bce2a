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

#include "tierforge/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace tierforge {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ns(Clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() -
                                                           start)
          .count());
}

std::vector<DocSet> query_match_sets(const InvertedIndex& index,
                                     const QueryLog& log, DocSet::Rep rep,
                                     ThreadPool* pool) {
  std::vector<DocSet> sets(log.queries.size());
  const auto worker = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      sets[i] = index.match(log.queries[i].terms, rep);
  };
  if (pool != nullptr)
    pool->parallel_for(sets.size(), worker);
  else
    worker(0, sets.size());
  return sets;
}

bool term_vec_canonical_less(const std::vector<TermId>& a,
                             const std::vector<TermId>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Shared scaffold for the two top-B-document heuristics: score documents,
// keep the B best (score descending, id ascending), then select the
// queries whose non-empty match sets lie inside that set.
template <typename Accumulate>
QueryBaselineResult doc_score_baseline(const InvertedIndex& index,
                                       const QueryLog& log,
                                       std::uint64_t budget, ThreadPool* pool,
                                       Accumulate&& accumulate) {
  const auto start = Clock::now();
  validate_budget(budget, index.n_docs());
  const std::vector<DocSet> matches =
      query_match_sets(index, log, DocSet::Rep::kSparse, pool);

  std::vector<std::uint64_t> score(index.n_docs(), 0);
  for (std::size_t i = 0; i < matches.size(); ++i) {
    const std::uint64_t w = log.queries[i].weight;
    matches[i].for_each([&](DocId d) { accumulate(score[d], w); });
  }

  std::vector<DocId> by_score(index.n_docs());
  std::iota(by_score.begin(), by_score.end(), DocId{0});
  std::sort(by_score.begin(), by_score.end(), [&](DocId a, DocId b) {
    if (score[a] != score[b]) return score[a] > score[b];
    return a < b;
  });
  by_score.resize(static_cast<std::size_t>(budget));
  std::sort(by_score.begin(), by_score.end());
  const DocSet top = DocSet::from_sorted(std::move(by_score), index.n_docs(),
                                         DocSet::pick_rep(index.n_docs()));

  QueryBaselineResult res;
  res.f_den = log.total_weight;
  DocSet tier1 =
      DocSet::empty(index.n_docs(), DocSet::pick_rep(index.n_docs()));
  for (std::size_t i = 0; i < matches.size(); ++i) {
    if (matches[i].empty_set()) continue;
    if (matches[i].count_missing_in(top) != 0) continue;
    res.selected.push_back(static_cast<std::uint32_t>(i));
    res.f_num += log.queries[i].weight;
    tier1.union_in(matches[i]);
  }
  res.g = tier1.count();
  res.wall_ns = elapsed_ns(start);
  return res;
}

}  // namespace

QueryBaselineResult popularity_baseline(const InvertedIndex& index,
                                        const QueryLog& log,
                                        std::uint64_t budget,
                                        ThreadPool* pool) {
  return doc_score_baseline(
      index, log, budget, pool,
      [](std::uint64_t& acc, std::uint64_t w) { acc += w; });
}

QueryBaselineResult flowmax_baseline(const InvertedIndex& index,
                                     const QueryLog& log, std::uint64_t budget,
                                     ThreadPool* pool) {
  return doc_score_baseline(
      index, log, budget, pool,
      [](std::uint64_t& acc, std::uint64_t w) { acc = std::max(acc, w); });
}

QueryBaselineResult flow_greedy_baseline(const InvertedIndex& index,
                                         const QueryLog& log,
                                         std::uint64_t budget,
                                         ThreadPool* pool) {
  const auto start = Clock::now();
  validate_budget(budget, index.n_docs());
  const std::size_t nq = log.queries.size();

  // Queries become the candidate ground set: selecting one covers exactly
  // that query (exact-match routing), at the cost of its match set.
  ClauseStats stats;
  stats.n_docs = index.n_docs();
  stats.n = log.total_weight;
  stats.match_sets = query_match_sets(index, log, DocSet::Rep::kSparse, pool);
  stats.clauses.reserve(nq);
  stats.qmatch.resize(nq);
  stats.query_weight.resize(nq);
  stats.singleton_f_num.resize(nq);
  for (std::size_t i = 0; i < nq; ++i) {
    stats.clauses.push_back(Clause{log.queries[i].terms});
    stats.qmatch[i] = {static_cast<std::uint32_t>(i)};
    stats.query_weight[i] = log.queries[i].weight;
    stats.singleton_f_num[i] = log.queries[i].weight;
  }

  SolveOptions opts;
  opts.budget = budget;
  SolveResult sol = lazy_greedy(stats, opts);

  QueryBaselineResult res;
  res.selected = std::move(sol.solution);
  res.path = std::move(sol.path);
  res.f_num = sol.f_num;
  res.f_den = sol.f_den;
  res.g = sol.g;
  res.f_evals = sol.f_evals;
  res.g_evals = sol.g_evals;
  res.wall_ns = elapsed_ns(start);
  return res;
}

std::size_t QuerySelection::TermVecHash::operator()(
    const std::vector<TermId>& terms) const {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a over the term ids
  for (TermId t : terms) {
    h ^= t;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

QuerySelection::QuerySelection(std::vector<std::vector<TermId>> queries,
                               const InvertedIndex& index)
    : queries_(std::move(queries)),
      tier1_(DocSet::empty(index.n_docs(),
                           DocSet::pick_rep(index.n_docs()))) {
  for (std::vector<TermId>& q : queries_) {
    std::sort(q.begin(), q.end());
    q.erase(std::unique(q.begin(), q.end()), q.end());
    if (q.empty())
      throw std::invalid_argument("query selection contains an empty query");
  }
  std::sort(queries_.begin(), queries_.end(), term_vec_canonical_less);
  queries_.erase(std::unique(queries_.begin(), queries_.end()),
                 queries_.end());
  for (const std::vector<TermId>& q : queries_) {
    lookup_.insert(q);
    tier1_.union_in(index.match(q));
  }
}

int QuerySelection::classify_query(const std::vector<TermId>& terms) const {
  std::vector<TermId> key = terms;
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  return lookup_.count(key) != 0 ? 1 : 2;
}

void save_query_selection(const std::vector<std::vector<TermId>>& queries,
                          const Vocab& vocab, const std::string& path) {
  std::vector<std::vector<TermId>> normalized = queries;
  for (std::vector<TermId>& q : normalized) {
    std::sort(q.begin(), q.end());
    q.erase(std::unique(q.begin(), q.end()), q.end());
    if (q.empty())
      throw std::invalid_argument("query selection contains an empty query");
  }
  std::sort(normalized.begin(), normalized.end(), term_vec_canonical_less);
  normalized.erase(std::unique(normalized.begin(), normalized.end()),
                   normalized.end());

  std::ofstream out(path);
  if (!out) throw DataError("cannot write selection file: " + path);
  out << kQuerySelectionMarker << '\n';
  for (const std::vector<TermId>& q : normalized) {
    const char* sep = "";
    for (TermId t : q) {
      out << sep << vocab.term(t);
      sep = " ";
    }
    out << '\n';
  }
  if (!out) throw DataError("write failed: " + path);
}

std::vector<std::vector<TermId>> load_query_selection(const std::string& path,
                                                      Vocab& vocab) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open selection file: " + path);
  std::string line;
  std::size_t line_no = 0;
  bool marker_seen = false;
  std::vector<std::vector<TermId>> queries;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line != kQuerySelectionMarker)
        throw DataError(path + ": missing " +
                        std::string(kQuerySelectionMarker) + " marker line");
      marker_seen = true;
      continue;
    }
    if (line.empty() || line[0] == '#') continue;
    std::vector<TermId> terms;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const std::size_t next = line.find_first_of(" \t", pos);
      const std::size_t end = next == std::string::npos ? line.size() : next;
      if (end > pos) terms.push_back(vocab.intern(line.substr(pos, end - pos)));
      pos = end + 1;
    }
    if (terms.empty())
      throw DataError(path + ":" + std::to_string(line_no) +
                      ": empty query in selection file");
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    queries.push_back(std::move(terms));
  }
  if (!marker_seen)
    throw DataError(path + ": missing " + std::string(kQuerySelectionMarker) +
                    " marker line");
  return queries;
}

bool is_query_selection_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open file: " + path);
  std::string line;
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line == kQuerySelectionMarker;
}

}  // namespace tierforge
