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

// Tier-assignment evaluation and the synthetic workload generator.
//
// An assignment routes queries (tier 1 or 2) and pins down the Tier-1
// document set; evaluation measures the weighted share of each log served
// by Tier 1 and counts routing violations: queries sent to Tier 1 whose
// match set is not fully inside it (those would silently lose results).
// Clause assignments are violation-free by construction; the counter is a
// consistency check, not a tunable.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tierforge/baselines.hpp"
#include "tierforge/corpus.hpp"
#include "tierforge/docset.hpp"
#include "tierforge/matchengine.hpp"
#include "tierforge/parallel.hpp"

namespace tierforge {

class TierAssignment {
 public:
  virtual ~TierAssignment() = default;
  // 1 = served by Tier 1, 2 = forwarded to Tier 2.
  virtual int classify_query(const std::vector<TermId>& terms) const = 0;
  virtual const DocSet& tier1_docs() const = 0;
};

// Clause routing: Tier 1 serves a query iff some selected clause is a
// subset of it, and stores every document containing some clause.
class ClauseAssignment : public TierAssignment {
 public:
  ClauseAssignment(std::vector<Clause> clauses, const InvertedIndex& index);

  int classify_query(const std::vector<TermId>& terms) const override;
  const DocSet& tier1_docs() const override { return tier1_; }
  const ClauseIndex& clauses() const { return clauses_; }

 private:
  ClauseIndex clauses_;
  DocSet tier1_;
};

// Exact-match routing over a frozen query selection.
class SelectionAssignment : public TierAssignment {
 public:
  explicit SelectionAssignment(QuerySelection selection)
      : selection_(std::move(selection)) {}

  int classify_query(const std::vector<TermId>& terms) const override {
    return selection_.classify_query(terms);
  }
  const DocSet& tier1_docs() const override { return selection_.tier1_docs(); }
  const QuerySelection& selection() const { return selection_; }

 private:
  QuerySelection selection_;
};

struct CoverageReport {
  std::uint64_t train_num = 0, train_den = 1;  // Tier-1 weight / total weight
  std::uint64_t test_num = 0, test_den = 1;
  std::uint64_t tier1_docs = 0;
  std::uint64_t n_docs = 0;
  std::uint64_t budget = 0;
  std::uint64_t violations = 0;  // Tier-1 queries with matches outside Tier 1
  // Extra key/value rows appended verbatim by callers (algorithm, timings).
  std::vector<std::pair<std::string, std::string>> extra;
};

// Classifies both logs against the assignment; violations are counted over
// the distinct queries of both logs combined.
CoverageReport evaluate(const TierAssignment& assignment,
                        const QueryLog& train, const QueryLog& test,
                        const InvertedIndex& index, std::uint64_t budget,
                        ThreadPool* pool = nullptr);

// key=value lines, fixed order, ratios rendered alongside the exact
// fractions.
std::string report_txt(const CoverageReport& report);
void write_report_txt(const CoverageReport& report, const std::string& path);
// One flat JSON object; keys are emitted in sorted order.
void write_report_json(const CoverageReport& report, const std::string& path);

// Synthetic corpus/log generator. Documents draw distinct terms from a
// Zipf-like vocabulary distribution; queries grow from "intents" (small
// term subsets of real documents, so every intent is answerable) padded
// with extra terms that are either more terms from the intent's source
// document or global draws (noise_pct). Train and test share the intent
// distribution but use independent streams, so a sizable share of test
// queries never occurs in training, which is what separates clause routing
// from exact-match query routing.
struct SynthConfig {
  std::uint64_t seed = 42;
  std::size_t n_docs = 50000;
  std::size_t n_train = 100000;
  std::size_t n_test = 20000;
  std::size_t vocab_size = 5000;
  std::size_t doc_len_min = 5;
  std::size_t doc_len_max = 30;
  std::size_t query_len_min = 2;
  std::size_t query_len_max = 6;
  std::size_t n_intents = 1000;
  std::size_t intent_len_max = 3;
  unsigned noise_pct = 25;  // chance an extra query term is a global draw
  double zipf_s = 1.1;  // popularity skew; 0 gives uniform draws
};

struct SynthData {
  Corpus corpus;
  QueryLog train;
  QueryLog test;
  std::uint64_t novel_num = 0;  // test weight on queries absent from train
  std::uint64_t novel_den = 0;  // total test weight
};

SynthData generate_synthetic(const SynthConfig& config);

}  // namespace tierforge
