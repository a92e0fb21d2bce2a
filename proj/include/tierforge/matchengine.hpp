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

// Inverted index over the corpus, match-set computation (the documents
// containing every term of a query, intersected smallest-posting-first),
// and clause-based tier classification: a query or document belongs to
// Tier 1 exactly when it contains some selected clause as a subset.
// Index and ClauseIndex are immutable after construction and safe for
// concurrent reads.

#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "tierforge/corpus.hpp"
#include "tierforge/docset.hpp"

namespace tierforge {

// A non-empty set of terms; the unit of selection. `terms` is strictly
// increasing.
struct Clause {
  std::vector<TermId> terms;

  bool operator==(const Clause& other) const { return terms == other.terms; }
};

// Sorts, deduplicates, and validates; throws std::invalid_argument on an
// empty clause (an empty clause would route every query to Tier 1).
Clause make_clause(std::vector<TermId> terms);

// Canonical clause order: length ascending, then lexicographic by TermId.
// This is the tie-break order used by every solver and serializer.
bool clause_canonical_less(const Clause& a, const Clause& b);

class InvertedIndex {
 public:
  static InvertedIndex build(
      const Corpus& corpus,
      std::size_t dense_threshold = DocSet::kDefaultDenseThreshold);

  std::size_t n_docs() const { return n_docs_; }
  DocSet::Rep rep() const { return rep_; }

  // Empty for terms absent from the corpus (including ids interned only
  // from query logs).
  const DocSet& posting(TermId term) const {
    return term < postings_.size() ? postings_[term] : empty_;
  }

  // The documents containing every term of `terms`; intersections run
  // smallest posting first. Throws std::invalid_argument on empty input.
  DocSet match(const std::vector<TermId>& terms) const {
    return match(terms, rep_);
  }
  DocSet match(const std::vector<TermId>& terms, DocSet::Rep out_rep) const;

 private:
  std::vector<DocSet> postings_;  // indexed by TermId
  DocSet empty_;
  std::size_t n_docs_ = 0;
  DocSet::Rep rep_ = DocSet::Rep::kDense;
};

// Reusable hit-count buffers for subset queries over a fixed ClauseIndex;
// one per thread.
struct HitScratch {
  std::vector<std::uint32_t> hits;
  std::vector<std::uint32_t> epoch_of;
  std::uint32_t epoch = 0;
};

// Subset-query structure over a clause set: an inverted term-to-clause map
// with per-clause hit counting (a clause fires once all of its terms have
// been hit by the probe's terms).
class ClauseIndex {
 public:
  explicit ClauseIndex(std::vector<Clause> clauses);

  const std::vector<Clause>& clauses() const { return clauses_; }

  // True iff some clause is a subset of `terms` (`terms` strictly
  // increasing).
  bool any_subset_of(const std::vector<TermId>& terms) const;

  // Tier 1 iff some selected clause is contained in the query/document.
  int classify_query(const std::vector<TermId>& terms) const {
    return any_subset_of(terms) ? 1 : 2;
  }
  int classify_document(const Document& d) const {
    return any_subset_of(d.terms) ? 1 : 2;
  }

  // Fills `out` with the index of every clause contained in `terms`, in
  // clause-list order. `scratch` carries the hit counters between calls.
  void matching_clauses(const std::vector<TermId>& terms, HitScratch& scratch,
                        std::vector<std::uint32_t>& out) const;

 private:
  std::vector<Clause> clauses_;
  std::vector<std::uint32_t> clause_len_;
  std::unordered_map<TermId, std::vector<std::uint32_t>> by_term_;
};

// One clause per line, space-separated term strings, canonical order.
void save_clauses(std::vector<Clause> clauses, const Vocab& vocab,
                  const std::string& path);
std::vector<Clause> load_clauses(const std::string& path, Vocab& vocab);

}  // namespace tierforge
