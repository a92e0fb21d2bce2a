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

// Corpus and query-log ingestion. Terms are whitespace-tokenized,
// case-folded to lowercase (ASCII), and interned to dense TermIds in
// first-seen order: corpus first, then the query log. Documents are
// non-empty sorted term-id sets; queries are weighted, deduplicated,
// and kept even when they contain terms absent from the corpus.
//
// File formats (UTF-8, LF, `#`-prefixed comment lines ignored):
//   corpus:    doc_id<TAB>term term term...   (doc_id may be `-` to
//              mean "next line index"; ids must form 0..n_docs-1)
//   query log: term term...  or  count<TAB>term term...

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tierforge/docset.hpp"

namespace tierforge {

using TermId = std::uint32_t;

// Malformed or inconsistent input data; messages name the offending line.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Vocab {
 public:
  // Returns the id of `term` (case-folded), assigning the next dense id
  // on first sight.
  TermId intern(std::string_view term);
  std::optional<TermId> lookup(std::string_view term) const;
  const std::string& term(TermId id) const { return terms_.at(id); }
  std::size_t size() const { return terms_.size(); }

 private:
  std::vector<std::string> terms_;
  std::unordered_map<std::string, TermId> ids_;
};

struct Document {
  DocId doc_id = 0;
  std::vector<TermId> terms;  // strictly increasing, non-empty
};

struct Corpus {
  std::vector<Document> documents;  // documents[i].doc_id == i
  Vocab vocab;

  std::size_t n_docs() const { return documents.size(); }
};

struct Query {
  std::vector<TermId> terms;   // strictly increasing, non-empty
  std::uint64_t weight = 1;    // occurrence count in the log, >= 1
};

struct QueryLog {
  std::vector<Query> queries;        // unique term sets, sorted by terms
  std::uint64_t total_weight = 0;    // n = sum of weights
  std::uint64_t skipped_lines = 0;   // empty query lines dropped on load
};

// Shared builders; the loaders and the synthetic generator both go
// through these so that interning order is identical for in-memory and
// reloaded data.
Corpus build_corpus(
    const std::vector<std::pair<std::optional<std::uint64_t>,
                                std::vector<std::string>>>& raw_docs);
// Appends `count` occurrences of the query given by `raw_terms` (interning
// new terms into `vocab`); call `finalize_query_log` once done.
class QueryLogBuilder {
 public:
  explicit QueryLogBuilder(Vocab* vocab) : vocab_(vocab) {}
  // Empty term lists are counted as skipped, not added.
  void add(const std::vector<std::string>& raw_terms, std::uint64_t count);
  void add_terms(std::vector<TermId> terms, std::uint64_t count);
  QueryLog finalize();

 private:
  Vocab* vocab_;
  std::vector<Query> queries_;
  std::uint64_t skipped_ = 0;
};

Corpus load_corpus(const std::string& path);
QueryLog load_query_log(const std::string& path, Vocab& vocab);

void save_corpus(const Corpus& corpus, const std::string& path);
void save_query_log(const QueryLog& log, const Vocab& vocab,
                    const std::string& path);

}  // namespace tierforge
