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

#include "tierforge/matchengine.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace tierforge {

Clause make_clause(std::vector<TermId> terms) {
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  if (terms.empty()) throw std::invalid_argument("empty clause");
  return Clause{std::move(terms)};
}

bool clause_canonical_less(const Clause& a, const Clause& b) {
  if (a.terms.size() != b.terms.size())
    return a.terms.size() < b.terms.size();
  return a.terms < b.terms;
}

InvertedIndex InvertedIndex::build(const Corpus& corpus,
                                   std::size_t dense_threshold) {
  InvertedIndex index;
  index.n_docs_ = corpus.n_docs();
  index.rep_ = DocSet::pick_rep(index.n_docs_, dense_threshold);
  index.empty_ = DocSet::empty(index.n_docs_, index.rep_);
  index.postings_.assign(corpus.vocab.size(),
                         DocSet::empty(index.n_docs_, index.rep_));
  for (const Document& doc : corpus.documents)
    for (TermId t : doc.terms) index.postings_[t].append(doc.doc_id);
  return index;
}

DocSet InvertedIndex::match(const std::vector<TermId>& terms,
                            DocSet::Rep out_rep) const {
  if (terms.empty()) throw std::invalid_argument("empty query");
  std::vector<const DocSet*> lists;
  lists.reserve(terms.size());
  for (TermId t : terms) {
    const DocSet& p = posting(t);
    if (p.empty_set()) return DocSet::empty(n_docs_, out_rep);
    lists.push_back(&p);
  }
  std::sort(lists.begin(), lists.end(), [](const DocSet* a, const DocSet* b) {
    return a->count() < b->count();
  });
  DocSet result = *lists.front();
  for (std::size_t i = 1; i < lists.size() && !result.empty_set(); ++i)
    result = result.intersect(*lists[i]);
  return result.to_rep(out_rep);
}

ClauseIndex::ClauseIndex(std::vector<Clause> clauses)
    : clauses_(std::move(clauses)) {
  clause_len_.reserve(clauses_.size());
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    const Clause& c = clauses_[i];
    if (c.terms.empty()) throw std::invalid_argument("empty clause");
    clause_len_.push_back(static_cast<std::uint32_t>(c.terms.size()));
    for (TermId t : c.terms)
      by_term_[t].push_back(static_cast<std::uint32_t>(i));
  }
}

bool ClauseIndex::any_subset_of(const std::vector<TermId>& terms) const {
  if (clauses_.empty()) return false;
  std::vector<std::uint32_t> hits(clauses_.size(), 0);
  for (TermId t : terms) {
    auto it = by_term_.find(t);
    if (it == by_term_.end()) continue;
    for (std::uint32_t ci : it->second)
      if (++hits[ci] == clause_len_[ci]) return true;
  }
  return false;
}

void ClauseIndex::matching_clauses(const std::vector<TermId>& terms,
                                   HitScratch& scratch,
                                   std::vector<std::uint32_t>& out) const {
  out.clear();
  if (scratch.hits.size() != clauses_.size()) {
    scratch.hits.assign(clauses_.size(), 0);
    scratch.epoch_of.assign(clauses_.size(), 0);
    scratch.epoch = 0;
  }
  ++scratch.epoch;
  for (TermId t : terms) {
    auto it = by_term_.find(t);
    if (it == by_term_.end()) continue;
    for (std::uint32_t ci : it->second) {
      if (scratch.epoch_of[ci] != scratch.epoch) {
        scratch.epoch_of[ci] = scratch.epoch;
        scratch.hits[ci] = 0;
      }
      if (++scratch.hits[ci] == clause_len_[ci]) out.push_back(ci);
    }
  }
  std::sort(out.begin(), out.end());
}

void save_clauses(std::vector<Clause> clauses, const Vocab& vocab,
                  const std::string& path) {
  std::sort(clauses.begin(), clauses.end(), clause_canonical_less);
  std::ofstream out(path);
  if (!out) throw DataError("cannot write clause file: " + path);
  for (const Clause& c : clauses) {
    const char* sep = "";
    for (TermId t : c.terms) {
      out << sep << vocab.term(t);
      sep = " ";
    }
    out << '\n';
  }
  if (!out) throw DataError("write failed: " + path);
}

std::vector<Clause> load_clauses(const std::string& path, Vocab& vocab) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open clause file: " + path);
  std::vector<Clause> clauses;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<TermId> terms;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
        ++pos;
      const std::size_t start = pos;
      while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
      if (pos > start)
        terms.push_back(vocab.intern(
            std::string_view(line).substr(start, pos - start)));
    }
    if (terms.empty())
      throw DataError(path + ":" + std::to_string(line_no) + ": empty clause");
    clauses.push_back(make_clause(std::move(terms)));
  }
  return clauses;
}

}  // namespace tierforge
