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

#include "tierforge/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>

namespace tierforge {

namespace {

std::string fold_case(std::string_view term) {
  std::string folded(term);
  for (char& ch : folded)
    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return folded;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
      ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t') ++pos;
    if (pos > start) tokens.emplace_back(text.substr(start, pos - start));
  }
  return tokens;
}

bool parse_u64(std::string_view text, std::uint64_t& out) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

// Reads all lines, stripping a trailing '\r' if present.
std::vector<std::string> read_lines(const std::string& path,
                                    const char* what) {
  std::ifstream in(path);
  if (!in)
    throw DataError(std::string("cannot open ") + what + " file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<TermId> intern_sorted(const std::vector<std::string>& raw_terms,
                                  Vocab& vocab) {
  std::vector<TermId> terms;
  terms.reserve(raw_terms.size());
  for (const std::string& raw : raw_terms) terms.push_back(vocab.intern(raw));
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  return terms;
}

std::string at_line(const std::string& path, std::uint64_t line_no) {
  return path + ":" + std::to_string(line_no) + ": ";
}

}  // namespace

TermId Vocab::intern(std::string_view term) {
  std::string folded = fold_case(term);
  auto it = ids_.find(folded);
  if (it != ids_.end()) return it->second;
  const TermId id = static_cast<TermId>(terms_.size());
  ids_.emplace(folded, id);
  terms_.push_back(std::move(folded));
  return id;
}

std::optional<TermId> Vocab::lookup(std::string_view term) const {
  auto it = ids_.find(fold_case(term));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

Corpus build_corpus(
    const std::vector<std::pair<std::optional<std::uint64_t>,
                                std::vector<std::string>>>& raw_docs) {
  if (raw_docs.empty()) throw DataError("empty corpus");
  Corpus corpus;
  std::vector<Document> loaded;
  loaded.reserve(raw_docs.size());
  for (const auto& [explicit_id, raw_terms] : raw_docs) {
    Document doc;
    doc.doc_id = static_cast<DocId>(explicit_id.value_or(loaded.size()));
    doc.terms = intern_sorted(raw_terms, corpus.vocab);
    if (doc.terms.empty()) throw DataError("empty document");
    loaded.push_back(std::move(doc));
  }

  // doc_ids must form exactly 0..n_docs-1.
  corpus.documents.resize(loaded.size());
  std::vector<char> seen(loaded.size(), 0);
  for (Document& doc : loaded) {
    if (doc.doc_id >= corpus.documents.size())
      throw DataError("doc_id " + std::to_string(doc.doc_id) +
                      " out of range (ids must be 0.." +
                      std::to_string(corpus.documents.size() - 1) + ")");
    if (seen[doc.doc_id])
      throw DataError("duplicate doc_id " + std::to_string(doc.doc_id));
    seen[doc.doc_id] = 1;
    corpus.documents[doc.doc_id] = std::move(doc);
  }
  return corpus;
}

Corpus load_corpus(const std::string& path) {
  const std::vector<std::string> lines = read_lines(path, "corpus");
  std::vector<std::pair<std::optional<std::uint64_t>,
                        std::vector<std::string>>>
      raw_docs;
  std::unordered_map<std::uint64_t, std::uint64_t> id_to_line;
  std::uint64_t line_no = 0;
  for (const std::string& line : lines) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw DataError(at_line(path, line_no) +
                      "missing doc_id column (expected doc_id<TAB>terms)");
    const std::string_view id_col = std::string_view(line).substr(0, tab);
    std::uint64_t doc_id = raw_docs.size();
    if (id_col != "-" && !parse_u64(id_col, doc_id))
      throw DataError(at_line(path, line_no) + "malformed doc_id '" +
                      std::string(id_col) + "'");
    auto [it, inserted] = id_to_line.emplace(doc_id, line_no);
    if (!inserted)
      throw DataError(at_line(path, line_no) + "duplicate doc_id " +
                      std::to_string(doc_id) + " (first seen at line " +
                      std::to_string(it->second) + ")");
    std::vector<std::string> raw_terms =
        tokenize(std::string_view(line).substr(tab + 1));
    if (raw_terms.empty())
      throw DataError(at_line(path, line_no) + "empty document");
    raw_docs.emplace_back(doc_id, std::move(raw_terms));
  }
  if (raw_docs.empty()) throw DataError("empty corpus: " + path);
  return build_corpus(raw_docs);
}

void QueryLogBuilder::add(const std::vector<std::string>& raw_terms,
                          std::uint64_t count) {
  add_terms(intern_sorted(raw_terms, *vocab_), count);
}

void QueryLogBuilder::add_terms(std::vector<TermId> terms,
                                std::uint64_t count) {
  if (terms.empty()) {
    ++skipped_;
    return;
  }
  queries_.push_back(Query{std::move(terms), count});
}

QueryLog QueryLogBuilder::finalize() {
  std::sort(queries_.begin(), queries_.end(),
            [](const Query& a, const Query& b) { return a.terms < b.terms; });
  QueryLog log;
  log.skipped_lines = skipped_;
  for (Query& q : queries_) {
    log.total_weight += q.weight;
    if (!log.queries.empty() && log.queries.back().terms == q.terms) {
      log.queries.back().weight += q.weight;
    } else {
      log.queries.push_back(std::move(q));
    }
  }
  return log;
}

QueryLog load_query_log(const std::string& path, Vocab& vocab) {
  const std::vector<std::string> lines = read_lines(path, "query log");
  QueryLogBuilder builder(&vocab);
  std::uint64_t line_no = 0;
  for (const std::string& line : lines) {
    ++line_no;
    if (!line.empty() && line[0] == '#') continue;
    std::uint64_t count = 1;
    std::string_view terms_part(line);
    const std::size_t tab = line.find('\t');
    if (tab != std::string::npos) {
      const std::string_view count_col = std::string_view(line).substr(0, tab);
      if (!parse_u64(count_col, count) || count == 0)
        throw DataError(at_line(path, line_no) + "malformed count '" +
                        std::string(count_col) +
                        "' (expected positive integer)");
      terms_part = std::string_view(line).substr(tab + 1);
    }
    builder.add(tokenize(terms_part), count);
  }
  QueryLog log = builder.finalize();
  if (log.queries.empty()) throw DataError("empty query log: " + path);
  return log;
}

void save_corpus(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write corpus file: " + path);
  for (const Document& doc : corpus.documents) {
    out << doc.doc_id;
    char sep = '\t';
    for (TermId t : doc.terms) {
      out << sep << corpus.vocab.term(t);
      sep = ' ';
    }
    out << '\n';
  }
  if (!out) throw DataError("write failed: " + path);
}

void save_query_log(const QueryLog& log, const Vocab& vocab,
                    const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write query log file: " + path);
  for (const Query& q : log.queries) {
    out << q.weight;
    char sep = '\t';
    for (TermId t : q.terms) {
      out << sep << vocab.term(t);
      sep = ' ';
    }
    out << '\n';
  }
  if (!out) throw DataError("write failed: " + path);
}

}  // namespace tierforge
