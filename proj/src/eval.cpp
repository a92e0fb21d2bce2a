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

#include "tierforge/eval.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "json.hpp"

namespace tierforge {

namespace {

std::string ratio_text(std::uint64_t num, std::uint64_t den) {
  char buf[32];
  const double r = den == 0 ? 0.0
                            : static_cast<double>(num) /
                                  static_cast<double>(den);
  std::snprintf(buf, sizeof(buf), "%.6f", r);
  return buf;
}

struct TermVecHash {
  std::size_t operator()(const std::vector<TermId>& terms) const {
    std::uint64_t h = 1469598103934665603ull;
    for (TermId t : terms) {
      h ^= t;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

ClauseAssignment::ClauseAssignment(std::vector<Clause> clauses,
                                   const InvertedIndex& index)
    : clauses_(std::move(clauses)),
      tier1_(DocSet::empty(index.n_docs(),
                           DocSet::pick_rep(index.n_docs()))) {
  for (const Clause& c : clauses_.clauses())
    tier1_.union_in(index.match(c.terms));
}

int ClauseAssignment::classify_query(const std::vector<TermId>& terms) const {
  return clauses_.classify_query(terms);
}

CoverageReport evaluate(const TierAssignment& assignment,
                        const QueryLog& train, const QueryLog& test,
                        const InvertedIndex& index, std::uint64_t budget,
                        ThreadPool* pool) {
  CoverageReport report;
  report.n_docs = index.n_docs();
  report.budget = budget;
  report.tier1_docs = assignment.tier1_docs().count();

  std::vector<std::vector<TermId>> violators;
  const auto scan = [&](const QueryLog& log, std::uint64_t& num,
                        std::uint64_t& den) {
    den = log.total_weight;
    const std::size_t nq = log.queries.size();
    std::vector<char> tier1(nq, 0);
    std::vector<char> violates(nq, 0);
    const auto worker = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        const Query& q = log.queries[i];
        if (assignment.classify_query(q.terms) != 1) continue;
        tier1[i] = 1;
        const DocSet m = index.match(q.terms, DocSet::Rep::kSparse);
        if (m.count_missing_in(assignment.tier1_docs()) != 0) violates[i] = 1;
      }
    };
    if (pool != nullptr)
      pool->parallel_for(nq, worker);
    else
      worker(0, nq);
    for (std::size_t i = 0; i < nq; ++i) {
      if (tier1[i]) num += log.queries[i].weight;
      if (violates[i]) violators.push_back(log.queries[i].terms);
    }
  };
  scan(train, report.train_num, report.train_den);
  scan(test, report.test_num, report.test_den);

  std::sort(violators.begin(), violators.end());
  violators.erase(std::unique(violators.begin(), violators.end()),
                  violators.end());
  report.violations = violators.size();
  return report;
}

std::string report_txt(const CoverageReport& report) {
  std::string out;
  const auto row = [&out](const std::string& key, const std::string& value) {
    out += key;
    out += '=';
    out += value;
    out += '\n';
  };
  row("budget", std::to_string(report.budget));
  row("n_docs", std::to_string(report.n_docs));
  row("tier1_docs", std::to_string(report.tier1_docs));
  row("train_coverage", std::to_string(report.train_num) + "/" +
                            std::to_string(report.train_den));
  row("train_coverage_ratio", ratio_text(report.train_num, report.train_den));
  row("test_coverage", std::to_string(report.test_num) + "/" +
                           std::to_string(report.test_den));
  row("test_coverage_ratio", ratio_text(report.test_num, report.test_den));
  row("violations", std::to_string(report.violations));
  for (const auto& [key, value] : report.extra) row(key, value);
  return out;
}

void write_report_txt(const CoverageReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write report: " + path);
  out << report_txt(report);
  if (!out) throw DataError("write failed: " + path);
}

void write_report_json(const CoverageReport& report, const std::string& path) {
  nlohmann::json j;
  j["budget"] = report.budget;
  j["n_docs"] = report.n_docs;
  j["tier1_docs"] = report.tier1_docs;
  j["train_coverage_num"] = report.train_num;
  j["train_coverage_den"] = report.train_den;
  j["train_coverage_ratio"] =
      report.train_den == 0
          ? 0.0
          : static_cast<double>(report.train_num) / report.train_den;
  j["test_coverage_num"] = report.test_num;
  j["test_coverage_den"] = report.test_den;
  j["test_coverage_ratio"] =
      report.test_den == 0
          ? 0.0
          : static_cast<double>(report.test_num) / report.test_den;
  j["violations"] = report.violations;
  for (const auto& [key, value] : report.extra) {
    // Integral and boolean extras keep their natural JSON type.
    if (value == "true" || value == "false") {
      j[key] = value == "true";
      continue;
    }
    std::uint64_t as_int = 0;
    const char* begin = value.data();
    const char* end = begin + value.size();
    const auto [ptr, ec] = std::from_chars(begin, end, as_int);
    if (ec == std::errc{} && ptr == end && !value.empty())
      j[key] = as_int;
    else
      j[key] = value;
  }
  std::ofstream out(path);
  if (!out) throw DataError("cannot write report: " + path);
  out << j.dump(2) << '\n';
  if (!out) throw DataError("write failed: " + path);
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Discrete power-law sampler over ranks 1..n with quantized integer
// weights, so a seed fully determines the draw sequence.
class ZipfSampler {
 public:
  ZipfSampler(std::size_t n, double s) {
    cum_.reserve(n);
    std::uint64_t total = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      const double w = std::pow(static_cast<double>(k), -s);
      std::uint64_t q = static_cast<std::uint64_t>(
          std::llround(w * static_cast<double>(std::uint64_t{1} << 40)));
      if (q == 0) q = 1;
      total += q;
      cum_.push_back(total);
    }
  }

  // 0-based rank; modulo draw keeps the sequence platform-independent.
  std::size_t sample(std::mt19937_64& rng) const {
    const std::uint64_t u = rng() % cum_.back();
    return static_cast<std::size_t>(
        std::upper_bound(cum_.begin(), cum_.end(), u) - cum_.begin());
  }

 private:
  std::vector<std::uint64_t> cum_;
};

std::uint64_t uniform_in(std::mt19937_64& rng, std::uint64_t lo,
                         std::uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

std::size_t rng_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

void validate_config(const SynthConfig& c) {
  const auto fail = [](const char* what) {
    throw std::invalid_argument(std::string("synthetic config: ") + what);
  };
  if (c.n_docs == 0) fail("n_docs must be positive");
  if (c.vocab_size == 0) fail("vocab_size must be positive");
  if (c.doc_len_min == 0 || c.doc_len_max < c.doc_len_min)
    fail("document length range is empty");
  if (c.doc_len_max > c.vocab_size)
    fail("doc_len_max exceeds the vocabulary size");
  if (c.query_len_min == 0 || c.query_len_max < c.query_len_min)
    fail("query length range is empty");
  if (c.intent_len_max == 0) fail("intent_len_max must be positive");
  if ((c.n_train > 0 || c.n_test > 0) && c.n_intents == 0)
    fail("n_intents must be positive when queries are generated");
  if (c.noise_pct > 100) fail("noise_pct must be at most 100");
  if (!(c.zipf_s >= 0.0)) fail("zipf_s must be non-negative");
}

}  // namespace

SynthData generate_synthetic(const SynthConfig& config) {
  validate_config(config);

  std::vector<std::string> term_names(config.vocab_size);
  {
    int width = 1;
    for (std::size_t v = config.vocab_size - 1; v >= 10; v /= 10) ++width;
    char buf[32];
    for (std::size_t k = 0; k < config.vocab_size; ++k) {
      std::snprintf(buf, sizeof(buf), "t%0*zu", width, k);
      term_names[k] = buf;
    }
  }

  std::uint64_t seed_state = config.seed;
  std::mt19937_64 doc_rng(splitmix64(seed_state));
  std::mt19937_64 intent_rng(splitmix64(seed_state));
  std::mt19937_64 train_rng(splitmix64(seed_state));
  std::mt19937_64 test_rng(splitmix64(seed_state));

  const ZipfSampler term_zipf(config.vocab_size, config.zipf_s);

  // Documents: distinct Zipf-drawn terms, most-popular ranks first in the
  // vocabulary, so postings have realistic skew.
  std::vector<std::pair<std::optional<std::uint64_t>,
                        std::vector<std::string>>> raw_docs;
  raw_docs.reserve(config.n_docs);
  std::vector<char> seen(config.vocab_size, 0);
  for (std::size_t d = 0; d < config.n_docs; ++d) {
    const std::size_t len = static_cast<std::size_t>(
        uniform_in(doc_rng, config.doc_len_min, config.doc_len_max));
    std::vector<std::size_t> drawn;
    drawn.reserve(len);
    while (drawn.size() < len) {
      const std::size_t k = term_zipf.sample(doc_rng);
      if (seen[k]) continue;
      seen[k] = 1;
      drawn.push_back(k);
    }
    std::vector<std::string> terms;
    terms.reserve(len);
    for (std::size_t k : drawn) {
      terms.push_back(term_names[k]);
      seen[k] = 0;
    }
    raw_docs.emplace_back(static_cast<std::uint64_t>(d), std::move(terms));
  }

  // Intents: small term subsets of real documents, so every intent query
  // has a non-empty match set.
  struct Intent {
    std::size_t doc = 0;
    std::vector<std::string> terms;
  };
  std::vector<Intent> intents;
  if (config.n_train > 0 || config.n_test > 0) {
    intents.reserve(config.n_intents);
    for (std::size_t i = 0; i < config.n_intents; ++i) {
      Intent intent;
      intent.doc = static_cast<std::size_t>(
          uniform_in(intent_rng, 0, config.n_docs - 1));
      const std::vector<std::string>& doc_terms = raw_docs[intent.doc].second;
      const std::size_t len = static_cast<std::size_t>(uniform_in(
          intent_rng, 1,
          std::min(config.intent_len_max, doc_terms.size())));
      while (intent.terms.size() < len) {
        const std::string& t =
            doc_terms[rng_index(intent_rng, doc_terms.size())];
        if (std::find(intent.terms.begin(), intent.terms.end(), t) ==
            intent.terms.end())
          intent.terms.push_back(t);
      }
      intents.push_back(std::move(intent));
    }
  }

  const ZipfSampler intent_zipf(std::max<std::size_t>(config.n_intents, 1),
                                config.zipf_s);
  const auto make_query = [&](std::mt19937_64& rng) {
    const std::size_t it = intent_zipf.sample(rng);
    std::vector<std::string> q = intents[it].terms;
    const std::size_t target = static_cast<std::size_t>(
        uniform_in(rng, config.query_len_min, config.query_len_max));
    std::size_t guard = 0;
    while (q.size() < target && guard++ < 64) {
      std::string t;
      if (rng() % 100 < config.noise_pct) {
        t = term_names[term_zipf.sample(rng)];
      } else {
        const std::vector<std::string>& src = raw_docs[intents[it].doc].second;
        t = src[rng_index(rng, src.size())];
      }
      if (std::find(q.begin(), q.end(), t) == q.end()) q.push_back(std::move(t));
    }
    return q;
  };

  SynthData data;
  data.corpus = build_corpus(raw_docs);

  QueryLogBuilder train_builder(&data.corpus.vocab);
  for (std::size_t i = 0; i < config.n_train; ++i)
    train_builder.add(make_query(train_rng), 1);
  data.train = train_builder.finalize();

  QueryLogBuilder test_builder(&data.corpus.vocab);
  for (std::size_t i = 0; i < config.n_test; ++i)
    test_builder.add(make_query(test_rng), 1);
  data.test = test_builder.finalize();

  std::unordered_set<std::vector<TermId>, TermVecHash> train_set;
  train_set.reserve(data.train.queries.size() * 2);
  for (const Query& q : data.train.queries) train_set.insert(q.terms);
  data.novel_den = data.test.total_weight;
  for (const Query& q : data.test.queries)
    if (train_set.find(q.terms) == train_set.end()) data.novel_num += q.weight;
  return data;
}

}  // namespace tierforge
