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

#include "tierforge/clauseminer.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>
#include <unordered_map>

#include "tierforge/rational.hpp"

namespace tierforge {

namespace {

using Transaction = std::pair<std::vector<TermId>, std::uint64_t>;

struct FPTree {
  struct Node {
    TermId item = 0;
    std::uint64_t count = 0;
    std::uint32_t parent = 0;
  };

  std::vector<Node> nodes;
  // Children as (item, node) pairs per node; fanout is small below the
  // root, and the root's list is scanned once per transaction.
  std::vector<std::vector<std::pair<TermId, std::uint32_t>>> children;
  std::unordered_map<TermId, std::vector<std::uint32_t>> header;

  FPTree() : nodes(1), children(1) {}

  // `items` must be ordered by this tree's item rank.
  void insert(const std::vector<TermId>& items, std::uint64_t weight) {
    std::uint32_t cur = 0;
    for (TermId item : items) {
      std::uint32_t next = 0;
      for (const auto& [child_item, child] : children[cur]) {
        if (child_item == item) {
          next = child;
          break;
        }
      }
      if (next == 0) {
        next = static_cast<std::uint32_t>(nodes.size());
        nodes.push_back(Node{item, 0, cur});
        children.emplace_back();
        children[cur].emplace_back(item, next);
        header[item].push_back(next);
      }
      nodes[next].count += weight;
      cur = next;
    }
  }
};

// Mines all frequent itemsets of the projected transactions that extend
// `suffix`, up to max_len total items. Transactions hold only items still
// eligible at this projection level.
void mine_projection(const std::vector<Transaction>& txns,
                     std::uint64_t threshold, std::uint32_t max_len,
                     std::vector<TermId>& suffix,
                     std::vector<MinedClause>& out) {
  std::unordered_map<TermId, std::uint64_t> support;
  for (const auto& [items, weight] : txns)
    for (TermId item : items) support[item] += weight;

  // Frequent items ranked by support descending, then id ascending; the
  // rank is deterministic and orders every tree path.
  std::vector<std::pair<TermId, std::uint64_t>> frequent;
  for (const auto& [item, s] : support)
    if (s >= threshold) frequent.emplace_back(item, s);
  if (frequent.empty()) return;
  std::sort(frequent.begin(), frequent.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return a.first < b.first;
            });
  std::unordered_map<TermId, std::uint32_t> rank;
  for (std::uint32_t r = 0; r < frequent.size(); ++r)
    rank.emplace(frequent[r].first, r);

  FPTree tree;
  std::vector<TermId> filtered;
  for (const auto& [items, weight] : txns) {
    filtered.clear();
    for (TermId item : items)
      if (rank.count(item) != 0) filtered.push_back(item);
    if (filtered.empty()) continue;
    std::sort(filtered.begin(), filtered.end(), [&](TermId a, TermId b) {
      return rank.at(a) < rank.at(b);
    });
    tree.insert(filtered, weight);
  }

  // Least-frequent items first; each item's conditional base contains only
  // higher-ranked items, so every itemset is produced exactly once.
  const bool extend = suffix.size() + 1 <
                      static_cast<std::size_t>(max_len);
  for (auto it = frequent.rbegin(); it != frequent.rend(); ++it) {
    const auto [item, item_support] = *it;
    suffix.push_back(item);
    std::vector<TermId> terms(suffix);
    std::sort(terms.begin(), terms.end());
    out.push_back(MinedClause{Clause{std::move(terms)}, item_support});
    if (extend) {
      std::vector<Transaction> base;
      for (std::uint32_t node : tree.header.at(item)) {
        std::vector<TermId> path;
        for (std::uint32_t cur = tree.nodes[node].parent; cur != 0;
             cur = tree.nodes[cur].parent)
          path.push_back(tree.nodes[cur].item);
        if (!path.empty())
          base.emplace_back(std::move(path), tree.nodes[node].count);
      }
      if (!base.empty())
        mine_projection(base, threshold, max_len, suffix, out);
    }
    suffix.pop_back();
  }
}

}  // namespace

std::uint64_t support_threshold(const MinerConfig& cfg, std::uint64_t n) {
  return ceil_mul_div(n, cfg.support_num, cfg.support_den);
}

std::vector<MinedClause> mine_candidates(const QueryLog& log,
                                         const MinerConfig& cfg) {
  if (cfg.support_num == 0 || cfg.support_num > cfg.support_den)
    throw std::invalid_argument("min_support must be in (0, 1]");
  if (cfg.max_clause_len == 0)
    throw std::invalid_argument("max_clause_len must be >= 1");

  const std::uint64_t threshold = support_threshold(cfg, log.total_weight);
  std::vector<Transaction> txns;
  txns.reserve(log.queries.size());
  for (const Query& q : log.queries) txns.emplace_back(q.terms, q.weight);

  std::vector<MinedClause> out;
  std::vector<TermId> suffix;
  mine_projection(txns, threshold, cfg.max_clause_len, suffix, out);

  std::sort(out.begin(), out.end(), [](const MinedClause& a,
                                       const MinedClause& b) {
    if (a.support != b.support) return a.support > b.support;
    return clause_canonical_less(a.clause, b.clause);
  });
  if (cfg.max_candidates && out.size() > *cfg.max_candidates)
    out.resize(*cfg.max_candidates);
  return out;
}

std::vector<Clause> strip_support(std::vector<MinedClause> mined) {
  std::vector<Clause> clauses;
  clauses.reserve(mined.size());
  for (MinedClause& mc : mined) clauses.push_back(std::move(mc.clause));
  return clauses;
}

void save_candidates(const std::vector<MinedClause>& mined, const Vocab& vocab,
                     const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write candidate file: " + path);
  for (const MinedClause& mc : mined) {
    const char* sep = "";
    for (TermId t : mc.clause.terms) {
      out << sep << vocab.term(t);
      sep = " ";
    }
    out << '\t' << mc.support << '\n';
  }
  if (!out) throw DataError("write failed: " + path);
}

std::vector<MinedClause> load_candidates(const std::string& path,
                                         Vocab& vocab) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open candidate file: " + path);
  std::vector<MinedClause> mined;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::size_t tab = line.find('\t');
    const std::string clause_part =
        tab == std::string::npos ? line : line.substr(0, tab);

    std::vector<TermId> terms;
    std::size_t pos = 0;
    while (pos < clause_part.size()) {
      const std::size_t next = clause_part.find(' ', pos);
      const std::size_t end =
          next == std::string::npos ? clause_part.size() : next;
      if (end > pos)
        terms.push_back(vocab.intern(clause_part.substr(pos, end - pos)));
      pos = end + 1;
    }
    if (terms.empty())
      throw DataError(path + ":" + std::to_string(line_no) +
                      ": empty clause in candidate file");

    MinedClause mc;
    mc.clause = make_clause(std::move(terms));
    if (tab != std::string::npos) {
      const std::string support_part = line.substr(tab + 1);
      const char* begin = support_part.data();
      const char* end = begin + support_part.size();
      const auto [ptr, ec] = std::from_chars(begin, end, mc.support);
      if (ec != std::errc{} || ptr != end)
        throw DataError(path + ":" + std::to_string(line_no) +
                        ": malformed support column");
    }
    mined.push_back(std::move(mc));
  }
  return mined;
}

}  // namespace tierforge
