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

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "testutil.hpp"
#include "tierforge/clauseminer.hpp"

namespace {

using namespace tierforge;

constexpr TermId kRed = 0, kShirt = 1;

std::vector<std::pair<std::vector<TermId>, std::uint64_t>> as_pairs(
    const std::vector<MinedClause>& mined) {
  std::vector<std::pair<std::vector<TermId>, std::uint64_t>> out;
  for (const MinedClause& mc : mined)
    out.emplace_back(mc.clause.terms, mc.support);
  return out;
}

}  // namespace

TEST_SUITE("clauseminer") {

TEST_CASE("support threshold rounds up with exact integer arithmetic") {
  MinerConfig cfg;
  cfg.support_num = 7;
  cfg.support_den = 100;
  // Floating point would give ceil(0.07 * 100) = ceil(7.000000000000001) = 8.
  CHECK(support_threshold(cfg, 100) == 7);
  CHECK(support_threshold(cfg, 101) == 8);   // ceil(7.07)
  cfg.support_num = 1;
  cfg.support_den = 2;
  CHECK(support_threshold(cfg, 6) == 3);
  CHECK(support_threshold(cfg, 7) == 4);
  cfg.support_num = 1;
  cfg.support_den = 1000000;
  CHECK(support_threshold(cfg, 6) == 1);  // never below one occurrence
  cfg.support_num = 1;
  cfg.support_den = 1;
  CHECK(support_threshold(cfg, 5) == 5);
}

TEST_CASE("the toy log at half support yields three clauses in order") {
  const testutil::ToyInstance toy = testutil::make_toy();
  MinerConfig cfg;
  cfg.support_num = 1;
  cfg.support_den = 2;
  cfg.max_clause_len = 2;
  const std::vector<MinedClause> mined = mine_candidates(toy.log, cfg);
  // Threshold ceil(6/2) = 3: {red} 4, {shirt} 3, {red,shirt} 3; everything
  // involving blue/pants has weight 2 < 3.
  REQUIRE(mined.size() == 3);
  CHECK(mined[0].clause.terms == std::vector<TermId>{kRed});
  CHECK(mined[0].support == 4);
  CHECK(mined[1].clause.terms == std::vector<TermId>{kShirt});
  CHECK(mined[1].support == 3);
  CHECK(mined[2].clause.terms == std::vector<TermId>{kRed, kShirt});
  CHECK(mined[2].support == 3);

  cfg.max_clause_len = 1;
  const std::vector<MinedClause> short_only = mine_candidates(toy.log, cfg);
  REQUIRE(short_only.size() == 2);
  CHECK(short_only[0].clause.terms == std::vector<TermId>{kRed});
  CHECK(short_only[1].clause.terms == std::vector<TermId>{kShirt});
}

TEST_CASE("threshold one enumerates every subset up to the length cap") {
  const testutil::ToyInstance toy = testutil::make_toy();
  MinerConfig cfg;
  cfg.support_num = 1;
  cfg.support_den = toy.log.total_weight;
  cfg.max_clause_len = 2;
  const std::vector<MinedClause> mined = mine_candidates(toy.log, cfg);
  CHECK(as_pairs(mined) == testutil::brute_mine(toy.log, 1, 2));
}

TEST_CASE("mining equals the brute-force reference on random logs") {
  std::mt19937_64 rng(0x91ef);
  for (int round = 0; round < 80; ++round) {
    const testutil::RandomInstance inst = testutil::make_random_instance(rng);
    MinerConfig cfg;
    cfg.support_num = 1 + rng() % 4;
    cfg.support_den = 1 + inst.log.total_weight / (1 + rng() % 3);
    if (cfg.support_num > cfg.support_den) cfg.support_num = cfg.support_den;
    cfg.max_clause_len = 1 + rng() % 3;
    const std::uint64_t threshold =
        support_threshold(cfg, inst.log.total_weight);
    CHECK(as_pairs(mine_candidates(inst.log, cfg)) ==
          testutil::brute_mine(inst.log, threshold, cfg.max_clause_len));
  }
}

TEST_CASE("every subset of a mined clause is also mined") {
  std::mt19937_64 rng(0xa11d);
  for (int round = 0; round < 20; ++round) {
    const testutil::RandomInstance inst = testutil::make_random_instance(rng);
    MinerConfig cfg;
    cfg.support_num = 1 + rng() % 3;
    cfg.support_den = inst.log.total_weight;
    cfg.max_clause_len = 3;
    const std::vector<MinedClause> mined = mine_candidates(inst.log, cfg);
    std::set<std::vector<TermId>> present;
    for (const MinedClause& mc : mined) present.insert(mc.clause.terms);
    for (const MinedClause& mc : mined) {
      const std::vector<TermId>& terms = mc.clause.terms;
      for (std::size_t skip = 0; skip < terms.size(); ++skip) {
        if (terms.size() == 1) continue;
        std::vector<TermId> sub;
        for (std::size_t i = 0; i < terms.size(); ++i)
          if (i != skip) sub.push_back(terms[i]);
        CHECK(present.count(sub) == 1);
      }
    }
  }
}

TEST_CASE("max_candidates truncates without reordering") {
  const testutil::ToyInstance toy = testutil::make_toy();
  MinerConfig cfg;
  cfg.support_num = 1;
  cfg.support_den = 6;
  cfg.max_clause_len = 2;
  const std::vector<MinedClause> full = mine_candidates(toy.log, cfg);
  REQUIRE(full.size() > 2);
  cfg.max_candidates = 2;
  const std::vector<MinedClause> capped = mine_candidates(toy.log, cfg);
  REQUIRE(capped.size() == 2);
  auto full_pairs = as_pairs(full);
  full_pairs.resize(2);
  CHECK(as_pairs(capped) == full_pairs);
}

TEST_CASE("invalid miner configurations are rejected") {
  const testutil::ToyInstance toy = testutil::make_toy();
  MinerConfig cfg;
  cfg.support_num = 0;
  CHECK_THROWS_AS(mine_candidates(toy.log, cfg), std::invalid_argument);
  cfg.support_num = 3;
  cfg.support_den = 2;  // above one
  CHECK_THROWS_AS(mine_candidates(toy.log, cfg), std::invalid_argument);
  cfg.support_num = 1;
  cfg.support_den = 2;
  cfg.max_clause_len = 0;
  CHECK_THROWS_AS(mine_candidates(toy.log, cfg), std::invalid_argument);
}

TEST_CASE("candidate files round-trip with their supports") {
  testutil::ToyInstance toy = testutil::make_toy();
  MinerConfig cfg;
  cfg.support_num = 1;
  cfg.support_den = 2;
  cfg.max_clause_len = 2;
  const std::vector<MinedClause> mined = mine_candidates(toy.log, cfg);

  testutil::TempDir dir;
  save_candidates(mined, toy.corpus.vocab, dir.file("cands.txt"));
  CHECK(testutil::read_file(dir.file("cands.txt")) ==
        "red\t4\nshirt\t3\nred shirt\t3\n");

  const std::vector<MinedClause> loaded =
      load_candidates(dir.file("cands.txt"), toy.corpus.vocab);
  CHECK(as_pairs(loaded) == as_pairs(mined));
}

TEST_CASE("load_candidates tolerates missing supports, rejects malformed") {
  testutil::ToyInstance toy = testutil::make_toy();
  testutil::TempDir dir;
  testutil::write_file(dir.file("plain.txt"),
                       "# comment\nred shirt\n\nblue\t7\n");
  const std::vector<MinedClause> loaded =
      load_candidates(dir.file("plain.txt"), toy.corpus.vocab);
  REQUIRE(loaded.size() == 2);
  CHECK(loaded[0].clause.terms == std::vector<TermId>{0, 1});
  CHECK(loaded[0].support == 0);
  CHECK(loaded[1].clause.terms == std::vector<TermId>{3});
  CHECK(loaded[1].support == 7);

  testutil::write_file(dir.file("bad.txt"), "red\tnotanumber\n");
  CHECK_THROWS_AS(load_candidates(dir.file("bad.txt"), toy.corpus.vocab),
                  DataError);
  CHECK(strip_support(loaded).size() == 2);
}

}  // TEST_SUITE
