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
#include <string>
#include <vector>

#include "doctest.h"
#include "testutil.hpp"
#include "tierforge/scsk.hpp"

namespace {

using namespace tierforge;

constexpr TermId kRed = 0;

struct Instance {
  Corpus corpus;
  QueryLog log;
  ClauseStats stats;
};

// Builds a corpus/log/candidate instance from raw strings; candidate terms
// may be absent from the corpus (empty match sets).
Instance build_instance(
    const std::vector<std::vector<std::string>>& docs,
    const std::vector<std::pair<std::vector<std::string>, std::uint64_t>>&
        queries,
    const std::vector<std::vector<std::string>>& candidates) {
  Instance inst;
  std::vector<std::pair<std::optional<std::uint64_t>,
                        std::vector<std::string>>> raw_docs;
  for (const auto& terms : docs) raw_docs.emplace_back(std::nullopt, terms);
  inst.corpus = build_corpus(raw_docs);
  QueryLogBuilder builder(&inst.corpus.vocab);
  for (const auto& [terms, weight] : queries) builder.add(terms, weight);
  inst.log = builder.finalize();
  std::vector<Clause> clauses;
  for (const auto& raw : candidates) {
    std::vector<TermId> terms;
    for (const std::string& t : raw)
      terms.push_back(inst.corpus.vocab.intern(t));
    clauses.push_back(make_clause(std::move(terms)));
  }
  const InvertedIndex index = InvertedIndex::build(inst.corpus);
  inst.stats = precompute_stats(std::move(clauses), index, inst.log,
                                DocSet::Rep::kDense);
  return inst;
}

// The worked fixture restricted to candidates {red} and {blue,pants}.
Instance make_worked_instance() {
  return build_instance(
      {{"red", "shirt", "striped"},
       {"blue", "shirt", "striped"},
       {"red", "shirt"},
       {"red", "pants", "striped"},
       {"blue", "pants", "striped"},
       {"blue", "pants"}},
      {{{"red", "shirt"}, 3}, {{"blue", "pants"}, 2}, {{"red"}, 1}},
      {{"red"}, {"blue", "pants"}});
}

Instance make_random_solver_instance(std::mt19937_64& rng) {
  const testutil::RandomInstance raw = testutil::make_random_instance(rng);
  Instance inst;
  inst.corpus = raw.corpus;
  inst.log = raw.log;
  const InvertedIndex index = InvertedIndex::build(inst.corpus);
  inst.stats = precompute_stats(raw.candidates, index, inst.log,
                                rng() % 2 == 0 ? DocSet::Rep::kDense
                                               : DocSet::Rep::kSparse);
  return inst;
}

std::uint64_t modular_value(const ModularBound& mb,
                            const std::vector<std::uint32_t>& subset) {
  std::uint64_t v = mb.constant;
  for (std::uint32_t j : subset) v += mb.weight[j];
  return v;
}

std::vector<std::uint32_t> sorted_copy(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Recomputes every candidate's exact gains and checks the bound sandwich;
// for the parallel solver additionally checks that the selected candidate
// was a member of the tightened set.
class BoundCheckProbe : public SolverProbe {
 public:
  explicit BoundCheckProbe(bool selected_must_be_tightened)
      : selected_must_be_tightened_(selected_must_be_tightened) {}

  void on_select(const CoverageState& state, const BoundCache& bounds,
                 const std::vector<std::uint32_t>& tightened,
                 std::uint32_t selected) override {
    ++selections;
    const std::size_t m = state.stats().n_candidates();
    for (std::uint32_t j = 0; j < m; ++j) {
      if (state.committed(j)) {
        if (bounds.f_upper[j] != 0 || bounds.f_lower[j] != 0 ||
            bounds.g_upper[j] != 0 || bounds.g_lower[j] != 0)
          ++violations;
        continue;
      }
      const std::uint64_t f = state.f_gain_num(j);
      const std::uint64_t g = state.g_gain(j);
      if (!(bounds.f_lower[j] <= f && f <= bounds.f_upper[j])) ++violations;
      if (!(bounds.g_lower[j] <= g && g <= bounds.g_upper[j])) ++violations;
    }
    if (selected_must_be_tightened_ &&
        std::find(tightened.begin(), tightened.end(), selected) ==
            tightened.end())
      ++violations;
    // The selected candidate's g bounds must be exact: its g-gain is the
    // amount the budget consumption grows on commit.
    if (bounds.g_lower[selected] != bounds.g_upper[selected]) ++violations;
    if (bounds.g_lower[selected] != state.g_gain(selected)) ++violations;
  }

  std::uint64_t selections = 0;
  std::uint64_t violations = 0;

 private:
  bool selected_must_be_tightened_;
};

}  // namespace

TEST_SUITE("scsk") {

TEST_CASE("budget text parses as absolute counts or fractions") {
  const BudgetSpec abs = BudgetSpec::parse("120");
  CHECK(abs.kind == BudgetSpec::Kind::kAbsolute);
  CHECK(abs.resolve(1000) == 120);

  const BudgetSpec half = BudgetSpec::parse("0.5x");
  CHECK(half.kind == BudgetSpec::Kind::kFraction);
  CHECK(half.resolve(1000) == 500);
  CHECK(half.resolve(7) == 4);       // ceil(3.5)
  CHECK(BudgetSpec::parse(".25x").resolve(8) == 2);
  CHECK(BudgetSpec::parse("1x").resolve(123) == 123);
  // Exact rational rounding: ceil(0.07 * 100) is 7, not the float's 8.
  CHECK(BudgetSpec::parse("0.07x").resolve(100) == 7);

  CHECK_THROWS_AS(BudgetSpec::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(BudgetSpec::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(BudgetSpec::parse("0.5y"), std::invalid_argument);
  CHECK_THROWS_AS(BudgetSpec::parse("-3"), std::invalid_argument);
  CHECK_THROWS_AS(BudgetSpec::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(BudgetSpec::parse("1..5x"), std::invalid_argument);
}

TEST_CASE("budget validation enforces 1 <= B <= corpus size") {
  CHECK_NOTHROW(validate_budget(1, 10));
  CHECK_NOTHROW(validate_budget(10, 10));
  CHECK_THROWS_AS(validate_budget(0, 10), std::invalid_argument);
  CHECK_THROWS_AS(validate_budget(11, 10), std::invalid_argument);
}

TEST_CASE("canonical ranks order by length then term ids") {
  const std::vector<Clause> clauses = {
      make_clause({5, 6}), make_clause({9}), make_clause({0, 7}),
      make_clause({2})};
  // Canonical order: {2}, {9}, {0,7}, {5,6}.
  CHECK(canonical_ranks(clauses) ==
        std::vector<std::uint32_t>{3, 1, 2, 0});
}

TEST_CASE("the worked instance selects {red} and stops at the budget") {
  const Instance inst = make_worked_instance();
  SolveOptions opts;
  opts.budget = 3;
  const SolveResult res = greedy(inst.stats, opts);
  // Ratios at the empty set: {red} (4/6)/3 beats {blue,pants} (2/6)/2
  // times... cross-multiplied 4*2 > 2*3; after {red}, g = 3 = B and
  // {blue,pants} would add 2 more documents.
  CHECK(res.solution == std::vector<std::uint32_t>{0});
  CHECK(res.f_num == 4);
  CHECK(res.f_den == 6);
  CHECK(res.g == 3);
  REQUIRE(res.path.records.size() == 1);
  CHECK(res.path.records[0].iter == 1);
  CHECK(res.path.records[0].clause->terms == std::vector<TermId>{kRed});
  CHECK(res.path.records[0].f_num == 4);
  CHECK(res.path.records[0].g == 3);

  // An unconstrained budget takes every positive-gain candidate.
  opts.budget = 6;
  const SolveResult all = greedy(inst.stats, opts);
  CHECK(all.solution == std::vector<std::uint32_t>{0, 1});
  CHECK(all.f_num == 6);
  CHECK(all.g == 5);
}

TEST_CASE("nothing feasible yields the empty solution") {
  const Instance inst = make_worked_instance();
  SolveOptions opts;
  opts.budget = 1;  // every candidate has singleton g of at least 2
  for (const SolveResult& res :
       {greedy(inst.stats, opts), lazy_greedy(inst.stats, opts),
        optpes_greedy(inst.stats, opts),
        constraint_agnostic_greedy(inst.stats, opts),
        isk(inst.stats, 1, opts), isk(inst.stats, 2, opts)}) {
    CHECK(res.solution.empty());
    CHECK(res.f_num == 0);
    CHECK(res.g == 0);
  }
}

TEST_CASE("the exhaustive oracle confirms the worked optimum") {
  const Instance inst = make_worked_instance();
  const OracleResult best = oracle_exhaustive(inst.stats, 3);
  CHECK(best.best == std::vector<std::uint32_t>{0});
  CHECK(best.f_num == 4);
  CHECK(best.f_den == 6);
  CHECK(best.g == 3);

  const OracleResult unconstrained = oracle_exhaustive(inst.stats, 6);
  CHECK(unconstrained.f_num == 6);
}

TEST_CASE("oracle tie-breaking prefers lower g then canonical order") {
  SUBCASE("equal coverage resolves toward fewer documents") {
    // Both candidates cover the single query (weight 1); the two-term
    // clause matches one document instead of two.
    const Instance inst =
        build_instance({{"p", "q"}, {"p"}}, {{{"p", "q"}, 1}},
                       {{"p"}, {"p", "q"}});
    const OracleResult best = oracle_exhaustive(inst.stats, 2);
    CHECK(best.f_num == 1);
    CHECK(best.g == 1);
    CHECK(best.best == std::vector<std::uint32_t>{1});
  }

  SUBCASE("a full tie resolves toward canonical clause order") {
    // f({a}) = f({b}) = 2 with g = 2 each ({b,c} also ties but has a
    // longer rank sequence); "a" wins on lexicographic rank order.
    const Instance inst = build_instance(
        {{"a", "b"}, {"a"}, {"c", "b"}},
        {{{"a"}, 2}, {{"b"}, 2}},
        {{"a"}, {"b"}, {"c"}});
    const OracleResult best = oracle_exhaustive(inst.stats, 2);
    CHECK(best.f_num == 2);
    CHECK(best.g == 2);
    CHECK(best.best == std::vector<std::uint32_t>{0});
  }

  SUBCASE("more than 20 candidates is rejected") {
    CHECK_THROWS_AS(
        [] {
          Instance big = build_instance(
              {{"a"}}, {{{"a"}, 1}},
              std::vector<std::vector<std::string>>(21, {"a"}));
          oracle_exhaustive(big.stats, 1);
        }(),
        std::invalid_argument);
  }
}

TEST_CASE("lazy and parallel greedy replay the naive selection exactly") {
  std::mt19937_64 rng(0x5ca1e);
  for (int round = 0; round < 150; ++round) {
    const Instance inst = make_random_solver_instance(rng);
    if (inst.stats.n_candidates() == 0) continue;
    SolveOptions opts;
    opts.budget = 1 + rng() % inst.corpus.n_docs();

    const SolveResult ref = greedy(inst.stats, opts);
    const SolveResult lazy = lazy_greedy(inst.stats, opts);
    SolveOptions par = opts;
    par.threads = 4;
    const SolveResult pes1 = optpes_greedy(inst.stats, opts);
    const SolveResult pes4 = optpes_greedy(inst.stats, par);

    CHECK(lazy.solution == ref.solution);
    CHECK(pes1.solution == ref.solution);
    CHECK(pes4.solution == ref.solution);
    CHECK(lazy.f_num == ref.f_num);
    CHECK(lazy.g == ref.g);
    CHECK(pes4.f_num == ref.f_num);
    CHECK(pes4.g == ref.g);

    REQUIRE(lazy.path.records.size() == ref.path.records.size());
    REQUIRE(pes4.path.records.size() == ref.path.records.size());
    for (std::size_t i = 0; i < ref.path.records.size(); ++i) {
      CHECK(lazy.path.records[i].f_num == ref.path.records[i].f_num);
      CHECK(lazy.path.records[i].g == ref.path.records[i].g);
      CHECK(pes4.path.records[i].f_num == ref.path.records[i].f_num);
      CHECK(pes4.path.records[i].g == ref.path.records[i].g);
    }
    // The lazy machinery never evaluates more often than the full rescans.
    CHECK(lazy.f_evals <= ref.f_evals);
    CHECK(lazy.g_evals <= ref.g_evals);
  }
}

TEST_CASE("bound caches stay valid at every selection") {
  std::mt19937_64 rng(0xb0b0);
  std::uint64_t lazy_selections = 0;
  std::uint64_t pes_selections = 0;
  for (int round = 0; round < 30; ++round) {
    const Instance inst = make_random_solver_instance(rng);
    if (inst.stats.n_candidates() == 0) continue;
    SolveOptions opts;
    opts.budget = 1 + rng() % inst.corpus.n_docs();

    BoundCheckProbe lazy_probe(/*selected_must_be_tightened=*/false);
    opts.probe = &lazy_probe;
    lazy_greedy(inst.stats, opts);
    CHECK(lazy_probe.violations == 0);
    lazy_selections += lazy_probe.selections;

    BoundCheckProbe pes_probe(/*selected_must_be_tightened=*/true);
    opts.probe = &pes_probe;
    opts.threads = 3;
    optpes_greedy(inst.stats, opts);
    CHECK(pes_probe.violations == 0);
    pes_selections += pes_probe.selections;
  }
  // The sweep must actually have exercised selections.
  CHECK(lazy_selections > 0);
  CHECK(pes_selections > 0);
}

TEST_CASE("ignoring the cost function forfeits coverage") {
  // One clause covers a heavy query but drags in ten documents; two cheap
  // clauses cover almost as much weight with one document each.
  std::vector<std::vector<std::string>> docs(10, {"big"});
  docs.push_back({"a"});
  docs.push_back({"b"});
  const Instance inst = build_instance(
      docs, {{{"big"}, 5}, {{"a"}, 4}, {{"b"}, 3}},
      {{"big"}, {"a"}, {"b"}});
  SolveOptions opts;
  opts.budget = 10;

  const SolveResult agnostic = constraint_agnostic_greedy(inst.stats, opts);
  CHECK(agnostic.solution == std::vector<std::uint32_t>{0});
  CHECK(agnostic.f_num == 5);

  const SolveResult ratio = greedy(inst.stats, opts);
  CHECK(ratio.solution == std::vector<std::uint32_t>{1, 2});
  CHECK(ratio.f_num == 7);
  CHECK(ratio.f_num > agnostic.f_num);

  // Agnostic output is still feasible and yields a valid path.
  CHECK(agnostic.g <= opts.budget);
}

TEST_CASE("with equal unit costs the cost-blind ranking matches greedy") {
  const Instance inst = build_instance(
      {{"a"}, {"b"}, {"c"}},
      {{{"a"}, 3}, {{"b"}, 2}, {{"c"}, 1}},
      {{"a"}, {"b"}, {"c"}});
  SolveOptions opts;
  opts.budget = 2;
  CHECK(constraint_agnostic_greedy(inst.stats, opts).solution ==
        greedy(inst.stats, opts).solution);
  CHECK(greedy(inst.stats, opts).solution ==
        std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("knapsack treats zero weights as free and respects the residual") {
  // Candidate "z" only appears in the log, so it costs nothing and covers
  // weight 2; "a" and "b" compete for the residual.
  const Instance inst = build_instance(
      {{"a"}, {"b"}},
      {{{"a"}, 3}, {{"b"}, 2}, {{"z"}, 2}},
      {{"a"}, {"b"}, {"z"}});
  std::uint64_t f_evals = 0, g_evals = 0;

  SUBCASE("all weights zero selects every positive-gain candidate") {
    const auto sol = knapsack_greedy(inst.stats, {0, 0, 0}, 0, &f_evals,
                                     &g_evals);
    CHECK(sorted_copy(sol) == std::vector<std::uint32_t>{0, 1, 2});
  }
  SUBCASE("a single unaffordable candidate yields the empty set") {
    const Instance one = build_instance({{"a"}}, {{{"a"}, 1}}, {{"a"}});
    CHECK(knapsack_greedy(one.stats, {5}, 4, &f_evals, &g_evals).empty());
  }
  SUBCASE("free candidates are taken even when the residual is exhausted") {
    const auto sol = knapsack_greedy(inst.stats, {4, 4, 0}, 4, &f_evals,
                                     &g_evals);
    CHECK(sorted_copy(sol) == std::vector<std::uint32_t>{0, 2});
  }
}

TEST_CASE("the single-candidate fallback rescues cost-benefit greedy") {
  // Ratio order picks the light candidate first (1/1 beats 9/10) and then
  // cannot afford the heavy one; the best-single fallback returns it.
  const Instance inst = build_instance(
      {{"a"}, {"b"}}, {{{"a"}, 1}, {{"b"}, 9}}, {{"a"}, {"b"}});
  std::uint64_t f_evals = 0, g_evals = 0;
  const auto sol =
      knapsack_greedy(inst.stats, {1, 10}, 10, &f_evals, &g_evals);
  CHECK(sol == std::vector<std::uint32_t>{1});
  CHECK(eval_f_num(inst.stats, sol) == 9);
}

TEST_CASE("knapsack respects the cost-benefit quality bound") {
  // f(output) >= (1 - 1/sqrt(e)) * optimum, checked against enumeration.
  std::mt19937_64 rng(0x4b4b);
  for (int round = 0; round < 60; ++round) {
    const Instance inst = make_random_solver_instance(rng);
    const std::size_t m = inst.stats.n_candidates();
    if (m == 0 || m > 12) continue;
    std::vector<std::uint64_t> weights(m);
    for (auto& w : weights) w = rng() % 6;
    const std::uint64_t residual = rng() % 12;

    std::uint64_t f_evals = 0, g_evals = 0;
    const auto sol =
        knapsack_greedy(inst.stats, weights, residual, &f_evals, &g_evals);
    std::uint64_t spent = 0;
    for (std::uint32_t j : sol) spent += weights[j];
    CHECK(spent <= residual);
    const std::uint64_t achieved = eval_f_num(inst.stats, sol);

    std::uint64_t opt = 0;
    std::vector<std::uint32_t> subset;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      subset.clear();
      std::uint64_t cost = 0;
      for (std::uint32_t j = 0; j < m; ++j)
        if ((mask >> j) & 1u) {
          subset.push_back(j);
          cost += weights[j];
        }
      if (cost > residual) continue;
      opt = std::max(opt, eval_f_num(inst.stats, subset));
    }
    // 0.39346934 slightly understates 1 - 1/sqrt(e).
    CHECK(achieved * 100000000 >= opt * 39346934);
  }
}

TEST_CASE("modular bounds are tight at the base set and dominate g") {
  const Instance inst = build_instance(
      {{"red", "shirt", "striped"},
       {"blue", "shirt", "striped"},
       {"red", "shirt"},
       {"red", "pants", "striped"},
       {"blue", "pants", "striped"},
       {"blue", "pants"}},
      {{{"red", "shirt"}, 3}, {{"blue", "pants"}, 2}, {{"red"}, 1}},
      {{"red"}, {"blue", "shirt"}, {"red", "shirt"}, {"blue", "pants"}});
  const std::size_t m = inst.stats.n_candidates();

  // At the empty set both variants price additions at the singleton cost.
  for (int variant : {1, 2}) {
    const ModularBound mb = modular_upper_bound(variant, inst.stats, {});
    CHECK(mb.constant == 0);
    for (std::uint32_t j = 0; j < m; ++j)
      CHECK(mb.weight[j] == inst.stats.singleton_g(j));
  }

  // Worked value: pricing additions against X_t = {{red}} covers docs
  // 0,2,3, so {blue,shirt} only adds document 1.
  const ModularBound v2 = modular_upper_bound(2, inst.stats, {0});
  CHECK(v2.weight[1] == 1);

  // Exhaustive tightness and domination over every (X_t, X) pair.
  std::vector<std::uint32_t> x_t, x;
  for (std::uint64_t base = 0; base < (std::uint64_t{1} << m); ++base) {
    x_t.clear();
    for (std::uint32_t j = 0; j < m; ++j)
      if ((base >> j) & 1u) x_t.push_back(j);
    for (int variant : {1, 2}) {
      const ModularBound mb = modular_upper_bound(variant, inst.stats, x_t);
      CHECK(modular_value(mb, x_t) == eval_g(inst.stats, x_t));
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        x.clear();
        for (std::uint32_t j = 0; j < m; ++j)
          if ((mask >> j) & 1u) x.push_back(j);
        CHECK(modular_value(mb, x) >= eval_g(inst.stats, x));
      }
    }
  }

  CHECK_THROWS_AS(modular_upper_bound(3, inst.stats, {}),
                  std::invalid_argument);
}

TEST_CASE("modular bounds dominate g on random instances") {
  std::mt19937_64 rng(0x909);
  std::size_t checked = 0;
  while (checked < 1000) {
    const Instance inst = make_random_solver_instance(rng);
    const std::size_t m = inst.stats.n_candidates();
    if (m == 0) continue;
    std::vector<std::uint32_t> x_t;
    for (std::uint32_t j = 0; j < m; ++j)
      if (rng() % 3 == 0) x_t.push_back(j);
    for (int variant : {1, 2}) {
      const ModularBound mb = modular_upper_bound(variant, inst.stats, x_t);
      CHECK(modular_value(mb, x_t) == eval_g(inst.stats, x_t));
      for (int k = 0; k < 20; ++k) {
        std::vector<std::uint32_t> x;
        for (std::uint32_t j = 0; j < m; ++j)
          if (rng() % 2 == 0) x.push_back(j);
        CHECK(modular_value(mb, x) >= eval_g(inst.stats, x));
        ++checked;
      }
    }
  }
}

TEST_CASE("iterated knapsack rounds stay feasible and converge") {
  const Instance inst = make_worked_instance();
  SolveOptions opts;
  opts.budget = 3;
  const OracleResult best = oracle_exhaustive(inst.stats, opts.budget);
  for (int variant : {1, 2}) {
    const SolveResult res = isk(inst.stats, variant, opts);
    CHECK(res.g <= opts.budget);
    CHECK(res.f_num <= best.f_num);
    CHECK(res.path.converged);
    for (const PathRecord& rec : res.path.records)
      CHECK(rec.g <= opts.budget);
  }
}

TEST_CASE("a modular constraint makes the iteration converge in two rounds") {
  // Disjoint single-document match sets: the variant-1 bound is exact, so
  // round two reproduces round one and the loop stops.
  const Instance inst = build_instance(
      {{"a"}, {"b"}, {"c"}},
      {{{"a"}, 3}, {{"b"}, 2}, {{"c"}, 1}},
      {{"a"}, {"b"}, {"c"}});
  SolveOptions opts;
  opts.budget = 2;
  const SolveResult res = isk(inst.stats, 1, opts);
  CHECK(res.path.converged);
  CHECK(res.path.records.size() == 2);
  CHECK(res.solution == std::vector<std::uint32_t>{0, 1});
  CHECK(res.f_num == 5);
  CHECK(res.g == 2);

  // Forcing a single round on the same instance cannot certify the fixed
  // point, so the convergence flag stays off.
  SolveOptions one_round = opts;
  one_round.isk_max_rounds = 1;
  const SolveResult truncated = isk(inst.stats, 1, one_round);
  CHECK_FALSE(truncated.path.converged);
  CHECK(truncated.path.records.size() == 1);
  CHECK(truncated.solution == res.solution);
}

TEST_CASE("a budget below every candidate cost converges to empty") {
  const Instance inst = build_instance(
      {{"a", "x"}, {"a", "y"}}, {{{"a"}, 2}}, {{"a"}});
  SolveOptions opts;
  opts.budget = 1;  // g({a}) = 2
  for (int variant : {1, 2}) {
    const SolveResult res = isk(inst.stats, variant, opts);
    CHECK(res.solution.empty());
    CHECK(res.f_num == 0);
    CHECK(res.path.converged);
    CHECK(res.path.records.size() == 1);
  }
}

TEST_CASE("solution paths are monotone for the greedy family") {
  std::mt19937_64 rng(0x9a7b);
  for (int round = 0; round < 60; ++round) {
    const Instance inst = make_random_solver_instance(rng);
    if (inst.stats.n_candidates() == 0) continue;
    SolveOptions opts;
    opts.budget = 1 + rng() % inst.corpus.n_docs();
    const SolveResult runs[] = {
        greedy(inst.stats, opts), lazy_greedy(inst.stats, opts),
        optpes_greedy(inst.stats, opts),
        constraint_agnostic_greedy(inst.stats, opts)};
    for (const SolveResult& res : runs) {
      std::uint64_t prev_f = 0, prev_g = 0, prev_evals = 0;
      std::uint64_t iter = 0;
      for (const PathRecord& rec : res.path.records) {
        CHECK(rec.iter == ++iter);
        CHECK(rec.f_num >= prev_f);
        CHECK(rec.g >= prev_g);
        CHECK(rec.g <= opts.budget);
        CHECK(rec.evals >= prev_evals);
        CHECK(rec.clause.has_value());
        prev_f = rec.f_num;
        prev_g = rec.g;
        prev_evals = rec.evals;
      }
      CHECK(res.path.records.size() == res.solution.size());
      if (!res.path.records.empty()) {
        CHECK(res.path.records.back().f_num == res.f_num);
        CHECK(res.path.records.back().g == res.g);
      }
    }
    // Iterated-knapsack records may oscillate but must stay feasible and
    // never exceed the round cap.
    for (int variant : {1, 2}) {
      const SolveResult res = isk(inst.stats, variant, opts);
      CHECK(res.path.records.size() <= opts.isk_max_rounds);
      for (const PathRecord& rec : res.path.records) {
        CHECK(rec.g <= opts.budget);
        CHECK_FALSE(rec.clause.has_value());
      }
    }
  }
}

TEST_CASE("path files carry one CSV row per record with quoting") {
  Vocab vocab;
  const TermId plain = vocab.intern("red");
  const TermId comma = vocab.intern("a,b");
  const TermId quote = vocab.intern("c\"d");

  SolutionPath path;
  PathRecord rec;
  rec.iter = 1;
  rec.clause = make_clause({plain, comma});
  rec.f_num = 3;
  rec.f_den = 6;
  rec.g = 2;
  rec.wall_ns = 10;
  rec.evals = 4;
  path.records.push_back(rec);
  rec.iter = 2;
  rec.clause = make_clause({quote});
  path.records.push_back(rec);
  rec.iter = 3;
  rec.clause.reset();
  path.records.push_back(rec);

  testutil::TempDir dir;
  save_path_csv(path, vocab, dir.file("path.csv"));
  CHECK(testutil::read_file(dir.file("path.csv")) ==
        "iter,clause,f_num,f_den,g,wall_ns,evals\n"
        "1,\"red a,b\",3,6,2,10,4\n"
        "2,\"c\"\"d\",3,6,2,10,4\n"
        "3,,3,6,2,10,4\n");
}

}  // TEST_SUITE
