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

// Solvers for maximizing the submodular coverage objective f under the
// submodular document-budget constraint g(X) <= B:
//
//   greedy                      exact utility-ratio greedy, all gains
//                               recomputed every iteration (the reference)
//   lazy_greedy                 ratio greedy with an optimistic max heap:
//                               stale f-gain upper bounds plus g-gain lower
//                               bounds maintained by subtracting each
//                               committed candidate's g-gain
//   optpes_greedy               parallel variant: candidates whose
//                               optimistic ratio reaches the best
//                               certified-feasible pessimistic ratio are
//                               re-evaluated concurrently
//   constraint_agnostic_greedy  ranks by f-gain alone (feasibility still
//                               enforced); the classic suboptimal baseline
//   isk                         iteratively replaces g by a modular upper
//                               bound that is tight at the current
//                               solution and solves the resulting
//                               knapsack (two bound variants)
//   oracle_exhaustive           exact optimum by subset enumeration, for
//                               verification on tiny instances
//
// All ratio comparisons are exact (see gainorder.hpp) and ties break by
// canonical clause order, which makes greedy, lazy_greedy, and
// optpes_greedy emit identical selection sequences and keeps runs
// reproducible for any thread count.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tierforge/matchengine.hpp"
#include "tierforge/submodfn.hpp"

namespace tierforge {

// Tier-1 capacity in documents: either an absolute count or a fraction of
// the corpus ("120" or "0.5x").
struct BudgetSpec {
  enum class Kind { kAbsolute, kFraction };

  Kind kind = Kind::kAbsolute;
  std::uint64_t value = 0;     // kAbsolute
  std::uint64_t frac_num = 0;  // kFraction: frac_num / frac_den of n_docs
  std::uint64_t frac_den = 1;

  // Throws std::invalid_argument on malformed text.
  static BudgetSpec parse(std::string_view text);

  // Fractions resolve to ceil(fraction * n_docs). No clamping; callers
  // validate against the corpus size.
  std::uint64_t resolve(std::size_t n_docs) const;
};

// Enforces 1 <= budget <= n_docs.
void validate_budget(std::uint64_t budget, std::size_t n_docs);

// rank[i] = position of clauses[i] under canonical clause order (length
// ascending, then lexicographic term ids); the shared tie-break key.
std::vector<std::uint32_t> canonical_ranks(const std::vector<Clause>& clauses);

struct PathRecord {
  std::uint64_t iter = 0;
  std::optional<Clause> clause;  // empty for whole-solution records
  std::uint64_t f_num = 0;
  std::uint64_t f_den = 1;
  std::uint64_t g = 0;
  std::uint64_t wall_ns = 0;  // elapsed since solve start
  std::uint64_t evals = 0;    // cumulative exact f/g gain evaluations
};

struct SolutionPath {
  std::vector<PathRecord> records;
  bool converged = true;  // false when isk hit its round limit
};

// CSV with header iter,clause,f_num,f_den,g,wall_ns,evals.
void save_path_csv(const SolutionPath& path, const Vocab& vocab,
                   const std::string& out_path);

// Per-candidate bounds on the current marginal gains, maintained so that
// f_lower <= f(j|X) <= f_upper and g_lower <= g(j|X) <= g_upper hold at
// every iteration for every candidate (exactly zero for committed ones).
struct BoundCache {
  std::vector<std::uint64_t> f_upper, f_lower;
  std::vector<std::uint64_t> g_upper, g_lower;
  std::vector<std::uint64_t> stamp;  // iteration of last exact tightening

  void init_singletons(const ClauseStats& stats);
};

// Instrumentation hook for the bound-maintaining solvers, invoked after
// tightening and immediately before each commit. `tightened` lists the
// candidates re-evaluated this iteration (the set C for optpes_greedy).
class SolverProbe {
 public:
  virtual ~SolverProbe() = default;
  virtual void on_select(const CoverageState& state, const BoundCache& bounds,
                         const std::vector<std::uint32_t>& tightened,
                         std::uint32_t selected) = 0;
};

struct SolveOptions {
  std::uint64_t budget = 0;
  unsigned threads = 1;            // optpes_greedy tightening parallelism
  std::uint64_t isk_max_rounds = 50;
  SolverProbe* probe = nullptr;    // observed by lazy_greedy/optpes_greedy
};

struct SolveResult {
  std::vector<std::uint32_t> solution;  // candidate indices, selection order
  SolutionPath path;
  std::uint64_t f_num = 0;
  std::uint64_t f_den = 1;
  std::uint64_t g = 0;
  std::uint64_t f_evals = 0;
  std::uint64_t g_evals = 0;
  std::uint64_t wall_ns = 0;
};

SolveResult greedy(const ClauseStats& stats, const SolveOptions& opts);
SolveResult lazy_greedy(const ClauseStats& stats, const SolveOptions& opts);
SolveResult optpes_greedy(const ClauseStats& stats, const SolveOptions& opts);
SolveResult constraint_agnostic_greedy(const ClauseStats& stats,
                                       const SolveOptions& opts);

// The modular function gt(X) = constant + sum of weight[j] over j in X
// with gt(X_t) = g(X_t) and gt(X) >= g(X) everywhere. Variant 1 prices
// additions at g({j}) and removals at g(j | X_t minus j); variant 2 prices
// additions at g(j | X_t) and removals at g(j | ground set minus j).
// `g_eval_counter`, when given, is incremented once per exact g evaluation
// spent building the bound.
struct ModularBound {
  std::vector<std::uint64_t> weight;
  std::uint64_t constant = 0;
};
ModularBound modular_upper_bound(int variant, const ClauseStats& stats,
                                 const std::vector<std::uint32_t>& x_t,
                                 std::uint64_t* g_eval_counter = nullptr);

// max f(X) subject to sum of weights[j] over X <= budget_residual, solved
// by lazy cost-benefit greedy (zero-weight positive-gain candidates first)
// and returning the better of that run and the best single feasible
// candidate. Appends exact-evaluation counts to *f_evals/*g_evals.
std::vector<std::uint32_t> knapsack_greedy(
    const ClauseStats& stats, const std::vector<std::uint64_t>& weights,
    std::uint64_t budget_residual, std::uint64_t* f_evals,
    std::uint64_t* g_evals);

// variant selects which modular bound replaces g each round; one path
// record per outer round; path.converged is false when the fixed point was
// not reached within isk_max_rounds.
SolveResult isk(const ClauseStats& stats, int variant,
                const SolveOptions& opts);

struct OracleResult {
  std::vector<std::uint32_t> best;  // candidate indices, ascending
  std::uint64_t f_num = 0;
  std::uint64_t f_den = 1;
  std::uint64_t g = 0;
};

// Enumerates every subset; requires n_candidates <= 20 (throws
// std::invalid_argument beyond). Ties prefer higher f, then lower g, then
// the lexicographically smallest canonical-rank sequence.
OracleResult oracle_exhaustive(const ClauseStats& stats, std::uint64_t budget);

}  // namespace tierforge
