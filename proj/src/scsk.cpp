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

#include "tierforge/scsk.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "tierforge/gainorder.hpp"
#include "tierforge/parallel.hpp"
#include "tierforge/rational.hpp"

namespace tierforge {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ns(Clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() -
                                                           start)
          .count());
}

struct HeapEntry {
  GainPair key;
  std::uint32_t rank = 0;
  std::uint32_t cand = 0;
};

// Max-heap order: higher ratio first, then smaller canonical rank.
struct HeapLess {
  bool operator()(const HeapEntry& a, const HeapEntry& b) const {
    const int cmp = compare_gain_ratio(a.key, b.key);
    if (cmp != 0) return cmp < 0;
    return a.rank > b.rank;
  }
};

using MaxHeap =
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapLess>;

void append_record(SolveResult& res, const CoverageState& state,
                   const Clause& clause, Clock::time_point start) {
  PathRecord rec;
  rec.iter = res.path.records.size() + 1;
  rec.clause = clause;
  rec.f_num = state.f_num();
  rec.f_den = state.f_den();
  rec.g = state.g_value();
  rec.wall_ns = elapsed_ns(start);
  rec.evals = state.f_evals() + state.g_evals();
  res.path.records.push_back(std::move(rec));
}

void finish(SolveResult& res, const CoverageState& state,
            Clock::time_point start) {
  res.solution = state.solution();
  res.f_num = state.f_num();
  res.f_den = state.f_den();
  res.g = state.g_value();
  res.f_evals = state.f_evals();
  res.g_evals = state.g_evals();
  res.wall_ns = elapsed_ns(start);
}

// True when (pair, rank) beats the incumbent under exact-ratio order with
// canonical-rank ties.
bool better_than(GainPair pair, std::uint32_t rank, bool have_best,
                 GainPair best_pair, std::uint32_t best_rank) {
  if (!have_best) return true;
  const int cmp = compare_gain_ratio(pair, best_pair);
  return cmp > 0 || (cmp == 0 && rank < best_rank);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char ch : field) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

BudgetSpec BudgetSpec::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty budget");
  BudgetSpec spec;
  if (text.back() == 'x') {
    spec.kind = Kind::kFraction;
    if (!parse_decimal_rational(text.substr(0, text.size() - 1),
                                spec.frac_num, spec.frac_den))
      throw std::invalid_argument("malformed budget fraction: " +
                                  std::string(text));
    return spec;
  }
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, spec.value);
  if (ec != std::errc{} || ptr != end)
    throw std::invalid_argument(
        "malformed budget (expected an integer or a fraction like 0.5x): " +
        std::string(text));
  return spec;
}

std::uint64_t BudgetSpec::resolve(std::size_t n_docs) const {
  if (kind == Kind::kAbsolute) return value;
  return ceil_mul_div(n_docs, frac_num, frac_den);
}

void validate_budget(std::uint64_t budget, std::size_t n_docs) {
  if (budget < 1 || budget > n_docs)
    throw std::invalid_argument(
        "budget must be between 1 and the corpus size (" +
        std::to_string(n_docs) + "), got " + std::to_string(budget));
}

std::vector<std::uint32_t> canonical_ranks(
    const std::vector<Clause>& clauses) {
  std::vector<std::uint32_t> order(clauses.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) {
                     return clause_canonical_less(clauses[a], clauses[b]);
                   });
  std::vector<std::uint32_t> ranks(clauses.size());
  for (std::uint32_t r = 0; r < order.size(); ++r) ranks[order[r]] = r;
  return ranks;
}

void save_path_csv(const SolutionPath& path, const Vocab& vocab,
                   const std::string& out_path) {
  std::ofstream out(out_path);
  if (!out) throw DataError("cannot write path file: " + out_path);
  out << "iter,clause,f_num,f_den,g,wall_ns,evals\n";
  for (const PathRecord& rec : path.records) {
    std::string clause_text;
    if (rec.clause) {
      const char* sep = "";
      for (TermId t : rec.clause->terms) {
        clause_text += sep;
        clause_text += vocab.term(t);
        sep = " ";
      }
    }
    out << rec.iter << ',' << csv_escape(clause_text) << ',' << rec.f_num
        << ',' << rec.f_den << ',' << rec.g << ',' << rec.wall_ns << ','
        << rec.evals << '\n';
  }
  if (!out) throw DataError("write failed: " + out_path);
}

void BoundCache::init_singletons(const ClauseStats& stats) {
  const std::size_t m = stats.n_candidates();
  f_upper = stats.singleton_f_num;
  f_lower = stats.singleton_f_num;
  g_upper.resize(m);
  g_lower.resize(m);
  for (std::uint32_t j = 0; j < m; ++j)
    g_upper[j] = g_lower[j] = stats.singleton_g(j);
  stamp.assign(m, 0);
}

SolveResult greedy(const ClauseStats& stats, const SolveOptions& opts) {
  const auto start = Clock::now();
  validate_budget(opts.budget, stats.n_docs);
  const std::uint32_t m = static_cast<std::uint32_t>(stats.n_candidates());
  const std::vector<std::uint32_t> ranks = canonical_ranks(stats.clauses);
  CoverageState state(stats);
  SolveResult res;
  for (;;) {
    bool have_best = false;
    std::uint32_t best = 0;
    GainPair best_pair;
    for (std::uint32_t j = 0; j < m; ++j) {
      if (state.committed(j)) continue;
      const GainPair pair{state.f_gain_num(j), state.g_gain(j)};
      if (pair.f_num == 0) continue;
      if (state.g_value() + pair.g > opts.budget) continue;
      if (better_than(pair, ranks[j], have_best, best_pair,
                      have_best ? ranks[best] : 0)) {
        have_best = true;
        best = j;
        best_pair = pair;
      }
    }
    if (!have_best) break;
    state.commit(best);
    append_record(res, state, stats.clauses[best], start);
  }
  finish(res, state, start);
  return res;
}

SolveResult lazy_greedy(const ClauseStats& stats, const SolveOptions& opts) {
  const auto start = Clock::now();
  validate_budget(opts.budget, stats.n_docs);
  const std::uint32_t m = static_cast<std::uint32_t>(stats.n_candidates());
  const std::vector<std::uint32_t> ranks = canonical_ranks(stats.clauses);
  CoverageState state(stats);
  SolveResult res;
  BoundCache bounds;
  bounds.init_singletons(stats);
  // This solver tightens f_upper/g_lower only; f_lower keeps the trivial
  // bound and g_upper shrinks monotonically, so both stay valid without
  // per-commit maintenance.
  std::fill(bounds.f_lower.begin(), bounds.f_lower.end(), 0);

  std::vector<char> dead(m, 0);
  std::vector<std::uint32_t> tightened;
  std::uint64_t epoch = 0;  // number of commits so far
  MaxHeap heap;
  bool rebuild = true;

  for (;;) {
    if (rebuild) {
      heap = MaxHeap();
      for (std::uint32_t j = 0; j < m; ++j) {
        if (dead[j] || state.committed(j)) continue;
        if (bounds.f_upper[j] == 0) {
          // f-gains only shrink; an upper bound of zero is final.
          dead[j] = 1;
          continue;
        }
        if (state.g_value() + bounds.g_lower[j] > opts.budget) {
          // The lower bound already overshoots the budget, so the true
          // g(X + j) does too, and it is monotone in X: dead forever.
          dead[j] = 1;
          continue;
        }
        heap.push(
            HeapEntry{{bounds.f_upper[j], bounds.g_lower[j]}, ranks[j], j});
      }
      rebuild = false;
    }
    if (heap.empty()) break;

    const HeapEntry entry = heap.top();
    heap.pop();
    const std::uint32_t j = entry.cand;
    if (dead[j] || state.committed(j)) continue;

    bool select = false;
    if (bounds.stamp[j] == epoch) {
      // Bounds are exact under the current solution; winning the pop
      // against every optimistic key certifies the argmax.
      select = true;
    } else {
      const GainPair pair{state.f_gain_num(j), state.g_gain(j)};
      bounds.f_upper[j] = pair.f_num;
      bounds.g_lower[j] = pair.g;
      bounds.g_upper[j] = pair.g;
      bounds.stamp[j] = epoch;
      tightened.push_back(j);
      if (pair.f_num == 0) {
        dead[j] = 1;
        continue;
      }
      if (state.g_value() + pair.g > opts.budget) {
        dead[j] = 1;
        continue;
      }
      if (heap.empty()) {
        select = true;
      } else {
        const HeapEntry& top = heap.top();
        const int cmp = compare_gain_ratio(pair, top.key);
        if (cmp > 0 || (cmp == 0 && ranks[j] < top.rank)) {
          select = true;
        } else {
          heap.push(HeapEntry{pair, ranks[j], j});
        }
      }
    }
    if (!select) continue;

    const std::uint64_t delta_g = bounds.g_lower[j];
    if (opts.probe != nullptr)
      opts.probe->on_select(state, bounds, tightened, j);
    state.commit(j);
    append_record(res, state, stats.clauses[j], start);
    ++epoch;
    tightened.clear();
    bounds.f_upper[j] = bounds.f_lower[j] = 0;
    bounds.g_upper[j] = bounds.g_lower[j] = 0;
    if (delta_g != 0) {
      // Lower-bound update: each remaining gain can drop by at most the
      // committed candidate's g-gain.
      for (std::uint32_t i = 0; i < m; ++i)
        if (!state.committed(i))
          bounds.g_lower[i] -= std::min(bounds.g_lower[i], delta_g);
      rebuild = true;
    }
    // delta_g == 0 leaves every g_lower and the residual budget unchanged,
    // so the existing heap keys are still valid optimistic bounds; keep
    // popping (stale exactness stamps re-tighten via the epoch bump).
  }
  finish(res, state, start);
  return res;
}

SolveResult optpes_greedy(const ClauseStats& stats, const SolveOptions& opts) {
  const auto start = Clock::now();
  validate_budget(opts.budget, stats.n_docs);
  const std::uint32_t m = static_cast<std::uint32_t>(stats.n_candidates());
  const std::vector<std::uint32_t> ranks = canonical_ranks(stats.clauses);
  CoverageState state(stats);
  SolveResult res;
  BoundCache bounds;
  bounds.init_singletons(stats);
  ThreadPool pool(opts.threads);

  std::vector<char> dead(m, 0);
  std::vector<std::uint32_t> cset;
  std::vector<GainPair> exact(m);
  for (std::uint64_t t = 0;;) {
    // Prune candidates that can never be selected again, and compute the
    // pessimistic threshold over candidates whose feasibility is certified
    // by the g-gain upper bound (those are truly feasible, so the exact
    // argmax ratio dominates their pessimistic ratios).
    bool any_alive = false;
    bool have_threshold = false;
    GainPair threshold;
    for (std::uint32_t j = 0; j < m; ++j) {
      if (dead[j] || state.committed(j)) continue;
      if (bounds.f_upper[j] == 0) {
        dead[j] = 1;
        continue;
      }
      if (state.g_value() + bounds.g_lower[j] > opts.budget) {
        dead[j] = 1;
        continue;
      }
      any_alive = true;
      if (state.g_value() + bounds.g_upper[j] <= opts.budget) {
        const GainPair pess{bounds.f_lower[j], bounds.g_upper[j]};
        if (!have_threshold || compare_gain_ratio(pess, threshold) > 0) {
          have_threshold = true;
          threshold = pess;
        }
      }
    }
    if (!any_alive) break;

    // C: alive candidates whose optimistic ratio reaches the threshold.
    cset.clear();
    for (std::uint32_t j = 0; j < m; ++j) {
      if (dead[j] || state.committed(j)) continue;
      const GainPair optimistic{bounds.f_upper[j], bounds.g_lower[j]};
      if (!have_threshold ||
          compare_gain_ratio(optimistic, threshold) >= 0)
        cset.push_back(j);
    }

    // Tighten all of C concurrently against the frozen state snapshot.
    pool.parallel_for(cset.size(), [&](std::size_t lo, std::size_t hi) {
      for (std::size_t k = lo; k < hi; ++k) {
        const std::uint32_t j = cset[k];
        exact[j] = GainPair{state.f_gain_num(j), state.g_gain(j)};
      }
    });
    for (std::uint32_t j : cset) {
      bounds.f_upper[j] = bounds.f_lower[j] = exact[j].f_num;
      bounds.g_upper[j] = bounds.g_lower[j] = exact[j].g;
      bounds.stamp[j] = t;
    }

    bool have_best = false;
    std::uint32_t best = 0;
    GainPair best_pair;
    for (std::uint32_t j : cset) {
      if (exact[j].f_num == 0) {
        dead[j] = 1;
        continue;
      }
      if (state.g_value() + exact[j].g > opts.budget) {
        dead[j] = 1;
        continue;
      }
      if (better_than(exact[j], ranks[j], have_best, best_pair,
                      have_best ? ranks[best] : 0)) {
        have_best = true;
        best = j;
        best_pair = exact[j];
      }
    }
    // The exact feasible argmax always lands in C, so an empty selection
    // means no feasible positive-gain candidate remains anywhere.
    if (!have_best) break;

    if (opts.probe != nullptr) opts.probe->on_select(state, bounds, cset, best);
    const GainPair delta = best_pair;
    state.commit(best);
    append_record(res, state, stats.clauses[best], start);
    ++t;
    bounds.f_upper[best] = bounds.f_lower[best] = 0;
    bounds.g_upper[best] = bounds.g_lower[best] = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
      if (state.committed(i)) continue;
      bounds.g_lower[i] -= std::min(bounds.g_lower[i], delta.g);
      bounds.f_lower[i] -= std::min(bounds.f_lower[i], delta.f_num);
    }
  }
  finish(res, state, start);
  return res;
}

SolveResult constraint_agnostic_greedy(const ClauseStats& stats,
                                       const SolveOptions& opts) {
  const auto start = Clock::now();
  validate_budget(opts.budget, stats.n_docs);
  const std::uint32_t m = static_cast<std::uint32_t>(stats.n_candidates());
  const std::vector<std::uint32_t> ranks = canonical_ranks(stats.clauses);
  CoverageState state(stats);
  SolveResult res;
  std::vector<std::uint64_t> f_upper = stats.singleton_f_num;
  std::vector<std::uint64_t> stamp(m, 0);
  std::vector<char> dead(m, 0);
  std::uint64_t epoch = 0;
  MaxHeap heap;
  // Ranking ignores the cost entirely: the key is the f-gain bound alone
  // (a constant denominator makes the ratio order the f order).
  for (std::uint32_t j = 0; j < m; ++j)
    if (f_upper[j] > 0) heap.push(HeapEntry{{f_upper[j], 1}, ranks[j], j});
  while (!heap.empty()) {
    const HeapEntry entry = heap.top();
    heap.pop();
    const std::uint32_t j = entry.cand;
    if (dead[j] || state.committed(j)) continue;
    if (stamp[j] == epoch) {
      // Exact f argmax; feasibility is still enforced before committing.
      const std::uint64_t gj = state.g_gain(j);
      if (state.g_value() + gj <= opts.budget) {
        state.commit(j);
        append_record(res, state, stats.clauses[j], start);
        ++epoch;
      } else {
        dead[j] = 1;  // g(X + j) > B is monotone in X
      }
      continue;
    }
    const std::uint64_t fj = state.f_gain_num(j);
    f_upper[j] = fj;
    stamp[j] = epoch;
    if (fj == 0) {
      dead[j] = 1;
      continue;
    }
    heap.push(HeapEntry{{fj, 1}, ranks[j], j});
  }
  finish(res, state, start);
  return res;
}

ModularBound modular_upper_bound(int variant, const ClauseStats& stats,
                                 const std::vector<std::uint32_t>& x_t,
                                 std::uint64_t* g_eval_counter) {
  if (variant != 1 && variant != 2)
    throw std::invalid_argument("modular bound variant must be 1 or 2");
  const std::uint32_t m = static_cast<std::uint32_t>(stats.n_candidates());
  ModularBound mb;
  mb.weight.assign(m, 0);
  std::vector<char> in_x(m, 0);
  for (std::uint32_t j : x_t) in_x[j] = 1;
  std::uint64_t evals = 0;

  // Removal weights: a candidate's last-removal gain is the number of its
  // documents covered once within the reference family (X_t for variant 1,
  // the whole ground set for variant 2), found by one multiplicity pass.
  std::vector<std::uint8_t> mult(stats.n_docs, 0);
  const auto bump = [&mult](DocId d) {
    if (mult[d] < 2) ++mult[d];
  };
  if (variant == 1) {
    for (std::uint32_t j : x_t) stats.match_sets[j].for_each(bump);
  } else {
    for (std::uint32_t j = 0; j < m; ++j) stats.match_sets[j].for_each(bump);
  }
  std::uint64_t removal_sum = 0;
  for (std::uint32_t j : x_t) {
    std::uint64_t unique = 0;
    stats.match_sets[j].for_each([&](DocId d) { unique += mult[d] == 1; });
    mb.weight[j] = unique;
    removal_sum += unique;
    ++evals;
  }

  if (variant == 1) {
    for (std::uint32_t j = 0; j < m; ++j)
      if (!in_x[j]) mb.weight[j] = stats.singleton_g(j);
  } else {
    DocSet covered =
        DocSet::empty(stats.n_docs, DocSet::pick_rep(stats.n_docs));
    for (std::uint32_t j : x_t) covered.union_in(stats.match_sets[j]);
    for (std::uint32_t j = 0; j < m; ++j) {
      if (in_x[j]) continue;
      mb.weight[j] = stats.match_sets[j].count_missing_in(covered);
      ++evals;
    }
  }

  mb.constant = eval_g(stats, x_t) - removal_sum;
  ++evals;
  if (g_eval_counter != nullptr) *g_eval_counter += evals;
  return mb;
}

std::vector<std::uint32_t> knapsack_greedy(
    const ClauseStats& stats, const std::vector<std::uint64_t>& weights,
    std::uint64_t budget_residual, std::uint64_t* f_evals,
    std::uint64_t* g_evals) {
  const std::uint32_t m = static_cast<std::uint32_t>(stats.n_candidates());
  const std::vector<std::uint32_t> ranks = canonical_ranks(stats.clauses);
  CoverageState state(stats);
  std::vector<std::uint64_t> f_upper = stats.singleton_f_num;
  std::vector<std::uint64_t> stamp(m, 0);
  std::vector<char> dead(m, 0);
  std::uint64_t epoch = 0;
  std::uint64_t spent = 0;
  MaxHeap heap;
  for (std::uint32_t j = 0; j < m; ++j)
    if (f_upper[j] > 0)
      heap.push(HeapEntry{{f_upper[j], weights[j]}, ranks[j], j});
  while (!heap.empty()) {
    const HeapEntry entry = heap.top();
    heap.pop();
    const std::uint32_t j = entry.cand;
    if (dead[j] || state.committed(j)) continue;
    if (spent + weights[j] > budget_residual) {
      dead[j] = 1;  // modular cost: infeasible now means infeasible forever
      continue;
    }
    if (stamp[j] == epoch) {
      state.commit(j);
      spent += weights[j];
      ++epoch;
      continue;
    }
    const std::uint64_t fj = state.f_gain_num(j);
    f_upper[j] = fj;
    stamp[j] = epoch;
    if (fj == 0) {
      dead[j] = 1;
      continue;
    }
    heap.push(HeapEntry{{fj, weights[j]}, ranks[j], j});
  }

  // Cost-benefit greedy alone can be arbitrarily bad; return the better of
  // the run and the single best affordable candidate.
  bool have_single = false;
  std::uint32_t single = 0;
  for (std::uint32_t j = 0; j < m; ++j) {
    if (weights[j] > budget_residual || stats.singleton_f_num[j] == 0)
      continue;
    if (!have_single ||
        stats.singleton_f_num[j] > stats.singleton_f_num[single] ||
        (stats.singleton_f_num[j] == stats.singleton_f_num[single] &&
         ranks[j] < ranks[single])) {
      have_single = true;
      single = j;
    }
  }
  if (f_evals != nullptr) *f_evals += state.f_evals();
  if (g_evals != nullptr) *g_evals += state.g_evals();
  if (have_single && stats.singleton_f_num[single] > state.f_num())
    return {single};
  return state.solution();
}

SolveResult isk(const ClauseStats& stats, int variant,
                const SolveOptions& opts) {
  const auto start = Clock::now();
  validate_budget(opts.budget, stats.n_docs);
  SolveResult res;
  res.path.converged = false;
  std::vector<std::uint32_t> current;        // sorted, the fixed-point probe
  std::vector<std::uint32_t> current_order;  // selection order for reporting
  for (std::uint64_t round = 1; round <= opts.isk_max_rounds; ++round) {
    const ModularBound mb =
        modular_upper_bound(variant, stats, current, &res.g_evals);
    // constant = gt(empty set) <= gt(X_t) = g(X_t) <= B, so the residual
    // never underflows.
    const std::uint64_t residual = opts.budget - mb.constant;
    std::vector<std::uint32_t> next_order = knapsack_greedy(
        stats, mb.weight, residual, &res.f_evals, &res.g_evals);
    std::vector<std::uint32_t> next = next_order;
    std::sort(next.begin(), next.end());

    PathRecord rec;
    rec.iter = round;
    rec.f_num = eval_f_num(stats, next);
    rec.f_den = stats.n;
    rec.g = eval_g(stats, next);
    rec.wall_ns = elapsed_ns(start);
    rec.evals = res.f_evals + res.g_evals;
    res.path.records.push_back(std::move(rec));

    if (next == current) {
      res.path.converged = true;
      break;
    }
    current = std::move(next);
    current_order = std::move(next_order);
  }
  res.solution = current_order;
  if (!res.path.records.empty()) {
    res.f_num = res.path.records.back().f_num;
    res.f_den = res.path.records.back().f_den;
    res.g = res.path.records.back().g;
  } else {
    res.f_den = stats.n;
  }
  res.wall_ns = elapsed_ns(start);
  return res;
}

OracleResult oracle_exhaustive(const ClauseStats& stats,
                               std::uint64_t budget) {
  const std::size_t m = stats.n_candidates();
  if (m > 20)
    throw std::invalid_argument(
        "oracle_exhaustive supports at most 20 candidates");
  const std::vector<std::uint32_t> ranks = canonical_ranks(stats.clauses);
  OracleResult best;
  best.f_den = stats.n == 0 ? 1 : stats.n;
  std::vector<std::uint32_t> best_seq;  // canonical ranks, sorted
  std::vector<std::uint32_t> subset;
  std::vector<std::uint32_t> seq;
  // The empty set is the initial incumbent (f = 0, g = 0, lex-smallest).
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    subset.clear();
    for (std::uint32_t j = 0; j < m; ++j)
      if ((mask >> j) & 1u) subset.push_back(j);
    const std::uint64_t g = eval_g(stats, subset);
    if (g > budget) continue;
    const std::uint64_t f = eval_f_num(stats, subset);
    bool take = false;
    if (f > best.f_num) {
      take = true;
    } else if (f == best.f_num) {
      if (g < best.g) {
        take = true;
      } else if (g == best.g) {
        seq.clear();
        for (std::uint32_t j : subset) seq.push_back(ranks[j]);
        std::sort(seq.begin(), seq.end());
        take = seq < best_seq;
      }
    }
    if (!take) continue;
    best.best = subset;
    best.f_num = f;
    best.g = g;
    best_seq.clear();
    for (std::uint32_t j : subset) best_seq.push_back(ranks[j]);
    std::sort(best_seq.begin(), best_seq.end());
  }
  return best;
}

}  // namespace tierforge
