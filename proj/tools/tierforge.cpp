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

// tierforge: builds the Tier-1 slice of a two-tier search index.
//
//   synth         generate a synthetic corpus plus train/test query logs
//   mine          mine frequent clause candidates from a query log
//   solve         select Tier-1 clauses (or baseline query sets) under a
//                 document budget and report coverage
//   evaluate      score an existing clause/selection file against logs
//   oracle-check  compare every solver against exhaustive search on
//                 random tiny instances
//
// Exit codes: 0 success, 1 usage error, 2 data/runtime error.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "tierforge/baselines.hpp"
#include "tierforge/clauseminer.hpp"
#include "tierforge/corpus.hpp"
#include "tierforge/eval.hpp"
#include "tierforge/matchengine.hpp"
#include "tierforge/rational.hpp"
#include "tierforge/scsk.hpp"
#include "tierforge/submodfn.hpp"

namespace {

namespace fs = std::filesystem;
using namespace tierforge;

unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Over-budget requests are clamped (a Tier 1 holding everything is the
// degenerate but valid answer); zero is a usage error.
std::uint64_t resolve_budget(const std::string& text, std::size_t n_docs) {
  const BudgetSpec spec = BudgetSpec::parse(text);
  std::uint64_t budget = spec.resolve(n_docs);
  if (budget > n_docs) {
    std::cerr << "warning: budget " << budget << " exceeds the corpus size "
              << n_docs << "; clamping to " << n_docs << "\n";
    budget = n_docs;
  }
  if (budget < 1)
    throw std::invalid_argument("budget must be at least 1 document");
  return budget;
}

// Dense candidate bitsets cost n_docs/8 bytes each; switch to sorted ids
// when the whole ground set would not fit in ~1 GiB.
DocSet::Rep pick_match_rep(std::size_t n_candidates, std::size_t n_docs) {
  if (DocSet::pick_rep(n_docs) == DocSet::Rep::kSparse)
    return DocSet::Rep::kSparse;
  const std::uint64_t words = (n_docs + 63) / 64;
  const std::uint64_t total_bytes = words * 8 * std::uint64_t{n_candidates};
  return total_bytes <= (std::uint64_t{1} << 30) ? DocSet::Rep::kDense
                                                 : DocSet::Rep::kSparse;
}

void save_doc_ids(const DocSet& docs, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write document list: " + path);
  docs.for_each([&out](DocId d) { out << d << '\n'; });
  if (!out) throw DataError("write failed: " + path);
}

std::string ratio_str(std::uint64_t num, std::uint64_t den) {
  char buf[32];
  const double v =
      den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

MinerConfig make_miner_config(const std::string& support_text,
                              std::uint32_t max_len,
                              std::uint64_t max_candidates) {
  MinerConfig cfg;
  if (!parse_decimal_rational(support_text, cfg.support_num, cfg.support_den))
    throw std::invalid_argument("malformed support fraction: " + support_text);
  cfg.max_clause_len = max_len;
  if (max_candidates > 0) cfg.max_candidates = max_candidates;
  return cfg;
}

struct SynthArgs {
  std::uint64_t seed = 42;
  std::size_t docs = 50000;
  std::size_t train = 100000;
  std::size_t test = 20000;
  std::size_t vocab = 5000;
  std::size_t intents = 1000;
  unsigned noise_pct = 25;
  double zipf_s = 1.1;
  std::string out_dir;
};

int run_synth(const SynthArgs& args) {
  SynthConfig cfg;
  cfg.seed = args.seed;
  cfg.n_docs = args.docs;
  cfg.n_train = args.train;
  cfg.n_test = args.test;
  cfg.vocab_size = args.vocab;
  cfg.n_intents = args.intents;
  cfg.noise_pct = args.noise_pct;
  cfg.zipf_s = args.zipf_s;
  const SynthData data = generate_synthetic(cfg);

  fs::create_directories(args.out_dir);
  const auto out = [&args](const char* name) {
    return (fs::path(args.out_dir) / name).string();
  };
  save_corpus(data.corpus, out("corpus.tsv"));
  save_query_log(data.train, data.corpus.vocab, out("train.tsv"));
  save_query_log(data.test, data.corpus.vocab, out("test.tsv"));

  std::cout << "docs=" << data.corpus.n_docs() << '\n'
            << "vocab=" << data.corpus.vocab.size() << '\n'
            << "train_queries=" << data.train.queries.size()
            << " train_weight=" << data.train.total_weight << '\n'
            << "test_queries=" << data.test.queries.size()
            << " test_weight=" << data.test.total_weight << '\n'
            << "novel_fraction=" << data.novel_num << '/' << data.novel_den
            << '\n';
  return 0;
}

struct MineArgs {
  std::string corpus_path;
  std::string log_path;
  std::string support = "0.0001";
  std::uint32_t max_len = 3;
  std::uint64_t max_candidates = 0;
  std::string out_path;
};

int run_mine(const MineArgs& args) {
  Corpus corpus = load_corpus(args.corpus_path);
  const QueryLog log = load_query_log(args.log_path, corpus.vocab);
  const MinerConfig cfg =
      make_miner_config(args.support, args.max_len, args.max_candidates);
  const std::vector<MinedClause> mined = mine_candidates(log, cfg);
  save_candidates(mined, corpus.vocab, args.out_path);
  std::cout << "candidates=" << mined.size() << '\n'
            << "support_threshold=" << support_threshold(cfg, log.total_weight)
            << '\n';
  return 0;
}

struct SolveArgs {
  std::string corpus_path;
  std::string log_path;
  std::string test_path;
  std::string candidates_path;
  std::string budget = "0.5x";
  std::string algorithm = "lazy";
  std::string support = "0.0001";
  std::uint32_t max_len = 3;
  std::uint64_t max_candidates = 0;
  unsigned threads = 0;  // 0 = all cores
  bool relative = false;
  std::string out_dir;
};

bool is_query_algorithm(const std::string& name) {
  return name == "popularity" || name == "flowmax" || name == "flowgreedy";
}

void add_run_extras(CoverageReport& report, const std::string& algorithm,
                    std::size_t selected, unsigned threads,
                    std::uint64_t f_evals, std::uint64_t g_evals,
                    std::uint64_t wall_ns) {
  report.extra.emplace_back("algorithm", algorithm);
  report.extra.emplace_back("selected", std::to_string(selected));
  report.extra.emplace_back("threads", std::to_string(threads));
  report.extra.emplace_back("f_evals", std::to_string(f_evals));
  report.extra.emplace_back("g_evals", std::to_string(g_evals));
  report.extra.emplace_back("wall_ns", std::to_string(wall_ns));
}

int run_solve(const SolveArgs& args) {
  Corpus corpus = load_corpus(args.corpus_path);
  QueryLog log = load_query_log(args.log_path, corpus.vocab);
  QueryLog test;
  if (!args.test_path.empty())
    test = load_query_log(args.test_path, corpus.vocab);
  const InvertedIndex index = InvertedIndex::build(corpus);
  const std::uint64_t budget = resolve_budget(args.budget, corpus.n_docs());
  const unsigned threads = resolve_threads(args.threads);
  ThreadPool pool(threads);

  fs::create_directories(args.out_dir);
  const auto out = [&args](const char* name) {
    return (fs::path(args.out_dir) / name).string();
  };

  CoverageReport report;
  if (is_query_algorithm(args.algorithm)) {
    QueryBaselineResult base;
    if (args.algorithm == "popularity")
      base = popularity_baseline(index, log, budget, &pool);
    else if (args.algorithm == "flowmax")
      base = flowmax_baseline(index, log, budget, &pool);
    else
      base = flow_greedy_baseline(index, log, budget, &pool);

    std::vector<std::vector<TermId>> picked;
    picked.reserve(base.selected.size());
    for (std::uint32_t i : base.selected)
      picked.push_back(log.queries[i].terms);
    save_query_selection(picked, corpus.vocab, out("clauses.txt"));
    save_path_csv(base.path, corpus.vocab, out("path.csv"));

    SelectionAssignment assignment(QuerySelection(std::move(picked), index));
    save_doc_ids(assignment.tier1_docs(), out("tier1_docs.txt"));
    report = evaluate(assignment, log, test, index, budget, &pool);
    add_run_extras(report, args.algorithm, base.selected.size(), threads,
                   base.f_evals, base.g_evals, base.wall_ns);
  } else {
    std::vector<Clause> candidates;
    if (!args.candidates_path.empty()) {
      candidates =
          strip_support(load_candidates(args.candidates_path, corpus.vocab));
    } else {
      const MinerConfig cfg =
          make_miner_config(args.support, args.max_len, args.max_candidates);
      candidates = strip_support(mine_candidates(log, cfg));
    }
    const DocSet::Rep rep = pick_match_rep(candidates.size(), corpus.n_docs());
    const ClauseStats stats =
        precompute_stats(std::move(candidates), index, log, rep, &pool);

    SolveOptions opts;
    opts.budget = budget;
    opts.threads = threads;
    SolveResult sol;
    bool report_convergence = false;
    if (args.algorithm == "greedy") {
      sol = greedy(stats, opts);
    } else if (args.algorithm == "lazy") {
      sol = lazy_greedy(stats, opts);
    } else if (args.algorithm == "optpes") {
      sol = optpes_greedy(stats, opts);
    } else if (args.algorithm == "agnostic") {
      sol = constraint_agnostic_greedy(stats, opts);
    } else if (args.algorithm == "isk1") {
      sol = isk(stats, 1, opts);
      report_convergence = true;
    } else {
      sol = isk(stats, 2, opts);
      report_convergence = true;
    }

    std::vector<Clause> selected;
    selected.reserve(sol.solution.size());
    for (std::uint32_t j : sol.solution) selected.push_back(stats.clauses[j]);
    save_clauses(selected, corpus.vocab, out("clauses.txt"));
    save_path_csv(sol.path, corpus.vocab, out("path.csv"));

    DocSet tier1 =
        DocSet::empty(corpus.n_docs(), DocSet::pick_rep(corpus.n_docs()));
    for (std::uint32_t j : sol.solution) tier1.union_in(stats.match_sets[j]);
    save_doc_ids(tier1, out("tier1_docs.txt"));

    const ClauseAssignment assignment(selected, index);
    report = evaluate(assignment, log, test, index, budget, &pool);
    add_run_extras(report, args.algorithm, selected.size(), threads,
                   sol.f_evals, sol.g_evals, sol.wall_ns);
    if (report_convergence) {
      report.extra.emplace_back("converged",
                                sol.path.converged ? "true" : "false");
      report.extra.emplace_back("rounds",
                                std::to_string(sol.path.records.size()));
    }
  }

  // Optional comparison column: coverage normalized by what greedy query
  // selection achieves on the same budget.
  if (args.relative) {
    const QueryBaselineResult fg = flow_greedy_baseline(index, log, budget,
                                                        &pool);
    std::vector<std::vector<TermId>> fg_picked;
    fg_picked.reserve(fg.selected.size());
    for (std::uint32_t i : fg.selected)
      fg_picked.push_back(log.queries[i].terms);
    SelectionAssignment fg_assign(QuerySelection(std::move(fg_picked), index));
    const CoverageReport fg_rep = evaluate(fg_assign, log, test, index, budget,
                                           &pool);
    const auto rel = [](std::uint64_t ours, std::uint64_t base) {
      if (base == 0) return std::string(ours == 0 ? "1.000000" : "inf");
      return ratio_str(ours, base);
    };
    report.extra.emplace_back("flow_greedy_train_coverage_ratio",
                              ratio_str(fg_rep.train_num, fg_rep.train_den));
    report.extra.emplace_back("relative_train_coverage",
                              rel(report.train_num, fg_rep.train_num));
    if (!args.test_path.empty()) {
      report.extra.emplace_back("flow_greedy_test_coverage_ratio",
                                ratio_str(fg_rep.test_num, fg_rep.test_den));
      report.extra.emplace_back("relative_test_coverage",
                                rel(report.test_num, fg_rep.test_num));
    }
  }

  write_report_txt(report, out("report.txt"));
  write_report_json(report, out("report.json"));
  std::cout << report_txt(report);
  return 0;
}

struct EvaluateArgs {
  std::string corpus_path;
  std::string log_path;
  std::string test_path;
  std::string tiers_path;
  std::string budget = "1x";
  unsigned threads = 0;  // 0 = all cores
  std::string out_dir;
};

int run_evaluate(const EvaluateArgs& args) {
  Corpus corpus = load_corpus(args.corpus_path);
  QueryLog log = load_query_log(args.log_path, corpus.vocab);
  QueryLog test;
  if (!args.test_path.empty())
    test = load_query_log(args.test_path, corpus.vocab);
  const InvertedIndex index = InvertedIndex::build(corpus);
  const std::uint64_t budget = resolve_budget(args.budget, corpus.n_docs());
  const unsigned threads = resolve_threads(args.threads);
  ThreadPool pool(threads);

  std::unique_ptr<TierAssignment> assignment;
  std::string method;
  std::size_t selected = 0;
  if (is_query_selection_file(args.tiers_path)) {
    QuerySelection sel(load_query_selection(args.tiers_path, corpus.vocab),
                       index);
    selected = sel.queries().size();
    method = "selection";
    assignment = std::make_unique<SelectionAssignment>(std::move(sel));
  } else {
    std::vector<Clause> clauses = load_clauses(args.tiers_path, corpus.vocab);
    selected = clauses.size();
    method = "clauses";
    assignment = std::make_unique<ClauseAssignment>(std::move(clauses), index);
  }

  CoverageReport report = evaluate(*assignment, log, test, index, budget,
                                   &pool);
  report.extra.emplace_back("method", method);
  report.extra.emplace_back("selected", std::to_string(selected));
  if (!args.out_dir.empty()) {
    fs::create_directories(args.out_dir);
    write_report_txt(report,
                     (fs::path(args.out_dir) / "report.txt").string());
    write_report_json(report,
                      (fs::path(args.out_dir) / "report.json").string());
  }
  std::cout << report_txt(report);
  return 0;
}

struct OracleCheckArgs {
  std::uint64_t instances = 100;
  std::uint64_t seed = 7;
  std::uint64_t max_candidates = 12;
};

int run_oracle_check(const OracleCheckArgs& args) {
  if (args.max_candidates < 1 || args.max_candidates > 20)
    throw std::invalid_argument(
        "max candidates must be between 1 and 20 for exhaustive search");
  static constexpr const char* kNames[] = {"greedy", "lazy",   "optpes",
                                           "agnostic", "isk1", "isk2"};
  struct Stat {
    std::size_t runs = 0;
    std::size_t feasible = 0;
    std::size_t optimal = 0;
    double ratio_sum = 0.0;
    double ratio_min = 1.0;
    std::size_t ratio_n = 0;
  };
  Stat stats_by_algo[6];
  std::size_t violations = 0;
  std::mt19937_64 rng(args.seed);

  for (std::uint64_t inst = 0; inst < args.instances; ++inst) {
    SynthConfig cfg;
    cfg.seed = rng();
    cfg.n_docs = 8 + rng() % 18;
    cfg.n_train = 15 + rng() % 30;
    cfg.n_test = 0;
    cfg.vocab_size = 6 + rng() % 8;
    cfg.doc_len_min = 2;
    cfg.doc_len_max = 5;
    cfg.query_len_min = 1;
    cfg.query_len_max = 3;
    cfg.n_intents = 4 + rng() % 8;
    cfg.intent_len_max = 2;
    cfg.noise_pct = 30;
    cfg.zipf_s = 1.05;
    const SynthData data = generate_synthetic(cfg);
    const InvertedIndex index = InvertedIndex::build(data.corpus);

    MinerConfig mcfg;
    mcfg.support_num = 1;
    mcfg.support_den = data.train.total_weight;
    mcfg.max_clause_len = 2;
    mcfg.max_candidates = args.max_candidates;
    const ClauseStats stats =
        precompute_stats(strip_support(mine_candidates(data.train, mcfg)),
                         index, data.train, DocSet::Rep::kDense);
    const std::uint64_t budget = 1 + rng() % data.corpus.n_docs();
    const OracleResult oracle = oracle_exhaustive(stats, budget);

    SolveOptions opts;
    opts.budget = budget;
    SolveResult results[6];
    results[0] = greedy(stats, opts);
    results[1] = lazy_greedy(stats, opts);
    SolveOptions par = opts;
    par.threads = 2;
    results[2] = optpes_greedy(stats, par);
    results[3] = constraint_agnostic_greedy(stats, opts);
    results[4] = isk(stats, 1, opts);
    results[5] = isk(stats, 2, opts);

    for (int a = 0; a < 6; ++a) {
      Stat& st = stats_by_algo[a];
      ++st.runs;
      if (results[a].g <= budget) {
        ++st.feasible;
      } else {
        ++violations;
        std::cerr << "violation: instance " << inst << " " << kNames[a]
                  << " exceeded the budget (g=" << results[a].g
                  << " B=" << budget << ")\n";
      }
      if (results[a].f_num > oracle.f_num) {
        ++violations;
        std::cerr << "violation: instance " << inst << " " << kNames[a]
                  << " beat the exhaustive optimum (f=" << results[a].f_num
                  << " opt=" << oracle.f_num << ")\n";
      }
      if (results[a].f_num == oracle.f_num) ++st.optimal;
      if (oracle.f_num > 0) {
        const double r = static_cast<double>(results[a].f_num) /
                         static_cast<double>(oracle.f_num);
        st.ratio_sum += r;
        st.ratio_min = std::min(st.ratio_min, r);
        ++st.ratio_n;
      }
    }
    for (int a = 1; a <= 2; ++a) {
      if (results[a].solution != results[0].solution) {
        ++violations;
        std::cerr << "violation: instance " << inst << " " << kNames[a]
                  << " selection differs from greedy\n";
      }
    }
  }

  std::cout << std::left << std::setw(10) << "algorithm" << std::right
            << std::setw(7) << "runs" << std::setw(10) << "feasible"
            << std::setw(9) << "optimal" << std::setw(12) << "mean_f/opt"
            << std::setw(11) << "min_f/opt" << '\n';
  for (int a = 0; a < 6; ++a) {
    const Stat& st = stats_by_algo[a];
    const double mean =
        st.ratio_n == 0 ? 1.0 : st.ratio_sum / static_cast<double>(st.ratio_n);
    const double lo = st.ratio_n == 0 ? 1.0 : st.ratio_min;
    std::cout << std::left << std::setw(10) << kNames[a] << std::right
              << std::setw(7) << st.runs << std::setw(10) << st.feasible
              << std::setw(9) << st.optimal << std::setw(12) << std::fixed
              << std::setprecision(4) << mean << std::setw(11) << lo << '\n';
  }
  if (violations != 0) {
    std::cerr << "oracle-check failed: " << violations << " violation(s)\n";
    return 2;
  }
  std::cout << "oracle-check passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tierforge: clause selection for a two-tier search index"};
  app.require_subcommand(1);

  SynthArgs synth_args;
  CLI::App* synth = app.add_subcommand(
      "synth", "Generate a synthetic corpus and query logs");
  synth->add_option("--seed", synth_args.seed, "RNG seed")
      ->envname("TIERFORGE_SEED");
  synth->add_option("--docs", synth_args.docs, "Number of documents");
  synth->add_option("--train", synth_args.train, "Train log draws");
  synth->add_option("--test", synth_args.test, "Test log draws");
  synth->add_option("--vocab", synth_args.vocab, "Vocabulary size");
  synth->add_option("--intents", synth_args.intents,
                    "Number of query intents");
  synth->add_option("--noise-pct", synth_args.noise_pct,
                    "Chance (0-100) an extra query term is a global draw");
  synth->add_option("--zipf-s", synth_args.zipf_s,
                    "Skew of the popularity distributions");
  synth->add_option("--out-dir", synth_args.out_dir, "Output directory")
      ->required();

  MineArgs mine_args;
  CLI::App* mine = app.add_subcommand(
      "mine", "Mine frequent clause candidates from a query log");
  mine->add_option("--corpus", mine_args.corpus_path, "Corpus file")
      ->required();
  mine->add_option("--log", mine_args.log_path, "Query log file")->required();
  mine->add_option("--support", mine_args.support,
                   "Minimum support as a fraction of the log weight");
  mine->add_option("--max-len", mine_args.max_len, "Maximum clause length");
  mine->add_option("--max-candidates", mine_args.max_candidates,
                   "Keep only this many top candidates (0 = all)");
  mine->add_option("--out", mine_args.out_path, "Candidate output file")
      ->required();

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand(
      "solve", "Select Tier-1 clauses under a document budget");
  solve->add_option("--corpus", solve_args.corpus_path, "Corpus file")
      ->required();
  solve->add_option("--log", solve_args.log_path, "Training query log")
      ->required();
  solve->add_option("--test", solve_args.test_path,
                    "Optional held-out query log for the report");
  solve->add_option("--candidates", solve_args.candidates_path,
                    "Candidate file (default: mine from the log)");
  solve->add_option("--budget", solve_args.budget,
                    "Tier-1 document budget: count or fraction like 0.5x");
  solve
      ->add_option("--algorithm", solve_args.algorithm,
                   "greedy|lazy|optpes|agnostic|isk1|isk2|popularity|flowmax|"
                   "flowgreedy")
      ->check(CLI::IsMember({"greedy", "lazy", "optpes", "agnostic", "isk1",
                             "isk2", "popularity", "flowmax", "flowgreedy"}));
  solve->add_option("--support", solve_args.support,
                    "Mining support when --candidates is absent");
  solve->add_option("--max-len", solve_args.max_len,
                    "Mining clause length cap");
  solve->add_option("--max-candidates", solve_args.max_candidates,
                    "Mining candidate cap (0 = all)");
  solve
      ->add_option("--threads", solve_args.threads,
                   "Worker threads (0 = all cores)")
      ->envname("TIERFORGE_THREADS");
  solve->add_flag("--relative", solve_args.relative,
                  "Also report coverage relative to the flowgreedy baseline");
  solve->add_option("--out-dir", solve_args.out_dir, "Output directory")
      ->required();

  EvaluateArgs eval_args;
  CLI::App* evaluate_cmd = app.add_subcommand(
      "evaluate", "Evaluate a clause or selection file against query logs");
  evaluate_cmd->add_option("--corpus", eval_args.corpus_path, "Corpus file")
      ->required();
  evaluate_cmd->add_option("--log", eval_args.log_path, "Training query log")
      ->required();
  evaluate_cmd->add_option("--test", eval_args.test_path,
                           "Optional held-out query log");
  evaluate_cmd
      ->add_option("--tiers", eval_args.tiers_path,
                   "Clause file or #type=query selection file")
      ->required();
  evaluate_cmd->add_option("--budget", eval_args.budget,
                           "Budget recorded in the report");
  evaluate_cmd
      ->add_option("--threads", eval_args.threads,
                   "Worker threads (0 = all cores)")
      ->envname("TIERFORGE_THREADS");
  evaluate_cmd->add_option("--out-dir", eval_args.out_dir,
                           "Optional directory for report.txt/report.json");

  OracleCheckArgs oracle_args;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle-check",
      "Compare all solvers against exhaustive search on tiny instances");
  oracle_cmd->add_option("--instances", oracle_args.instances,
                         "Number of random instances");
  oracle_cmd->add_option("--seed", oracle_args.seed, "RNG seed")
      ->envname("TIERFORGE_SEED");
  oracle_cmd->add_option("--max-candidates", oracle_args.max_candidates,
                         "Mined candidate cap per instance (at most 20)");

  int rc = 0;
  synth->callback([&]() { rc = run_synth(synth_args); });
  mine->callback([&]() { rc = run_mine(mine_args); });
  solve->callback([&]() { rc = run_solve(solve_args); });
  evaluate_cmd->callback([&]() { rc = run_evaluate(eval_args); });
  oracle_cmd->callback([&]() { rc = run_oracle_check(oracle_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
