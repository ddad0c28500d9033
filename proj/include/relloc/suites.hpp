#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "relloc/game.hpp"

namespace relloc {

struct CaseResult {
  std::string name;
  bool pass = true;
  std::string bound;   // the violated bound when !pass
  std::string detail;  // graph, seed, round of the violation
  int games = 0;
  int engine_errors = 0;  // referee errors plus traces that fail verify_trace
  double seconds = 0;

  void fail(std::string violated, std::string why);
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;

  int passed() const;
  int failed() const;
  int games() const;
  int engine_errors() const;
  bool ok() const { return failed() == 0; }
};

// Columns: suite,case,pass,bound,detail,games; with_time appends seconds.
// Wall-clock is off by default so reports stay byte-identical across runs.
void write_csv(std::ostream& out, const SuiteReport& report, bool with_time = false);

struct SuiteOptions {
  std::optional<int> trials;
  std::optional<int> max_n;
  std::optional<int> dmax;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

// Iterated update_candidates against brute_force_candidates: exhaustive over
// connected graphs with n <= max_n (default 5) and every probe/bit sequence of
// length <= 6, then `trials` (default 1000) random cases with n <= 8.
SuiteReport run_oracle_suite(const SuiteOptions& opts);

// Tree cat against the greedy evader on `trials` (default 50) random trees per
// D in 2..dmax (default 5), n <= max_n (default 200); then exhaustive escape
// search on P_9 and on every tree with n <= 9 and maximum degree 3.
SuiteReport run_tree_suite(const SuiteOptions& opts);

// Grid cat on n x n grids, n = 8, 16, ..., max_n (default 512), against the
// greedy evader and `trials` (default 20) random mice.
SuiteReport run_grid_suite(const SuiteOptions& opts);

// Path cat on n = 4 and 2^j + 1 up to max_n (default 4097) plus `trials`
// (default 20) random sizes, against greedy, random and (n <= 10)
// exhaustive mice.
SuiteReport run_path_suite(const SuiteOptions& opts);

// Slow cat on `trials` (default 50) random connected graphs with n <= max_n
// (default 100) and maximum degree <= dmax (default 5), slowness 4D, against
// greedy and random mice.
SuiteReport run_slow_suite(const SuiteOptions& opts);

// find_splitting_edge on `trials` (default 200) random (graph, M) pairs with
// n <= max_n (default 40).
SuiteReport run_splitting_suite(const SuiteOptions& opts);

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);
const std::vector<std::string>& suite_names();

// Deterministic per-case seed.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

// Runs fn(0..count-1) on up to `threads` workers. Callers write results by
// index, so output order never depends on scheduling.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

struct SweepOptions {
  std::string family;  // path, grid, substar, tree, connected
  std::vector<int> sizes;
  std::string cat;
  std::string mouse;
  int trials = 1;
  std::uint64_t seed = 0;
  int horizon = 64;
  std::optional<int> target;  // default: the cat's guaranteed radius, else 0
  std::optional<int> slowness;  // default: what the cat requires, else 1
  int dmax = 3;  // tree and connected families
  double p = 0.05;  // connected family
  unsigned threads = 1;
};

struct SweepRow {
  int size = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  std::optional<int> first_success;
  int final_radius = 0;
  int rounds = 0;
  std::string status = "ok";  // otherwise the error message
};

std::string sweep_graph_spec(const SweepOptions& opts, int size, std::uint64_t seed);
std::vector<SweepRow> run_sweep(const SweepOptions& opts);
// Header size,trial,seed,first_success,final_radius,rounds,status.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace relloc
