// relloc: play games, run verification suites and sweeps.
//
// Exit codes: 0 success, 1 bound violation, 2 usage or parse error,
// 3 engine error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "relloc/escape_search.hpp"
#include "relloc/game.hpp"
#include "relloc/mice.hpp"
#include "relloc/specs.hpp"
#include "relloc/suites.hpp"
#include "relloc/trace_io.hpp"

namespace {

using namespace relloc;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitEngine = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Turns --config FILE into flags placed ahead of the real arguments, so that
// explicit flags (parsed later, last value wins) take precedence.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::optional<std::string> path;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (!path) return args;

  std::ifstream in(*path);
  if (!in) throw UsageError("cannot open config " + *path);
  nlohmann::json cfg;
  try {
    cfg = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config " + *path + ": " + e.what());
  }
  if (!cfg.is_object()) throw UsageError("config " + *path + " must be a JSON object");

  std::vector<std::string> from_file;
  for (const auto& [key, value] : cfg.items()) {
    const std::string flag = "--" + key;
    if (value.is_boolean()) {
      if (value.get<bool>()) from_file.push_back(flag);
    } else if (value.is_string()) {
      from_file.push_back(flag);
      from_file.push_back(value.get<std::string>());
    } else if (!value.is_null()) {
      from_file.push_back(flag);
      from_file.push_back(value.dump());
    }
  }
  // rest[0] is the subcommand; config flags go right after it.
  std::vector<std::string> out;
  if (!rest.empty()) out.push_back(rest.front());
  out.insert(out.end(), from_file.begin(), from_file.end());
  if (rest.size() > 1) out.insert(out.end(), rest.begin() + 1, rest.end());
  return out;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  return flag ? *flag : default_seed();
}

void open_or_throw(std::ofstream& f, const std::string& path) {
  f.open(path);
  if (!f) throw UsageError("cannot write " + path);
}

// ---------------------------------------------------------------- play

struct PlayArgs {
  std::string graph;
  std::string cat;
  std::string mouse;
  int horizon = 64;
  std::optional<int> slowness;
  std::optional<int> target;
  std::optional<std::uint64_t> seed;
  std::string trace_path;
  std::string summary_path;
  std::string certificate_path;
};

int cmd_play(const PlayArgs& a) {
  const std::uint64_t seed = resolve_seed(a.seed);
  const Graph g = make_graph(a.graph, seed);
  auto cat = make_cat(a.cat, g, seed);
  const std::optional<int> needed = required_slowness(*cat);
  if (needed && a.slowness && *a.slowness != *needed) {
    throw SpecError("cat " + cat->name() + " requires slowness " + std::to_string(*needed));
  }
  GameConfig cfg;
  cfg.horizon = a.horizon;
  cfg.slowness = a.slowness.value_or(needed.value_or(1));
  cfg.target_distance = a.target.value_or(cat->guaranteed_radius().value_or(0));
  cfg.seed = seed;
  try {
    validate(cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto mouse = make_mouse(a.mouse, seed, cfg.slowness);

  const GameTrace trace = play_game(g, *cat, *mouse, cfg);

  if (!a.trace_path.empty()) {
    std::ofstream f;
    open_or_throw(f, a.trace_path);
    write_trace_jsonl(f, trace, g);
  }
  if (!a.certificate_path.empty()) {
    std::vector<Vertex> path;
    for (const auto& r : trace.rounds) path.push_back(r.mouse);
    std::ofstream f;
    open_or_throw(f, a.certificate_path);
    write_certificate(f, path);
  }
  if (!a.summary_path.empty()) {
    std::ofstream f;
    open_or_throw(f, a.summary_path);
    write_summary_json(f, trace, a.graph);
  } else {
    write_summary_json(std::cout, trace, a.graph);
  }
  if (const auto* ex = dynamic_cast<const ExhaustiveEvader*>(mouse.get()); ex && ex->result()) {
    std::cerr << (ex->result()->escaped ? "escape found" : "no escape") << " after "
              << ex->result()->nodes << " search nodes\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite;
  std::optional<int> trials;
  std::optional<int> max_n;
  std::optional<int> dmax;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  std::string report_path;
  bool timing = false;
};

int cmd_verify(const VerifyArgs& a) {
  SuiteOptions opts;
  opts.trials = a.trials;
  opts.max_n = a.max_n;
  opts.dmax = a.dmax;
  opts.seed = resolve_seed(a.seed);
  opts.threads = a.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : a.threads;
  SuiteReport report;
  try {
    report = run_suite(a.suite, opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!a.report_path.empty()) {
    std::ofstream f;
    open_or_throw(f, a.report_path);
    write_csv(f, report, a.timing);
  }
  double seconds = 0;
  for (const auto& c : report.cases) {
    seconds += c.seconds;
    if (!c.pass) std::cout << "FAIL " << c.name << ": " << c.bound << ": " << c.detail << '\n';
  }
  std::cout << report.suite << ": " << report.passed() << "/" << report.cases.size() << " cases passed, "
            << report.games() << " games";
  if (a.timing) std::cout << ", " << seconds << " s";
  std::cout << '\n';
  return report.ok() ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  SweepOptions opts;
  std::string sizes;
  std::optional<int> from, to, step;
  std::optional<int> factor;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  std::string out_path;
};

std::vector<int> sweep_sizes(const SweepArgs& a) {
  std::vector<int> sizes;
  if (!a.sizes.empty()) {
    std::stringstream ss(a.sizes);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        sizes.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw UsageError("bad size '" + item + "'");
      }
    }
  } else {
    if (!a.from || !a.to) throw UsageError("sweep needs --sizes or --from/--to");
    if (a.factor && a.step) throw UsageError("--factor and --step are exclusive");
    const int factor = a.factor.value_or(1);
    const int step = a.step.value_or(a.factor ? 0 : 1);
    if (factor < 1 || step < 0 || (factor == 1 && step == 0)) throw UsageError("size range does not advance");
    for (long long s = *a.from; s <= *a.to; s = s * factor + step) sizes.push_back(static_cast<int>(s));
  }
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) throw UsageError("sizes must be positive");
    if (i > 0 && sizes[i] <= sizes[i - 1]) throw UsageError("sizes must be increasing");
  }
  if (sizes.empty()) throw UsageError("empty size range");
  return sizes;
}

int cmd_sweep(SweepArgs a) {
  a.opts.sizes = sweep_sizes(a);
  a.opts.seed = resolve_seed(a.seed);
  a.opts.threads = a.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : a.threads;
  if (a.opts.trials < 1) throw UsageError("trials must be positive");
  const auto rows = run_sweep(a.opts);
  if (!a.out_path.empty()) {
    std::ofstream f;
    open_or_throw(f, a.out_path);
    write_sweep_csv(f, rows);
  } else {
    write_sweep_csv(std::cout, rows);
  }
  for (const auto& r : rows) {
    if (r.status != "ok") {
      std::cerr << "size " << r.size << " trial " << r.trial << ": " << r.status << '\n';
    }
  }
  const bool all_ok = std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.status == "ok"; });
  return all_ok ? kExitOk : kExitViolation;
}

void add_verify_flags(CLI::App* sub, VerifyArgs& v) {
  sub->add_option("--trials", v.trials, "Trials (suite-specific meaning and default)");
  sub->add_option("--max-n", v.max_n, "Largest graph order or side");
  sub->add_option("--dmax", v.dmax, "Largest maximum degree");
  sub->add_option("--seed", v.seed, "Base seed (default: $RELLOC_SEED or 0)");
  sub->add_option("--threads", v.threads, "Worker threads (0: hardware concurrency)");
  sub->add_option("--report", v.report_path, "CSV report path");
  sub->add_flag("--timing", v.timing, "Include wall-clock seconds in the report");
}

int run(int argc, char** argv) {
  CLI::App app{"Cat-and-mouse localization games with one-bit distance feedback", "relloc"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  PlayArgs play;
  auto* p = app.add_subcommand("play", "Run one game; write trace and summary");
  p->add_option("--graph", play.graph, "Graph spec")->required();
  p->add_option("--cat", play.cat, "Cat spec")->required();
  p->add_option("--mouse", play.mouse, "Mouse spec")->required();
  p->add_option("--horizon", play.horizon, "Rounds T");
  p->add_option("--slowness", play.slowness, "Mouse slowness k (slow cat default: 4 * max degree)");
  p->add_option("--target", play.target, "Target distance d (default: the cat's guarantee, else 0)");
  p->add_option("--seed", play.seed, "Seed (default: $RELLOC_SEED or 0)");
  p->add_option("--trace", play.trace_path, "JSONL trace path");
  p->add_option("--summary", play.summary_path, "Summary JSON path (default: stdout)");
  p->add_option("--certificate", play.certificate_path, "Write the mouse trajectory as a JSON array");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run a verification suite");
  v->add_option("--suite", verify.suite, "oracle, tree, grid, path, slow or splitting")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  add_verify_flags(v, verify);

  VerifyArgs oracle;
  oracle.suite = "oracle";
  auto* o = app.add_subcommand("oracle", "Same as verify --suite oracle");
  add_verify_flags(o, oracle);

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "Play a grid of (size, trial) games; CSV out");
  s->add_option("--family", sweep.opts.family, "path, grid, substar, tree or connected")
      ->required()
      ->check(CLI::IsMember({"path", "grid", "substar", "tree", "connected"}));
  s->add_option("--sizes", sweep.sizes, "Comma-separated sizes");
  s->add_option("--from", sweep.from, "First size");
  s->add_option("--to", sweep.to, "Last size (inclusive)");
  s->add_option("--factor", sweep.factor, "Multiply the size by this each step");
  s->add_option("--step", sweep.step, "Add this to the size each step");
  s->add_option("--cat", sweep.opts.cat, "Cat spec")->required();
  s->add_option("--mouse", sweep.opts.mouse, "Mouse spec")->required();
  s->add_option("--trials", sweep.opts.trials, "Trials per size");
  s->add_option("--horizon", sweep.opts.horizon, "Rounds T");
  s->add_option("--target", sweep.opts.target, "Target distance d");
  s->add_option("--slowness", sweep.opts.slowness, "Mouse slowness k");
  s->add_option("--dmax", sweep.opts.dmax, "Maximum degree for tree and connected families");
  s->add_option("--p", sweep.opts.p, "Extra edge probability for the connected family");
  s->add_option("--seed", sweep.seed, "Base seed (default: $RELLOC_SEED or 0)");
  s->add_option("--threads", sweep.threads, "Worker threads (0: hardware concurrency)");
  s->add_option("--out", sweep.out_path, "CSV path (default: stdout)");

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    args = expand_config(std::move(args));
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*p) return cmd_play(play);
    if (*v) return cmd_verify(verify);
    if (*o) return cmd_verify(oracle);
    if (*s) return cmd_sweep(sweep);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OracleGuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EngineError& e) {
    std::cerr << "engine error: " << e.what() << '\n';
    return kExitEngine;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitEngine;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
