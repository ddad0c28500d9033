#include "relloc/suites.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "relloc/candidates.hpp"
#include "relloc/cats.hpp"
#include "relloc/escape_search.hpp"
#include "relloc/generators.hpp"
#include "relloc/mice.hpp"
#include "relloc/specs.hpp"

namespace relloc {

void CaseResult::fail(std::string violated, std::string why) {
  if (!pass) return;  // keep the first violation
  pass = false;
  bound = std::move(violated);
  detail = std::move(why);
}

int SuiteReport::passed() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; }));
}
int SuiteReport::failed() const { return static_cast<int>(cases.size()) - passed(); }
int SuiteReport::games() const {
  int total = 0;
  for (const auto& c : cases) total += c.games;
  return total;
}
int SuiteReport::engine_errors() const {
  int total = 0;
  for (const auto& c : cases) total += c.engine_errors;
  return total;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

void write_csv(std::ostream& out, const SuiteReport& report, bool with_time) {
  out << "suite,case,pass,bound,detail,games" << (with_time ? ",seconds" : "") << '\n';
  for (const CaseResult& c : report.cases) {
    out << csv_field(report.suite) << ',' << csv_field(c.name) << ',' << (c.pass ? 1 : 0) << ','
        << csv_field(c.bound) << ',' << csv_field(c.detail) << ',' << c.games;
    if (with_time) out << ',' << c.seconds;
    out << '\n';
  }
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  // splitmix64 finalizer over a simple combination.
  std::uint64_t z = base ^ (a * 0x9E3779B97F4A7C15ULL) ^ (b * 0xC2B2AE3D27D4EB4FULL);
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

namespace {

using Clock = std::chrono::steady_clock;

int ceil_log2(int n) { return n <= 1 ? 0 : std::bit_width(static_cast<unsigned>(n - 1)); }
int ceil_half(int x) { return (x + 1) / 2; }

std::string str(const char* label, long long v) { return std::string(label) + "=" + std::to_string(v); }

// Plays one game and folds referee errors, strategy errors, trace
// inconsistencies and greedy lookahead mismatches into `cr`.
std::optional<GameTrace> play_checked(const Graph& g, CatStrategy& cat, MouseStrategy& mouse,
                                      const GameConfig& cfg, CaseResult& cr,
                                      const RoundObserver& extra = {}) {
  ++cr.games;
  auto* greedy = dynamic_cast<GreedyEvader*>(&mouse);
  int lookahead_miss = 0;
  auto observer = [&](const RoundRecord& rec, const CandidateSet& m) {
    if (greedy && rec.round > 1 && !(greedy->last_prediction() && *greedy->last_prediction() == m)) {
      if (lookahead_miss == 0) lookahead_miss = rec.round;
    }
    if (extra) extra(rec, m);
  };
  std::optional<GameTrace> trace;
  try {
    trace = play_game(g, cat, mouse, cfg, observer);
  } catch (const EngineError& e) {
    ++cr.engine_errors;
    cr.fail("soundness / Done claim", e.what());
    return std::nullopt;
  } catch (const std::exception& e) {
    cr.fail("strategy error", e.what());
    return std::nullopt;
  }
  if (const TraceCheck check = verify_trace(*trace, g); !check) {
    ++cr.engine_errors;
    cr.fail("trace consistency", "round " + std::to_string(check.round) + ": " + check.reason);
  }
  if (lookahead_miss != 0) {
    cr.fail("greedy lookahead", "predicted M differs from realized M at round " + std::to_string(lookahead_miss));
  }
  return trace;
}

template <typename Fn>
void timed(CaseResult& cr, Fn&& fn) {
  const auto start = Clock::now();
  fn();
  cr.seconds = std::chrono::duration<double>(Clock::now() - start).count();
}

std::string join(std::span<const Vertex> vs) {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

// ---------------------------------------------------------------- oracle

struct OracleWalk {
  const Graph& g;
  int max_len;
  std::vector<Vertex> probes;
  std::vector<int> bits;
  long long checked = 0;
  std::string mismatch;

  void walk(const CandidateSet& m) {
    ++checked;
    const CandidateSet expected = brute_force_candidates(g, probes, bits);
    if (!(expected == m)) {
      mismatch = "probes [" + join(probes) + "] bits [" +
                 join(std::vector<Vertex>(bits.begin(), bits.end())) + "]: dp {" + join(m.members()) +
                 "} oracle {" + join(expected.members()) + "}";
      return;
    }
    // An empty set stays empty for both computations.
    if (m.empty() || static_cast<int>(probes.size()) == max_len) return;
    for (Vertex c = 1; c <= g.order() && mismatch.empty(); ++c) {
      for (int b = 0; b < 2 && mismatch.empty(); ++b) {
        const CandidateSet next = update_candidates(g, m, probes.back(), c, b == 1, true);
        probes.push_back(c);
        bits.push_back(b);
        walk(next);
        probes.pop_back();
        bits.pop_back();
      }
    }
  }
};

std::string describe_edges(const Graph& g) {
  std::string s;
  for (const auto& [u, v] : g.edges()) s += (s.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
  return s;
}

CaseResult oracle_random_case(const SuiteOptions& opts, int trial) {
  CaseResult cr;
  const std::uint64_t seed = mix_seed(opts.seed, 1, static_cast<std::uint64_t>(trial));
  std::mt19937_64 rng(seed);
  const int n = 1 + static_cast<int>(uniform_below(rng, 8));
  const double p = uniform_unit(rng) * 0.6;
  const Graph g = n == 1 ? gen_path(1) : gen_random_connected(n, p, std::max(2, n - 1), seed);
  const int len = 1 + static_cast<int>(uniform_below(rng, 6));
  const int k = 1 + static_cast<int>(uniform_below(rng, 3));
  const bool from_mouse = uniform_below(rng, 2) == 0;

  std::vector<Vertex> probes(len);
  for (auto& c : probes) c = 1 + static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n)));
  std::vector<int> bits;
  if (from_mouse) {
    Vertex m = 1 + static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    for (int i = 2; i <= len; ++i) {
      const int before = g.dist(probes[i - 2], m);
      if (mouse_may_move(i, k)) {
        const auto options = g.closed_neighborhood(m);
        m = options[uniform_below(rng, options.size())];
      }
      bits.push_back(g.dist(probes[i - 1], m) <= before ? 1 : 0);
    }
  } else {
    for (int i = 2; i <= len; ++i) bits.push_back(static_cast<int>(uniform_below(rng, 2)));
  }

  cr.name = "random " + str("n", n) + " " + str("len", len) + " " + str("k", k) + " " +
            str("seed", static_cast<long long>(seed));
  CandidateSet m = CandidateSet::everything(g);
  for (int L = 1; L <= len && cr.pass; ++L) {
    if (L > 1) m = update_candidates(g, m, probes[L - 2], probes[L - 1], bits[L - 2] == 1, mouse_may_move(L, k));
    const CandidateSet expected = brute_force_candidates(
        g, std::span(probes).first(L), std::span(bits).first(L - 1), k);
    if (!(expected == m)) {
      cr.fail("candidate set = trajectory enumeration",
              "edges [" + describe_edges(g) + "] prefix " + std::to_string(L) + ": dp {" +
                  join(m.members()) + "} oracle {" + join(expected.members()) + "}");
    }
    if (m.empty()) break;
  }
  if (from_mouse && cr.pass && m.empty()) cr.fail("candidate set nonempty", "legal mouse bits gave an empty set");
  return cr;
}

}  // namespace

SuiteReport run_oracle_suite(const SuiteOptions& opts) {
  SuiteReport report{"oracle", {}};
  const int max_n = opts.max_n.value_or(5);
  const int trials = opts.trials.value_or(1000);
  if (max_n < 1 || max_n > 6) throw std::invalid_argument("oracle suite: max-n must be in [1,6]");

  std::vector<Graph> catalogue;
  for (int n = 1; n <= max_n; ++n) {
    for (Graph& g : connected_graph_classes(n)) catalogue.push_back(std::move(g));
  }
  std::vector<CaseResult> exhaustive(catalogue.size());
  parallel_for(catalogue.size(), opts.threads, [&](std::size_t idx) {
    CaseResult& cr = exhaustive[idx];
    const Graph& g = catalogue[idx];
    cr.name = "exhaustive " + str("n", g.order()) + " [" + describe_edges(g) + "]";
    timed(cr, [&] {
      OracleWalk walk{g, 6, {}, {}, 0, {}};
      for (Vertex c = 1; c <= g.order() && walk.mismatch.empty(); ++c) {
        walk.probes = {c};
        walk.bits.clear();
        walk.walk(CandidateSet::everything(g));
      }
      if (!walk.mismatch.empty()) cr.fail("candidate set = trajectory enumeration", walk.mismatch);
    });
  });
  std::vector<CaseResult> random(static_cast<std::size_t>(trials));
  parallel_for(random.size(), opts.threads, [&](std::size_t t) {
    const auto start = Clock::now();
    random[t] = oracle_random_case(opts, static_cast<int>(t));
    random[t].seconds = std::chrono::duration<double>(Clock::now() - start).count();
  });
  report.cases = std::move(exhaustive);
  report.cases.insert(report.cases.end(), random.begin(), random.end());
  return report;
}

// ---------------------------------------------------------------- tree

namespace {

// Component of T - {from,to} that contains `to`.
bool on_side_of(const RootedTree& t, Vertex v, Vertex from, Vertex to) {
  if (t.parent[to] == from) return t.in_subtree(v, to);
  return !t.in_subtree(v, from);
}

CaseResult tree_random_case(const SuiteOptions& opts, int delta, int trial) {
  CaseResult cr;
  const std::uint64_t seed = mix_seed(opts.seed, 100 + static_cast<std::uint64_t>(delta),
                                      static_cast<std::uint64_t>(trial));
  std::mt19937_64 rng(seed);
  const int max_n = opts.max_n.value_or(200);
  const int lo = std::min(10, max_n);
  const int n = lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_n - lo + 1)));
  const Graph tree = gen_random_tree(n, delta, seed);
  const int actual = std::max(2, tree.max_degree());
  cr.name = "tree " + str("dmax", delta) + " " + str("D", actual) + " " + str("n", n) + " " +
            str("seed", static_cast<long long>(seed));
  timed(cr, [&] {
    TreeCat cat(tree, actual);
    const int bound = std::max(1, cat.round_bound());
    const int radius = cat.radius_bound();
    GreedyEvader mouse;
    GameConfig cfg;
    cfg.horizon = bound + 1;
    cfg.target_distance = radius;
    cfg.seed = seed;
    std::vector<std::vector<Vertex>> sets(1);
    auto keep = [&](const RoundRecord&, const CandidateSet& m) {
      sets.emplace_back(m.members().begin(), m.members().end());
    };
    const auto trace = play_checked(tree, cat, mouse, cfg, cr, keep);
    if (!trace) return;
    const std::string h = str("h", cat.rooted().height[cat.root()]);
    if (!trace->done) {
      cr.fail("tree round bound", h + ": no Done by round " + std::to_string(cfg.horizon));
      return;
    }
    const DoneClaim& done = *trace->done;
    if (done.round > bound) {
      cr.fail("tree round bound", h + ": Done at round " + std::to_string(done.round) + " > " + std::to_string(bound));
    }
    if (done.radius != radius || max_distance(tree, done.center, sets[done.round]) > radius) {
      cr.fail("tree radius 4D-6", "round " + std::to_string(done.round) + ": claim (" +
                                      std::to_string(done.center) + ", " + std::to_string(done.radius) + ")");
    }
    const RootedTree& rt = cat.rooted();
    for (const auto& start : cat.outer_starts()) {
      if (start.completed_rounds < 1) continue;
      for (Vertex m : sets[start.completed_rounds]) {
        if (!rt.in_subtree(m, start.local_root)) {
          cr.fail("outer-iteration containment", "round " + std::to_string(start.completed_rounds) +
                                                      ": " + std::to_string(m) + " outside T_" +
                                                      std::to_string(start.local_root));
          break;
        }
      }
    }
    for (const DirectedFact& f : cat.facts()) {
      for (Vertex m : sets[f.round]) {
        if (!on_side_of(rt, m, f.from, f.to)) {
          cr.fail("common-neighbor observation",
                  "round " + std::to_string(f.round) + ": " + std::to_string(m) + " not beyond " +
                      std::to_string(f.from) + "->" + std::to_string(f.to));
          break;
        }
      }
    }
  });
  return cr;
}

CaseResult tree_exhaustive_case(const Graph& tree, int delta, int target, const std::string& label) {
  CaseResult cr;
  TreeCat cat(tree, delta);
  const int bound = std::max(1, cat.round_bound());
  cr.name = "exhaustive " + label + " " + str("D", delta) + " " + str("T", bound);
  timed(cr, [&] {
    const EscapeResult res = search_escape(tree, cat, {bound, target, 1});
    if (res.escaped) {
      cr.fail("tree round bound", "escape certificate [" + join(res.trajectory) + "]");
      return;
    }
    // Replay the longest-surviving trajectory through the referee.
    TreeCat fresh(tree, delta);
    ReplayMouse mouse(res.trajectory);
    GameConfig cfg;
    cfg.horizon = bound;
    cfg.target_distance = target;
    const auto trace = play_checked(tree, fresh, mouse, cfg, cr);
    if (trace && (!trace->first_success || *trace->first_success > bound)) {
      cr.fail("tree round bound", "replayed search trajectory did not localize by round " + std::to_string(bound));
    }
  });
  return cr;
}

}  // namespace

SuiteReport run_tree_suite(const SuiteOptions& opts) {
  SuiteReport report{"tree", {}};
  const int dmax = opts.dmax.value_or(5);
  const int trials = opts.trials.value_or(50);
  if (dmax < 2) throw std::invalid_argument("tree suite: dmax must be at least 2");
  std::vector<std::pair<int, int>> jobs;
  for (int d = 2; d <= dmax; ++d) {
    for (int t = 0; t < trials; ++t) jobs.emplace_back(d, t);
  }
  std::vector<CaseResult> random(jobs.size());
  parallel_for(jobs.size(), opts.threads, [&](std::size_t i) {
    random[i] = tree_random_case(opts, jobs[i].first, jobs[i].second);
  });
  report.cases = std::move(random);

  report.cases.push_back(tree_exhaustive_case(gen_path(9), 2, 2, "P_9"));
  for (int n = 4; n <= 9; ++n) {
    int index = 0;
    for (const Graph& t : all_free_trees(n)) {
      if (t.max_degree() != 3) continue;
      report.cases.push_back(tree_exhaustive_case(
          t, 3, 6, str("n", n) + " #" + std::to_string(index++) + " [" + describe_edges(t) + "]"));
    }
  }
  return report;
}

// ---------------------------------------------------------------- grid

SuiteReport run_grid_suite(const SuiteOptions& opts) {
  SuiteReport report{"grid", {}};
  const int max_n = opts.max_n.value_or(512);
  const int random_mice = opts.trials.value_or(20);
  std::vector<std::pair<int, int>> jobs;  // (n, mouse index; 0 = greedy)
  for (int n = 8; n <= max_n; n *= 2) {
    for (int j = 0; j <= random_mice; ++j) jobs.emplace_back(n, j);
  }
  std::vector<CaseResult> cases(jobs.size());
  parallel_for(jobs.size(), opts.threads, [&](std::size_t idx) {
    const auto [n, j] = jobs[idx];
    CaseResult& cr = cases[idx];
    const std::uint64_t seed = mix_seed(opts.seed, 200 + static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(j));
    cr.name = "grid " + str("n", n) + " " +
              (j == 0 ? std::string("greedy") : "random " + str("seed", static_cast<long long>(seed)));
    timed(cr, [&] {
      const Graph g = gen_grid(n, n);
      const Layout& lay = g.layout();
      const int bound = 3 * (ceil_log2(n) + 10);
      GridCat cat(g);
      std::unique_ptr<MouseStrategy> mouse;
      if (j == 0) {
        mouse = std::make_unique<GreedyEvader>();
      } else {
        mouse = std::make_unique<RandomMouse>(seed);
      }
      GameConfig cfg;
      cfg.horizon = bound;
      cfg.target_distance = GridCat::kRadius;
      cfg.seed = seed;
      std::vector<Box> boxes(1);
      auto keep = [&](const RoundRecord&, const CandidateSet& m) {
        boxes.push_back(bounding_box(lay, m.members()));
      };
      const auto trace = play_checked(g, cat, *mouse, cfg, cr, keep);
      if (!trace) return;
      if (!trace->first_success) {
        cr.fail("grid round bound", "rad(M) > 8 through round " + std::to_string(bound));
      }
      if (!trace->done) cr.fail("grid round bound", "no Done by round " + std::to_string(bound));
      for (const auto& b : cat.blocks()) {
        const Box& m = boxes[b.round];
        const std::string at = "block ending round " + std::to_string(b.round);
        if (m.x < b.after.x || m.y < b.after.y || m.x + m.dx > b.after.x + b.after.dx ||
            m.y + m.dy > b.after.y + b.after.dy || b.after.x < 1 || b.after.y < 1 ||
            b.after.x + b.after.dx > n || b.after.y + b.after.dy > n) {
          cr.fail("box containment", at);
        }
        const int slack_x = b.swapped ? 3 : 4;
        const int slack_y = b.swapped ? 4 : 3;
        if (b.after.dx > ceil_half(b.before.dx) + slack_x) {
          cr.fail("x-extent recurrence", at + ": " + std::to_string(b.before.dx) + " -> " + std::to_string(b.after.dx));
        }
        if (b.after.dy > ceil_half(b.before.dy) + slack_y) {
          cr.fail("y-extent recurrence", at + ": " + std::to_string(b.before.dy) + " -> " + std::to_string(b.after.dy));
        }
      }
    });
  });
  report.cases = std::move(cases);
  return report;
}

// ---------------------------------------------------------------- path

SuiteReport run_path_suite(const SuiteOptions& opts) {
  SuiteReport report{"path", {}};
  const int max_n = opts.max_n.value_or(4097);
  const int random_sizes = opts.trials.value_or(20);
  std::vector<int> sizes;
  if (max_n >= 4) sizes.push_back(4);
  for (int j = 2; (1 << j) + 1 <= max_n; ++j) sizes.push_back((1 << j) + 1);
  std::mt19937_64 rng(mix_seed(opts.seed, 300));
  for (int t = 0; t < random_sizes && max_n >= 4; ++t) {
    sizes.push_back(4 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_n - 3))));
  }
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

  // Mouse kinds: 0 greedy, 1-2 random, 3 exhaustive (n <= 10).
  std::vector<std::pair<int, int>> jobs;
  for (int n : sizes) {
    for (int kind = 0; kind <= (n <= 10 ? 3 : 2); ++kind) jobs.emplace_back(n, kind);
  }
  std::vector<CaseResult> cases(jobs.size());
  parallel_for(jobs.size(), opts.threads, [&](std::size_t idx) {
    const auto [n, kind] = jobs[idx];
    CaseResult& cr = cases[idx];
    const std::uint64_t seed = mix_seed(opts.seed, 300 + static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(kind));
    const int bound = PathCat::round_bound(n);
    std::unique_ptr<MouseStrategy> mouse;
    std::string label;
    if (kind == 0) {
      mouse = std::make_unique<GreedyEvader>();
      label = "greedy";
    } else if (kind <= 2) {
      mouse = std::make_unique<RandomMouse>(seed);
      label = "random " + str("seed", static_cast<long long>(seed));
    } else {
      mouse = std::make_unique<ExhaustiveEvader>(EscapeQuery{std::min(bound, 12), PathCat::kRadius, 1});
      label = "exhaustive " + str("T", std::min(bound, 12));
    }
    cr.name = "path " + str("n", n) + " " + label;
    timed(cr, [&] {
      const Graph g = gen_path(n);
      PathCat cat(g);
      GameConfig cfg;
      cfg.horizon = bound;
      cfg.target_distance = PathCat::kRadius;
      cfg.seed = seed;
      const auto trace = play_checked(g, cat, *mouse, cfg, cr);
      if (!trace) return;
      if (!trace->first_success) cr.fail("path round bound", "rad(M) > 2 through round " + std::to_string(bound));
      if (!trace->done) cr.fail("path round bound", "no Done by round " + std::to_string(bound));
      if (auto* ex = dynamic_cast<ExhaustiveEvader*>(mouse.get()); ex && ex->result()->escaped) {
        cr.fail("path round bound", "escape certificate [" + join(ex->result()->trajectory) + "]");
      }
      for (const auto& s : cat.stages()) {
        const bool ok = s.endgame ? s.width_after < s.width_before
                                  : s.width_after <= ceil_half(s.width_before) + 2;
        if (!ok) {
          cr.fail("path width recurrence", "round " + std::to_string(s.round) + ": " +
                                               std::to_string(s.width_before) + " -> " +
                                               std::to_string(s.width_after));
        }
      }
    });
  });
  report.cases = std::move(cases);
  return report;
}

// ---------------------------------------------------------------- slow

SuiteReport run_slow_suite(const SuiteOptions& opts) {
  SuiteReport report{"slow", {}};
  const int trials = opts.trials.value_or(50);
  const int max_n = opts.max_n.value_or(100);
  const int dmax = opts.dmax.value_or(5);
  if (dmax < 2 || max_n < 2) throw std::invalid_argument("slow suite: need dmax >= 2 and max-n >= 2");
  constexpr int kMice = 3;  // greedy, two random
  std::vector<CaseResult> cases(static_cast<std::size_t>(trials) * kMice);
  parallel_for(cases.size(), opts.threads, [&](std::size_t idx) {
    const int trial = static_cast<int>(idx / kMice);
    const int kind = static_cast<int>(idx % kMice);
    CaseResult& cr = cases[idx];
    const std::uint64_t seed = mix_seed(opts.seed, 400, static_cast<std::uint64_t>(trial));
    std::mt19937_64 rng(seed);
    const int n = 2 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_n - 1)));
    const int cap = 2 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(dmax - 1)));
    const double p = uniform_unit(rng) * 0.1;
    const Graph g = gen_random_connected(n, p, cap, seed);
    const int delta = std::max(2, g.max_degree());
    const std::uint64_t mouse_seed = mix_seed(seed, static_cast<std::uint64_t>(kind));
    std::unique_ptr<MouseStrategy> mouse;
    if (kind == 0) {
      mouse = std::make_unique<GreedyEvader>();
    } else {
      mouse = std::make_unique<RandomMouse>(mouse_seed);
    }
    cr.name = "slow " + str("n", n) + " " + str("D", delta) + " " + str("seed", static_cast<long long>(seed)) + " " +
              (kind == 0 ? std::string("greedy") : "random " + str("seed", static_cast<long long>(mouse_seed)));
    timed(cr, [&] {
      SlowCat cat(g, delta);
      GameConfig cfg;
      cfg.slowness = cat.required_slowness();
      cfg.horizon = cat.block_length() * (n + 1);
      cfg.target_distance = 0;
      cfg.seed = seed;
      std::vector<std::size_t> sizes(1);
      auto keep = [&](const RoundRecord&, const CandidateSet& m) { sizes.push_back(m.size()); };
      const auto trace = play_checked(g, cat, *mouse, cfg, cr, keep);
      if (!trace) return;
      if (!trace->done) {
        cr.fail("slow exact localization", "no Done by round " + std::to_string(cfg.horizon));
        return;
      }
      const DoneClaim& done = *trace->done;
      const Vertex at = trace->rounds[done.round - 1].mouse;
      if (done.radius != 0 || sizes[done.round] != 1 || at != done.center) {
        cr.fail("slow exact localization", "round " + std::to_string(done.round) + ": claim " +
                                               std::to_string(done.center) + ", mouse " + std::to_string(at) +
                                               ", |M| = " + std::to_string(sizes[done.round]));
      }
      const auto& starts = cat.block_starts();
      auto potential = [&](const SlowCat::BlockStart& b) {
        return g.dist(b.anchor, trace->rounds[b.round - 1].mouse);
      };
      for (std::size_t b = 1; b < starts.size(); ++b) {
        if (potential(starts[b]) >= potential(starts[b - 1])) {
          cr.fail("slow potential decrease", "block at round " + std::to_string(starts[b].round) + ": " +
                                                 std::to_string(potential(starts[b - 1])) + " -> " +
                                                 std::to_string(potential(starts[b])));
        }
      }
      const int allowed = potential(starts.front()) + 1;
      if (static_cast<int>(starts.size()) > allowed) {
        cr.fail("slow block count", std::to_string(starts.size()) + " blocks > " + std::to_string(allowed));
      }
    });
  });
  report.cases = std::move(cases);
  return report;
}

// ---------------------------------------------------------------- splitting

SuiteReport run_splitting_suite(const SuiteOptions& opts) {
  SuiteReport report{"splitting", {}};
  const int trials = opts.trials.value_or(200);
  const int max_n = opts.max_n.value_or(40);
  if (max_n < 2) throw std::invalid_argument("splitting suite: max-n must be at least 2");
  std::vector<CaseResult> cases(static_cast<std::size_t>(trials));
  parallel_for(cases.size(), opts.threads, [&](std::size_t t) {
    CaseResult& cr = cases[t];
    const std::uint64_t seed = mix_seed(opts.seed, 500, t);
    std::mt19937_64 rng(seed);
    const int n = 2 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_n - 1)));
    const int cap = 2 + static_cast<int>(uniform_below(rng, 5));
    const double p = uniform_unit(rng) * 0.15;
    const Graph g = gen_random_connected(n, p, cap, seed);
    std::vector<Vertex> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i + 1;
    for (int i = n - 1; i > 0; --i) {
      std::swap(pool[i], pool[uniform_below(rng, static_cast<std::uint64_t>(i + 1))]);
    }
    const int size = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    std::vector<Vertex> members(pool.begin(), pool.begin() + size);
    std::sort(members.begin(), members.end());
    const int delta = g.max_degree();
    cr.name = "splitting " + str("n", n) + " " + str("D", delta) + " " + str("|M|", size) + " " +
              str("seed", static_cast<long long>(seed));
    timed(cr, [&] {
      SplittingEdge s;
      try {
        s = find_splitting_edge(g, members);
      } catch (const std::exception& e) {
        cr.fail("splitting edge bound", e.what());
        return;
      }
      const auto [u, v] = s.edge;
      const auto nb = g.neighbors(u);
      if (!std::binary_search(nb.begin(), nb.end(), v)) {
        cr.fail("splitting edge", std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
        return;
      }
      const auto du = bfs_distances(g, u);
      const auto dv = bfs_distances(g, v);
      int cu = 0, cv = 0;
      for (Vertex m : members) {
        cu += du[m] < dv[m];
        cv += du[m] > dv[m];
      }
      if (cu != s.closer_to_u || cv != s.closer_to_v) {
        cr.fail("splitting side counts", "reported " + std::to_string(s.closer_to_u) + "/" +
                                             std::to_string(s.closer_to_v) + ", recount " +
                                             std::to_string(cu) + "/" + std::to_string(cv));
      }
      const int need = size - 1;
      if (cu * delta < need || cv * delta < need) {
        cr.fail("splitting edge bound", "edge " + std::to_string(u) + "-" + std::to_string(v) + ": sides " +
                                            std::to_string(cu) + "/" + std::to_string(cv) + ", D " +
                                            std::to_string(delta) + ", |M| " + std::to_string(size));
      }
    });
  });
  report.cases = std::move(cases);
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"oracle", "tree", "grid", "path", "slow", "splitting"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "oracle") return run_oracle_suite(opts);
  if (name == "tree") return run_tree_suite(opts);
  if (name == "grid") return run_grid_suite(opts);
  if (name == "path") return run_path_suite(opts);
  if (name == "slow") return run_slow_suite(opts);
  if (name == "splitting") return run_splitting_suite(opts);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

// ---------------------------------------------------------------- sweep

std::string sweep_graph_spec(const SweepOptions& opts, int size, std::uint64_t seed) {
  const std::string n = std::to_string(size);
  if (opts.family == "path") return "path:n=" + n;
  if (opts.family == "grid") return "grid:n=" + n + ",m=" + n;
  if (opts.family == "substar") return "substar:k=" + n;
  if (opts.family == "tree") {
    return "tree:n=" + n + ",dmax=" + std::to_string(opts.dmax) + ",seed=" + std::to_string(seed);
  }
  if (opts.family == "connected") {
    std::ostringstream p;
    p << opts.p;
    return "connected:n=" + n + ",p=" + p.str() + ",dmax=" + std::to_string(opts.dmax) +
           ",seed=" + std::to_string(seed);
  }
  throw SpecError("unknown sweep family '" + opts.family + "'");
}

std::vector<SweepRow> run_sweep(const SweepOptions& opts) {
  // Reject bad specs before any work.
  sweep_graph_spec(opts, 1, 0);
  parse_spec(opts.cat);
  parse_spec(opts.mouse);

  std::vector<SweepRow> rows;
  for (int size : opts.sizes) {
    for (int t = 0; t < opts.trials; ++t) {
      SweepRow row;
      row.size = size;
      row.trial = t;
      row.seed = mix_seed(opts.seed, static_cast<std::uint64_t>(size), static_cast<std::uint64_t>(t));
      rows.push_back(row);
    }
  }
  parallel_for(rows.size(), opts.threads, [&](std::size_t idx) {
    SweepRow& row = rows[idx];
    try {
      const Graph g = make_graph(sweep_graph_spec(opts, row.size, row.seed), row.seed);
      auto cat = make_cat(opts.cat, g, row.seed);
      const int slowness = opts.slowness.value_or(required_slowness(*cat).value_or(1));
      auto mouse = make_mouse(opts.mouse, row.seed, slowness);
      GameConfig cfg;
      cfg.horizon = opts.horizon;
      cfg.slowness = slowness;
      cfg.target_distance = opts.target.value_or(cat->guaranteed_radius().value_or(0));
      cfg.seed = row.seed;
      const GameTrace trace = play_game(g, *cat, *mouse, cfg);
      row.first_success = trace.first_success;
      row.final_radius = trace.final_radius();
      row.rounds = static_cast<int>(trace.rounds.size());
    } catch (const std::exception& e) {
      row.status = std::string("error: ") + e.what();
    }
  });
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "size,trial,seed,first_success,final_radius,rounds,status\n";
  for (const SweepRow& r : rows) {
    out << r.size << ',' << r.trial << ',' << r.seed << ','
        << (r.first_success ? std::to_string(*r.first_success) : std::string()) << ',' << r.final_radius
        << ',' << r.rounds << ',' << csv_field(r.status) << '\n';
  }
}

}  // namespace relloc
