#include <gtest/gtest.h>

#include <sstream>

#include "relloc/cats.hpp"
#include "relloc/escape_search.hpp"
#include "relloc/generators.hpp"
#include "relloc/mice.hpp"
#include "relloc/trace_io.hpp"
#include "test_support.hpp"

namespace relloc {
namespace {

using testing::path_of;
using testing::ScriptedCat;

TEST(StationaryMouse, StaysPut) {
  const Graph g = gen_path(6);
  ScriptedCat cat({1, 6, 2});
  StationaryMouse mouse(4);
  const GameTrace t = play_game(g, cat, mouse, {.horizon = 10});
  for (Vertex v : path_of(t)) EXPECT_EQ(v, 4);
  StationaryMouse outside(7);
  ScriptedCat cat2({1});
  EXPECT_THROW(play_game(g, cat2, outside, {.horizon = 2}), GraphError);
}

TEST(RandomMouse, DeterministicAndLegal) {
  const Graph g = gen_random_connected(20, 0.1, 4, 6);
  auto run = [&](std::uint64_t seed) {
    ScriptedCat cat({1, 2, 3});
    RandomMouse mouse(seed);
    return play_game(g, cat, mouse, {.horizon = 40, .slowness = 2});
  };
  const GameTrace a = run(9);
  EXPECT_EQ(path_of(a), path_of(run(9)));
  EXPECT_TRUE(verify_trace(a, g));
}

TEST(RandomMouse, FrozenRoundsOnAnEdge) {
  const Graph k2 = gen_path(2);
  ScriptedCat cat({1, 2});
  RandomMouse mouse(3);
  const GameTrace t = play_game(k2, cat, mouse, {.horizon = 30, .slowness = 2});
  const auto p = path_of(t);
  for (std::size_t i = 1; i < p.size(); ++i) {
    const int round = static_cast<int>(i) + 1;
    if (!mouse_may_move(round, 2)) EXPECT_EQ(p[i], p[i - 1]) << round;
  }
}

TEST(GreedyEvader, SingleVertex) {
  const Graph g = gen_path(1);
  ScriptedCat cat({1});
  GreedyEvader mouse;
  const GameTrace t = play_game(g, cat, mouse, {.horizon = 5});
  for (Vertex v : path_of(t)) EXPECT_EQ(v, 1);
}

TEST(GreedyEvader, PredictionMatchesTheEngine) {
  for (std::uint64_t s = 0; s < 15; ++s) {
    const Graph g = gen_random_connected(25, 0.1, 4, s);
    RandomCat cat(g, s + 1);
    GreedyEvader mouse;
    play_game(g, cat, mouse, {.horizon = 30, .slowness = 1 + static_cast<int>(s % 3)},
              [&](const RoundRecord& r, const CandidateSet& m) {
                if (r.round < 2) return;
                ASSERT_TRUE(mouse.last_prediction());
                EXPECT_EQ(std::vector<Vertex>(mouse.last_prediction()->members().begin(),
                                              mouse.last_prediction()->members().end()),
                          std::vector<Vertex>(m.members().begin(), m.members().end()));
              });
  }
}

TEST(GreedyEvader, OutlastsRandomProbesOnAPath) {
  const Graph p9 = gen_path(9);
  int survivors = 0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    RandomCat cat(p9, s);
    GreedyEvader mouse;
    const GameTrace t = play_game(p9, cat, mouse, {.horizon = 50});
    if (!t.first_success) ++survivors;
  }
  EXPECT_GT(survivors, 0);
}

TEST(GreedyEvader, NotCaughtSoonerThanSomeStationaryMouse) {
  const Graph g = gen_path(200);
  auto first_success = [&](MouseStrategy& mouse) {
    PathCat cat(g);
    return *play_game(g, cat, mouse, {.horizon = 40, .target_distance = 2}).first_success;
  };
  GreedyEvader greedy;
  const int greedy_rounds = first_success(greedy);
  int best_stationary = 0;
  for (Vertex v = 1; v <= 200; v += 7) {
    StationaryMouse still(v);
    best_stationary = std::max(best_stationary, first_success(still));
  }
  EXPECT_GE(greedy_rounds + 2, best_stationary);
  EXPECT_LE(greedy_rounds, PathCat::round_bound(200));
}

TEST(ExhaustiveEvader, NoEscapeFromTheTreeCatOnAPath) {
  const Graph p9 = gen_path(9);
  TreeCat cat(p9, 2);
  ExhaustiveEvader mouse({.horizon = 8, .target = 2});
  const GameTrace t = play_game(p9, cat, mouse, {.horizon = 8, .target_distance = 2});
  ASSERT_TRUE(mouse.result());
  EXPECT_FALSE(mouse.result()->escaped);
  ASSERT_TRUE(t.first_success);
  EXPECT_EQ(*t.first_success, mouse.result()->survived + 1);
}

TEST(ExhaustiveEvader, TargetAtDiameterIsNeverEscaped) {
  const Graph g = gen_random_connected(7, 0.3, 4, 2);
  RandomCat cat(g, 5);
  int diameter = 0;
  for (Vertex u = 1; u <= 7; ++u) {
    for (Vertex v = 1; v <= 7; ++v) diameter = std::max(diameter, g.dist(u, v));
  }
  const EscapeResult r = search_escape(g, cat, {.horizon = 6, .target = diameter});
  EXPECT_FALSE(r.escaped);
  EXPECT_EQ(r.survived, 0);
}

TEST(ExhaustiveEvader, CertificateReplaysAsAnEscape) {
  const Graph k2 = gen_path(2);
  const RandomCat fresh(k2, 11);
  const EscapeResult r = search_escape(k2, fresh, {.horizon = 10, .target = 0});
  ASSERT_TRUE(r.escaped);
  ASSERT_EQ(r.trajectory.size(), 10u);

  std::stringstream ss;
  write_certificate(ss, r.trajectory);
  auto cat = fresh.clone();
  ReplayMouse replay(read_certificate(ss));
  const GameTrace t = play_game(k2, *cat, replay, {.horizon = 10, .target_distance = 0});
  EXPECT_FALSE(t.first_success);
  EXPECT_EQ(path_of(t), r.trajectory);
}

TEST(ExhaustiveEvader, Guards) {
  const Graph big = gen_path(11);
  const RandomCat cat(big, 1);
  EXPECT_THROW(search_escape(big, cat, {}), OracleGuardError);
  const Graph small = gen_path(4);
  const RandomCat cat2(small, 1);
  EXPECT_THROW(search_escape(small, cat2, {.horizon = 13}), OracleGuardError);
  EXPECT_THROW(search_escape(small, cat2, {.horizon = 0}), OracleGuardError);
}

TEST(ReplayMouse, HoldsItsLastVertex) {
  const Graph g = gen_path(5);
  ScriptedCat cat({1, 5});
  ReplayMouse mouse({1, 2, 3});
  const GameTrace t = play_game(g, cat, mouse, {.horizon = 6});
  EXPECT_EQ(path_of(t), (std::vector<Vertex>{1, 2, 3, 3, 3, 3}));
  EXPECT_THROW(ReplayMouse({}), std::invalid_argument);
}

}  // namespace
}  // namespace relloc
