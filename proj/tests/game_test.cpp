#include <gtest/gtest.h>

#include "relloc/cats.hpp"
#include "relloc/game.hpp"
#include "relloc/generators.hpp"
#include "relloc/mice.hpp"
#include "test_support.hpp"

namespace relloc {
namespace {

using testing::ScriptedCat;

TEST(PlayGame, SingleVertex) {
  const Graph g = gen_path(1);
  ScriptedCat cat({1});
  StationaryMouse mouse(1);
  const GameTrace t = play_game(g, cat, mouse, {.horizon = 3});
  ASSERT_TRUE(t.first_success);
  EXPECT_EQ(*t.first_success, 1);
  EXPECT_EQ(t.rounds.front().candidate_radius, 0);
  EXPECT_EQ(t.rounds.size(), 3u);
}

TEST(PlayGame, PathOfThreeFirstBit) {
  const Graph g = gen_path(3);
  ScriptedCat cat({1, 2, 3});
  StationaryMouse mouse(1);
  const GameTrace t = play_game(g, cat, mouse, {.horizon = 2});
  ASSERT_EQ(t.rounds.size(), 2u);
  EXPECT_FALSE(t.rounds[0].bit.has_value());
  EXPECT_EQ(t.rounds[1].bit, 0);
  EXPECT_EQ(t.rounds[1].candidate_radius, 0);
  EXPECT_EQ(t.rounds[1].candidate_center, 1);
  EXPECT_EQ(t.first_success, 2);
}

TEST(PlayGame, OscillatingMouseOnEdge) {
  const Graph g = gen_path(2);
  ScriptedCat cat({1});
  ReplayMouse mouse({1, 2, 1, 2});
  const GameTrace t = play_game(g, cat, mouse, {.horizon = 4});
  ASSERT_EQ(t.rounds.size(), 4u);
  EXPECT_EQ(t.rounds[1].bit, 0);
  EXPECT_EQ(t.rounds[2].bit, 1);
  EXPECT_EQ(t.rounds[3].bit, 0);
}

TEST(PlayGame, IllegalMoveNamesTheRound) {
  const Graph g = gen_path(5);
  ScriptedCat cat({1, 2});
  ReplayMouse mouse({1, 2, 4});
  try {
    play_game(g, cat, mouse, {.horizon = 5});
    FAIL() << "teleport accepted";
  } catch (const EngineError& e) {
    EXPECT_EQ(e.round(), 3);
  }
}

TEST(PlayGame, FrozenRoundsAreEnforced) {
  const Graph g = gen_path(4);
  ScriptedCat cat({1, 2});
  ReplayMouse mover({2, 3});
  try {
    play_game(g, cat, mover, {.horizon = 4, .slowness = 2});
    FAIL() << "move in a frozen round accepted";
  } catch (const EngineError& e) {
    EXPECT_EQ(e.round(), 2);
  }
  ScriptedCat cat2({1, 2});
  ReplayMouse legal({2, 2, 3, 3, 4});
  const GameTrace t = play_game(g, cat2, legal, {.horizon = 5, .slowness = 2});
  EXPECT_TRUE(verify_trace(t, g));
}

TEST(PlayGame, OutOfRangeProbe) {
  const Graph g = gen_path(3);
  ScriptedCat bad_start({4, 1});
  StationaryMouse mouse(1);
  EXPECT_THROW(play_game(g, bad_start, mouse, {}), EngineError);
  ScriptedCat bad_later({1, 2, 9});
  try {
    play_game(g, bad_later, mouse, {.horizon = 5});
    FAIL();
  } catch (const EngineError& e) {
    EXPECT_EQ(e.round(), 3);
  }
}

TEST(PlayGame, FalseDoneClaimFails) {
  const Graph g = gen_path(7);
  ScriptedCat liar({1, 2}, 1, Done{1, 2});
  StationaryMouse mouse(7);
  EXPECT_THROW(play_game(g, liar, mouse, {.horizon = 4}), EngineError);
  ScriptedCat honest({1, 2}, 1, Done{4, 3});
  const GameTrace t = play_game(g, honest, mouse, {.horizon = 4});
  ASSERT_TRUE(t.done);
  EXPECT_EQ(t.done->round, 1);
  EXPECT_EQ(t.rounds.size(), 1u);
}

TEST(PlayGame, RunsToHorizonWithoutDone) {
  const Graph g = gen_path(6);
  ScriptedCat cat({1, 6, 1});
  StationaryMouse mouse(3);
  const GameTrace t = play_game(g, cat, mouse, {.horizon = 17, .target_distance = 0});
  EXPECT_EQ(t.rounds.size(), 17u);
  EXPECT_FALSE(t.done);
}

TEST(PlayGame, ConfigValidation) {
  const Graph g = gen_path(2);
  ScriptedCat cat({1});
  StationaryMouse mouse(1);
  EXPECT_THROW(play_game(g, cat, mouse, {.horizon = 0}), std::invalid_argument);
  EXPECT_THROW(play_game(g, cat, mouse, {.slowness = 0}), std::invalid_argument);
  EXPECT_THROW(play_game(g, cat, mouse, {.target_distance = -1}), std::invalid_argument);
}

TEST(PlayGame, CatMustHonorItsInitialPair) {
  class Fickle final : public CatStrategy {
   public:
    std::string name() const override { return "fickle"; }
    std::pair<Vertex, Vertex> initial_pair() const override { return {1, 2}; }
    CatAction step(const CatObservation&) override { return Probe{3}; }
    std::unique_ptr<CatStrategy> clone() const override { return std::make_unique<Fickle>(*this); }
  } cat;
  StationaryMouse mouse(1);
  EXPECT_THROW(play_game(gen_path(3), cat, mouse, {.horizon = 3}), EngineError);
}

TEST(PlayGame, ObserverSeesExactSets) {
  const Graph g = gen_random_connected(9, 0.3, 4, 1);
  ScriptedCat cat({1, 5, 9, 2, 7, 3});
  RandomMouse mouse(4);
  std::vector<std::size_t> sizes;
  const GameTrace t = play_game(g, cat, mouse, {.horizon = 6}, [&](const RoundRecord& r, const CandidateSet& m) {
    EXPECT_EQ(r.candidate_count, m.size());
    EXPECT_TRUE(m.contains(r.mouse));
    sizes.push_back(m.size());
  });
  EXPECT_EQ(sizes.size(), t.rounds.size());
}

TEST(VerifyTrace, AcceptsPlayedGames) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Graph g = gen_random_connected(15, 0.15, 4, s);
    RandomCat cat(g, s);
    RandomMouse mouse(s + 100);
    const GameTrace t = play_game(g, cat, mouse, {.horizon = 30, .slowness = 1 + static_cast<int>(s % 3)});
    const TraceCheck c = verify_trace(t, g);
    EXPECT_TRUE(c) << c.reason;
  }
}

TEST(VerifyTrace, FlippedBitFailsAtThatRound) {
  const Graph g = gen_random_connected(12, 0.2, 4, 3);
  RandomCat cat(g, 3);
  RandomMouse mouse(8);
  GameTrace t = play_game(g, cat, mouse, {.horizon = 12});
  t.rounds[6].bit = 1 - *t.rounds[6].bit;
  const TraceCheck c = verify_trace(t, g);
  EXPECT_FALSE(c);
  EXPECT_EQ(c.round, 7);
}

TEST(VerifyTrace, TeleportFails) {
  const Graph g = gen_path(10);
  ScriptedCat cat({1, 10});
  StationaryMouse mouse(2);
  GameTrace t = play_game(g, cat, mouse, {.horizon = 8});
  t.rounds[4].mouse = 9;
  t.rounds[4].distance = g.dist(t.rounds[4].probe, 9);
  const TraceCheck c = verify_trace(t, g);
  EXPECT_FALSE(c);
  EXPECT_EQ(c.round, 5);
}

TEST(VerifyTrace, WrongCandidateStatisticsFail) {
  const Graph g = gen_path(10);
  ScriptedCat cat({1, 10, 4});
  StationaryMouse mouse(2);
  GameTrace t = play_game(g, cat, mouse, {.horizon = 6});
  t.rounds[3].candidate_count += 1;
  EXPECT_FALSE(verify_trace(t, g));
}

TEST(PlayGame, Deterministic) {
  const Graph g = gen_random_connected(30, 0.1, 4, 12);
  auto run = [&] {
    RandomCat cat(g, 77);
    RandomMouse mouse(78);
    return play_game(g, cat, mouse, {.horizon = 40});
  };
  const GameTrace a = run(), b = run();
  ASSERT_EQ(a.rounds.size(), b.rounds.size());
  for (std::size_t i = 0; i < a.rounds.size(); ++i) {
    EXPECT_EQ(a.rounds[i].probe, b.rounds[i].probe);
    EXPECT_EQ(a.rounds[i].mouse, b.rounds[i].mouse);
    EXPECT_EQ(a.rounds[i].bit, b.rounds[i].bit);
    EXPECT_EQ(a.rounds[i].candidate_count, b.rounds[i].candidate_count);
  }
}

}  // namespace
}  // namespace relloc
