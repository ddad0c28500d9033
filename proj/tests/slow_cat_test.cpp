#include <gtest/gtest.h>

#include "relloc/cats.hpp"
#include "relloc/generators.hpp"
#include "relloc/mice.hpp"
#include "test_support.hpp"

namespace relloc {
namespace {

using testing::all_pairs;

TEST(SlowCat, PathOfThreeEndMouse) {
  const Graph p3 = gen_path(3);
  SlowCat cat(p3, 2);
  EXPECT_EQ(cat.required_slowness(), 8);
  StationaryMouse mouse(3);
  const GameTrace t = play_game(p3, cat, mouse, {.horizon = 20, .slowness = 8});
  EXPECT_EQ(testing::probes_of(t), (std::vector<Vertex>{2, 1, 2, 3, 2, 3}));
  ASSERT_TRUE(t.done);
  EXPECT_EQ(t.done->round, 6);
  EXPECT_EQ(t.done->center, 3);
  EXPECT_EQ(t.done->radius, 0);
}

TEST(SlowCat, MouseOnFirstAnchor) {
  const Graph p3 = gen_path(3);
  SlowCat cat(p3, 2);
  StationaryMouse mouse(2);
  const GameTrace t = play_game(p3, cat, mouse, {.horizon = 20, .slowness = 8});
  ASSERT_TRUE(t.done);
  EXPECT_EQ(t.done->round, 5);
  EXPECT_EQ(t.done->center, 2);
  EXPECT_EQ(cat.block_starts().front().anchor, 2);
}

TEST(SlowCat, BlocksStartOnMoveRounds) {
  const Graph g = gen_path(30);
  SlowCat cat(g, 2);
  StationaryMouse mouse(30);
  const GameTrace t = play_game(g, cat, mouse, {.horizon = 400, .slowness = 8});
  ASSERT_TRUE(t.done);
  const auto& starts = cat.block_starts();
  ASSERT_GE(starts.size(), 3u);
  for (std::size_t j = 0; j < starts.size(); ++j) {
    EXPECT_EQ(starts[j].round, 1 + 8 * static_cast<int>(j));
    EXPECT_TRUE(mouse_may_move(starts[j].round, 8) || starts[j].round == 1);
  }
}

TEST(SlowCat, AnchorsCloseInOnRandomGraphs) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const int cap = 2 + static_cast<int>(s % 4);
    const Graph g = gen_random_connected(2 + static_cast<int>(s * 11 % 80), 0.08, cap, s);
    const int delta = std::max(2, g.max_degree());
    const auto d = all_pairs(g);
    for (int which = 0; which < 2; ++which) {
      SlowCat cat(g, delta);
      std::unique_ptr<MouseStrategy> mouse;
      if (which == 0) {
        mouse = std::make_unique<GreedyEvader>();
      } else {
        mouse = std::make_unique<RandomMouse>(s + 500);
      }
      const int k = 4 * delta;
      const GameTrace t = play_game(g, cat, *mouse, {.horizon = k * (g.order() + 1), .slowness = k});
      ASSERT_TRUE(t.done) << "seed " << s;
      EXPECT_EQ(t.done->radius, 0);
      EXPECT_EQ(t.rounds.back().candidate_count, 1u);
      EXPECT_EQ(t.rounds.back().mouse, t.done->center);
      // Potential at a block start: distance from the anchor to where the
      // mouse sits for the whole block.
      int previous = 1 << 30;
      for (const auto& b : cat.block_starts()) {
        const int phi = d[b.anchor][t.rounds[b.round - 1].mouse];
        EXPECT_LT(phi, previous) << "seed " << s;
        previous = phi;
      }
    }
  }
}

TEST(SlowCat, RejectsBadDegree) {
  EXPECT_THROW(SlowCat(gen_path(4), 1), GraphError);
  EXPECT_THROW(SlowCat(gen_subdivided_star(3), 2), GraphError);
}

}  // namespace
}  // namespace relloc
