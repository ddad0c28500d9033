#include <gtest/gtest.h>

#include "relloc/cats.hpp"
#include "relloc/generators.hpp"
#include "relloc/mice.hpp"
#include "test_support.hpp"

namespace relloc {
namespace {

TEST(RandomCat, SameSeedSameProbes) {
  const Graph g = gen_grid(6, 6);
  RandomCat a(g, 42), b(g, 42), c(g, 43);
  StationaryMouse m1(1), m2(1), m3(1);
  const auto pa = testing::probes_of(play_game(g, a, m1, {.horizon = 50}));
  EXPECT_EQ(pa, testing::probes_of(play_game(g, b, m2, {.horizon = 50})));
  EXPECT_NE(pa, testing::probes_of(play_game(g, c, m3, {.horizon = 50})));
  for (Vertex v : pa) EXPECT_TRUE(g.contains(v));
}

TEST(RandomCat, SingleVertex) {
  const Graph g = gen_path(1);
  RandomCat cat(g, 7);
  StationaryMouse mouse(1);
  const GameTrace t = play_game(g, cat, mouse, {.horizon = 10});
  for (Vertex v : testing::probes_of(t)) EXPECT_EQ(v, 1);
}

TEST(RandomCat, EdgeProbesFollowTheSeededStream) {
  const Graph k2 = gen_path(2);
  RandomCat cat(k2, 2024);
  StationaryMouse mouse(2);
  const auto probes = testing::probes_of(play_game(k2, cat, mouse, {.horizon = 16}));
  std::mt19937_64 rng(2024);
  for (Vertex v : probes) EXPECT_EQ(v, static_cast<Vertex>(uniform_below(rng, 2)) + 1);
}

TEST(RandomCat, NeverDeclaresDone) {
  const Graph g = gen_path(3);
  RandomCat cat(g, 1);
  StationaryMouse mouse(1);
  const GameTrace t = play_game(g, cat, mouse, {.horizon = 200});
  EXPECT_FALSE(t.done);
  EXPECT_EQ(t.rounds.size(), 200u);
  EXPECT_FALSE(cat.guaranteed_radius());
}

}  // namespace
}  // namespace relloc
