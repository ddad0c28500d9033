#include <gtest/gtest.h>

#include <bit>

#include "relloc/cats.hpp"
#include "relloc/generators.hpp"
#include "relloc/mice.hpp"
#include "test_support.hpp"

namespace relloc {
namespace {

int ceil_half(int x) { return (x + 1) / 2; }
int offset(int extent) { return extent % 2 == 0 ? extent / 2 - 1 : (extent - 1) / 2; }

std::vector<Vertex> box_members(const Layout& lay, const Box& b) {
  std::vector<Vertex> out;
  for (int y = b.y; y <= b.y + b.dy; ++y) {
    for (int x = b.x; x <= b.x + b.dx; ++x) out.push_back(lay.vertex_at(x, y));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Every vertex that could follow a member of `m` under some bit, i.e. N[m].
CandidateSet closed_neighborhood(const Graph& g, const CandidateSet& m) {
  std::set<Vertex> out;
  for (Vertex v : m.members()) {
    for (Vertex w : g.closed_neighborhood(v)) out.insert(w);
  }
  return CandidateSet({out.begin(), out.end()}, m.round() + 1);
}

struct BlockOutcome {
  int b2, b3;
  Box after;
};

// Runs one three-probe block from a full box, leaving the first bit free:
// M_{i+1} is the union over both values of b_{i+1}, then b_{i+2}, b_{i+3}
// take each combination that keeps the set nonempty.
std::vector<BlockOutcome> run_block(const Graph& g, const Box& box, bool swapped) {
  const Layout& lay = g.layout();
  const int x = box.x + offset(box.dx), y = box.y + offset(box.dy);
  const std::vector<Vertex> probes = swapped
      ? std::vector<Vertex>{lay.vertex_at(x, y), lay.vertex_at(x, y + 2), lay.vertex_at(x + 2, y + 2)}
      : std::vector<Vertex>{lay.vertex_at(x, y), lay.vertex_at(x + 2, y), lay.vertex_at(x + 2, y + 2)};
  const CandidateSet m1 = closed_neighborhood(g, CandidateSet(box_members(lay, box), 1));
  std::vector<BlockOutcome> out;
  for (int b2 : {0, 1}) {
    const CandidateSet m2 = update_candidates(g, m1, probes[0], probes[1], b2 == 1, true);
    if (m2.empty()) continue;
    for (int b3 : {0, 1}) {
      const CandidateSet m3 = update_candidates(g, m2, probes[1], probes[2], b3 == 1, true);
      if (m3.empty()) continue;
      out.push_back({b2, b3, bounding_box(lay, m3.members())});
    }
  }
  return out;
}

TEST(GridCat, WideBoxWithNearThenFarBits) {
  const Graph g = gen_grid(40, 40);
  const Box box{11, 11, 10, 7};
  const Layout& lay = g.layout();
  EXPECT_EQ(lay.vertex_at(11 + offset(10), 11 + offset(7)), lay.vertex_at(15, 14));
  bool seen = false;
  for (const BlockOutcome& o : run_block(g, box, false)) {
    if (o.b2 == 1 && o.b3 == 0) {
      seen = true;
      EXPECT_EQ(o.after.dx, 10 / 2 + 4);
      EXPECT_EQ(o.after.dy, ceil_half(7) + 3);
    }
  }
  EXPECT_TRUE(seen);
}

TEST(GridCat, ExtentRecurrencesHoldForEveryBox) {
  const Graph g = gen_grid(70, 70);
  for (int dx = 0; dx <= 26; ++dx) {
    for (int dy = 0; dy <= 26; ++dy) {
      const Box box{20, 20, dx, dy};
      if (box.radius() <= GridCat::kRadius) continue;
      const bool swapped = dx == 9 && dy == 7;
      for (const BlockOutcome& o : run_block(g, box, swapped)) {
        EXPECT_LE(o.after.dx, ceil_half(dx) + (swapped ? 3 : 4)) << dx << "x" << dy;
        EXPECT_LE(o.after.dy, ceil_half(dy) + (swapped ? 4 : 3)) << dx << "x" << dy;
      }
    }
  }
}

TEST(GridCat, AxisExchangeEndsTheNineBySevenBox) {
  const Graph g = gen_grid(40, 40);
  for (const BlockOutcome& o : run_block(g, {11, 11, 9, 7}, true)) {
    EXPECT_LE(o.after.radius(), GridCat::kRadius) << o.after.dx << "x" << o.after.dy;
  }
}

TEST(GridCat, SmallGridIsDoneAtOnce) {
  const Graph g = gen_grid(5, 5);
  GridCat cat(g);
  StationaryMouse mouse(25);
  const GameTrace t = play_game(g, cat, mouse, {.horizon = 4, .target_distance = 8});
  ASSERT_TRUE(t.done);
  EXPECT_EQ(t.done->round, 1);
  EXPECT_EQ(t.done->center, g.layout().vertex_at(3, 3));
}

TEST(GridCat, GamesFinishWithinTheRoundBound) {
  for (int n : {8, 16, 32, 64, 100}) {
    const Graph g = gen_grid(n, n);
    const int log2n = std::bit_width(static_cast<unsigned>(n - 1));
    const int bound = 3 * (log2n + 10);
    std::vector<std::unique_ptr<MouseStrategy>> mice;
    mice.push_back(std::make_unique<GreedyEvader>());
    for (std::uint64_t s = 0; s < 5; ++s) mice.push_back(std::make_unique<RandomMouse>(s + 31 * n));
    for (auto& mouse : mice) {
      GridCat cat(g);
      const GameTrace t = play_game(g, cat, *mouse, {.horizon = bound + 1, .target_distance = 8});
      ASSERT_TRUE(t.done) << n << " " << mouse->name();
      EXPECT_LE(t.done->round, bound);
      ASSERT_TRUE(t.first_success);
      EXPECT_LE(*t.first_success, bound);
      EXPECT_TRUE(verify_trace(t, g));
      for (const auto& b : cat.blocks()) {
        EXPECT_GE(b.after.x, b.before.x - 3);
        EXPECT_LE(b.after.dx, ceil_half(b.before.dx) + (b.swapped ? 3 : 4));
        EXPECT_LE(b.after.dy, ceil_half(b.before.dy) + (b.swapped ? 4 : 3));
      }
    }
  }
}

TEST(GridCat, RectangularGrid) {
  const Graph g = gen_grid(90, 7);
  GridCat cat(g);
  GreedyEvader mouse;
  const GameTrace t = play_game(g, cat, mouse, {.horizon = 60, .target_distance = 8});
  ASSERT_TRUE(t.done);
  EXPECT_TRUE(verify_trace(t, g));
}

TEST(GridCat, RejectsNonGrid) {
  EXPECT_THROW(GridCat(gen_path(10)), GraphError);
  EXPECT_THROW(GridCat(gen_random_tree(10, 3, 1)), GraphError);
}

}  // namespace
}  // namespace relloc
