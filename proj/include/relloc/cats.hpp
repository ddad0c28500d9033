#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "relloc/game.hpp"
#include "relloc/graph.hpp"

namespace relloc {

// "The mouse was in the component of T - {from,to} containing `to` at
// `round`", the directional facts the tree strategy accumulates.
struct DirectedFact {
  int round;
  Vertex from;
  Vertex to;
};

// Localizes the mouse on a tree of maximum degree <= max_degree up to
// distance 4*max_degree - 6.
//
// Rooted at the tree center. Each outer iteration first eliminates children
// of the local root r pairwise: probing siblings u then v, a bit of 1 rules
// out T_u and a bit of 0 rules out T_v. The survivor r+ is kept. Then each
// child w of r+ is probed followed by r: a bit of 1 rules out T_w, a bit of 0
// places the mouse inside T_{r+} and r descends to r+. If every child of r+
// is ruled out, or T_r is shallow enough, the strategy is done.
class TreeCat final : public CatStrategy {
 public:
  TreeCat(const Graph& tree, int max_degree);

  std::string name() const override { return "tree"; }
  std::pair<Vertex, Vertex> initial_pair() const override;
  CatAction step(const CatObservation& obs) override;
  std::unique_ptr<CatStrategy> clone() const override { return std::make_unique<TreeCat>(*this); }
  std::optional<int> guaranteed_radius() const override { return radius_bound(); }

  int radius_bound() const { return 4 * max_degree_ - 6; }
  // 2 * max{0, h - (4D - 6)} * (2D - 2), h the tree radius.
  int round_bound() const;
  Vertex root() const { return tree_->root; }
  const RootedTree& rooted() const { return *tree_; }

  // Completed-round count and local root at the start of each outer
  // iteration.
  struct OuterStart {
    int completed_rounds;
    Vertex local_root;
  };
  const std::vector<OuterStart>& outer_starts() const { return outer_starts_; }
  const std::vector<DirectedFact>& facts() const { return facts_; }

 private:
  enum class Phase { kOuterStart, kSiblings, kChildren, kFinished };
  enum class PairKind { kSiblings, kChild };
  struct PendingPair {
    PairKind kind;
    Vertex first;
    Vertex second;
  };

  // Runs the control flow forward until a pair is ready or the strategy is
  // done. `completed` is the number of rounds already played.
  void advance(int completed);
  void apply_bit(int bit, int round);

  std::shared_ptr<const RootedTree> tree_;
  int max_degree_;
  Phase phase_ = Phase::kOuterStart;
  Vertex local_root_;
  Vertex survivor_ = 0;
  std::vector<Vertex> siblings_;  // X
  std::vector<Vertex> children_;  // Y
  std::optional<PendingPair> pair_;
  std::optional<PendingPair> first_pair_;
  bool pair_half_done_ = false;
  std::vector<OuterStart> outer_starts_;
  std::vector<DirectedFact> facts_;
};

// Axis-aligned box [x, x+dx] x [y, y+dy] in grid coordinates.
struct Box {
  int x = 1, y = 1, dx = 0, dy = 0;
  // Radius of the box around (x + dx/2, y + dy/2) in the L1 metric.
  int radius() const { return (dx + 1) / 2 + (dy + 1) / 2; }
  friend bool operator==(const Box&, const Box&) = default;
};

Box bounding_box(const Layout& layout, std::span<const Vertex> members);

// Localizes the mouse on a grid up to distance 8 in O(log n) rounds.
//
// Works in blocks of three probes placed around the middle of the current box
// (offset p = dx/2 - 1 for even extents, (dx-1)/2 for odd):
//   (x+px, y+py), (x+px+2, y+py), (x+px+2, y+py+2).
// After a block the box becomes the bounding box of the exact candidate set.
// When the extents are exactly (9, 7) the block runs with the axes exchanged.
// Probes are clamped into the grid.
class GridCat final : public CatStrategy {
 public:
  explicit GridCat(const Graph& grid);

  std::string name() const override { return "grid"; }
  std::pair<Vertex, Vertex> initial_pair() const override;
  CatAction step(const CatObservation& obs) override;
  std::unique_ptr<CatStrategy> clone() const override { return std::make_unique<GridCat>(*this); }
  std::optional<int> guaranteed_radius() const override { return kRadius; }

  static constexpr int kRadius = 8;

  struct BlockEnd {
    int round;
    Box before;
    Box after;
    bool swapped;
  };
  const std::vector<BlockEnd>& blocks() const { return blocks_; }

 private:
  void plan_block();
  std::optional<Done> done_for_box() const;

  Layout layout_;
  Box box_;
  bool swapped_ = false;
  std::vector<Vertex> block_;
  std::size_t next_in_block_ = 0;
  std::vector<BlockEnd> blocks_;
};

// Localizes the mouse on a path up to distance 2 in O(log n) rounds.
//
// The one-dimensional counterpart of GridCat: while the candidate interval
// has width w >= 6 it probes x+p and x+p+2 with p = ceil(w/2) - 1, then
// shrinks the interval to the exact candidate span. At width 5 the two-probe
// block can stall, so a single probe is chosen to minimize the worst-case
// width of the next candidate set. Done once the width is at most 4.
class PathCat final : public CatStrategy {
 public:
  explicit PathCat(const Graph& path);

  std::string name() const override { return "path"; }
  std::pair<Vertex, Vertex> initial_pair() const override { return initial_; }
  CatAction step(const CatObservation& obs) override;
  std::unique_ptr<CatStrategy> clone() const override { return std::make_unique<PathCat>(*this); }
  std::optional<int> guaranteed_radius() const override { return kRadius; }

  static constexpr int kRadius = 2;
  // 2 * (ceil(log2 n) + 6).
  static int round_bound(int n);

  struct Stage {
    int round;
    int width_before;
    int width_after;
    bool endgame;
  };
  const std::vector<Stage>& stages() const { return stages_; }

 private:
  std::vector<Vertex> plan(const CandidateSet& candidates, Vertex last_probe) const;

  Graph graph_;
  std::pair<Vertex, Vertex> initial_;
  bool done_at_start_ = false;
  std::vector<Vertex> queue_;
  std::size_t next_ = 0;
  int stage_width_ = 0;
  bool stage_endgame_ = false;
  std::vector<Stage> stages_;
};

// Localizes a 4D-slow mouse exactly on any connected graph of maximum degree
// <= D.
//
// Blocks of 4D rounds line up with the mouse's move rounds. Anchored at r, a
// block probes r, u_1, r, u_2, ..., r, u_d, r over the neighbors of r. If
// every u_j tested farther than r, the mouse is at r. Otherwise the first u_j
// that tested strictly closer is probed against its other neighbors v_l the
// same way; either the mouse is at u_j, or the first strictly closer v_l
// becomes the next anchor, two steps closer to the mouse. Leftover rounds
// re-probe the last vertex.
class SlowCat final : public CatStrategy {
 public:
  SlowCat(const Graph& g, int max_degree);

  std::string name() const override { return "slow"; }
  std::pair<Vertex, Vertex> initial_pair() const override;
  CatAction step(const CatObservation& obs) override;
  std::unique_ptr<CatStrategy> clone() const override { return std::make_unique<SlowCat>(*this); }
  std::optional<int> guaranteed_radius() const override { return 0; }

  int block_length() const { return 4 * max_degree_; }
  int required_slowness() const { return block_length(); }

  struct BlockStart {
    int round;
    Vertex anchor;
  };
  const std::vector<BlockStart>& block_starts() const { return block_starts_; }

 private:
  enum class Phase { kAroundAnchor, kAroundStep, kPadding };

  // Probe sequence center, w_1, center, ..., w_t, center.
  static std::vector<Vertex> alternating(Vertex center, std::span<const Vertex> others);
  void begin_block(int first_round, Vertex anchor);

  Graph graph_;
  int max_degree_;
  Phase phase_ = Phase::kAroundAnchor;
  int block_first_round_ = 1;
  int phase_first_round_ = 1;
  Vertex anchor_;
  Vertex step_vertex_ = 0;
  std::vector<Vertex> tested_;  // the u_j or v_l of the current phase
  std::vector<Vertex> schedule_;
  std::vector<BlockStart> block_starts_;
};

// Uniformly random probes from a seeded generator; never declares Done.
class RandomCat final : public CatStrategy {
 public:
  RandomCat(const Graph& g, std::uint64_t seed);

  std::string name() const override { return "random"; }
  std::pair<Vertex, Vertex> initial_pair() const override { return initial_; }
  CatAction step(const CatObservation& obs) override;
  std::unique_ptr<CatStrategy> clone() const override { return std::make_unique<RandomCat>(*this); }

 private:
  Vertex draw();

  int n_;
  std::mt19937_64 rng_;
  std::pair<Vertex, Vertex> initial_;
};

}  // namespace relloc
