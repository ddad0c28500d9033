#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "relloc/game.hpp"

namespace relloc {

class StationaryMouse final : public MouseStrategy {
 public:
  explicit StationaryMouse(Vertex v) : v_(v) {}
  std::string name() const override { return "stationary"; }
  Vertex choose(const MouseObservation& obs) override;

 private:
  Vertex v_;
};

// Uniform start, then a uniform member of N[m] in every round it may move.
class RandomMouse final : public MouseStrategy {
 public:
  explicit RandomMouse(std::uint64_t seed) : rng_(seed) {}
  std::string name() const override { return "random"; }
  Vertex choose(const MouseObservation& obs) override;

 private:
  std::mt19937_64 rng_;
};

// One-step lookahead against the upcoming probe: every legal move is scored
// by the candidate set it would produce, preferring larger radius, then more
// candidates, then the smaller vertex.
//
// Round 1 has no bit, so the start is scored by M_2 under the assumption that
// the mouse then stays put, with distance from the first two probes as the
// next tie-break.
class GreedyEvader final : public MouseStrategy {
 public:
  std::string name() const override { return "greedy"; }
  Vertex choose(const MouseObservation& obs) override;

  // The M_i predicted for the move returned by the last choose() in a round
  // i >= 2; the engine must realize exactly this set.
  const std::optional<CandidateSet>& last_prediction() const { return prediction_; }

 private:
  std::optional<CandidateSet> prediction_;
};

// Plays a fixed trajectory, e.g. an escape certificate. Past its end it
// stays on the last vertex.
class ReplayMouse final : public MouseStrategy {
 public:
  explicit ReplayMouse(std::vector<Vertex> trajectory);
  std::string name() const override { return "replay"; }
  Vertex choose(const MouseObservation& obs) override;

 private:
  std::vector<Vertex> trajectory_;
};

}  // namespace relloc
