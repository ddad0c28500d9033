#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "relloc/game.hpp"

namespace relloc {

struct EscapeQuery {
  int horizon = 12;  // T
  int target = 0;    // d; the mouse escapes if rad(M_i) > d for all played rounds
  int slowness = 1;
};

struct EscapeResult {
  bool escaped = false;
  // Escape certificate m_1..m_T when escaped; otherwise a trajectory that
  // held out longest (ties: first found).
  std::vector<Vertex> trajectory;
  // Rounds survived by `trajectory` with rad(M_i) > d.
  int survived = 0;
  std::uint64_t nodes = 0;
};

// Depth-first search over all mouse trajectories against a deterministic cat,
// moves in ascending vertex order. A Done declaration ends the game, so a
// branch that reaches it with rad(M_i) > d is an escape; the certificate then
// stays put for the remaining rounds. Limited to n <= 10 and T <= 12.
EscapeResult search_escape(const Graph& g, const CatStrategy& fresh_cat, const EscapeQuery& q);

// Runs search_escape against the cat it meets in round 1 and plays the
// certificate, or the longest-surviving trajectory if there is none.
class ExhaustiveEvader final : public MouseStrategy {
 public:
  explicit ExhaustiveEvader(EscapeQuery q) : query_(q) {}
  std::string name() const override { return "exhaustive"; }
  Vertex choose(const MouseObservation& obs) override;
  const std::optional<EscapeResult>& result() const { return result_; }

 private:
  EscapeQuery query_;
  std::optional<EscapeResult> result_;
};

}  // namespace relloc
