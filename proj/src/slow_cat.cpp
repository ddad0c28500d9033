#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "relloc/cats.hpp"

namespace relloc {

SlowCat::SlowCat(const Graph& g, int max_degree) : graph_(g), max_degree_(max_degree) {
  if (max_degree < 2) throw GraphError("slow cat: maximum degree must be at least 2");
  if (g.max_degree() > max_degree) {
    throw GraphError("slow cat: graph has degree " + std::to_string(g.max_degree()) + " > " +
                     std::to_string(max_degree));
  }
  std::vector<Vertex> all(g.order());
  std::iota(all.begin(), all.end(), 1);
  begin_block(1, radius_of_set(g, all).center);
}

std::vector<Vertex> SlowCat::alternating(Vertex center, std::span<const Vertex> others) {
  std::vector<Vertex> out{center};
  for (Vertex w : others) {
    out.push_back(w);
    out.push_back(center);
  }
  return out;
}

void SlowCat::begin_block(int first_round, Vertex anchor) {
  block_first_round_ = first_round;
  phase_first_round_ = first_round;
  phase_ = Phase::kAroundAnchor;
  anchor_ = anchor;
  const auto nb = graph_.neighbors(anchor);
  tested_.assign(nb.begin(), nb.end());
  schedule_ = alternating(anchor, tested_);
  block_starts_.push_back({first_round, anchor});
}

std::pair<Vertex, Vertex> SlowCat::initial_pair() const {
  return {schedule_[0], schedule_.size() > 1 ? schedule_[1] : schedule_[0]};
}

CatAction SlowCat::step(const CatObservation& obs) {
  const int i = obs.round;
  if (phase_ != Phase::kPadding) {
    const auto offset = static_cast<std::size_t>(i - phase_first_round_);
    if (offset + 1 < schedule_.size()) return Probe{schedule_[offset + 1]};

    // Schedule center, w_1, center, ..., w_t, center started at round s:
    // w_j was probed at s+2j-1 and the center again at s+2j.
    const Vertex center = schedule_[0];
    const int s = phase_first_round_;
    const int t = static_cast<int>(tested_.size());
    bool all_farther = true;
    for (int j = 1; j <= t; ++j) all_farther = all_farther && obs.bit(s + 2 * j - 1) == 0;
    if (all_farther) return Done{center, 0};

    int closer = 0;
    for (int j = 1; j <= t && closer == 0; ++j) {
      if (obs.bit(s + 2 * j) == 0) closer = j;
    }
    if (closer == 0) {
      throw std::logic_error("slow cat: no neighbor tested closer; the mouse is not " +
                             std::to_string(block_length()) + "-slow");
    }
    const Vertex chosen = tested_[closer - 1];
    if (phase_ == Phase::kAroundAnchor) {
      step_vertex_ = chosen;
      tested_.clear();
      for (Vertex w : graph_.neighbors(chosen)) {
        if (w != anchor_) tested_.push_back(w);
      }
      schedule_ = alternating(chosen, tested_);
      phase_ = Phase::kAroundStep;
      phase_first_round_ = i + 1;
      return Probe{schedule_[0]};
    }
    anchor_ = chosen;
    phase_ = Phase::kPadding;
  }

  if (i + 1 == block_first_round_ + block_length()) {
    begin_block(i + 1, anchor_);
    return Probe{schedule_[0]};
  }
  return Probe{obs.probes.back()};
}

}  // namespace relloc
