#include <algorithm>
#include <bit>
#include <limits>

#include "relloc/candidates.hpp"
#include "relloc/cats.hpp"

namespace relloc {

namespace {

bool is_line(const Layout& lay) {
  return lay.kind == Layout::Kind::kPath || (lay.kind == Layout::Kind::kGrid && lay.rows == 1);
}

int span_of(std::span<const Vertex> sorted) { return sorted.back() - sorted.front(); }

}  // namespace

int PathCat::round_bound(int n) {
  const int log2n = n <= 1 ? 0 : std::bit_width(static_cast<unsigned>(n - 1));
  return 2 * (log2n + 6);
}

PathCat::PathCat(const Graph& path) : graph_(path) {
  if (!is_line(path.layout())) throw GraphError("path cat: graph is not a path");
  const int n = path.order();
  const int width = n - 1;
  if (width <= 4) {
    done_at_start_ = true;
    const Vertex mid = 1 + width / 2;
    initial_ = {mid, mid};
    return;
  }
  const CandidateSet everything = CandidateSet::everything(path);
  if (width >= 6) {
    queue_ = plan(everything, 0);
  } else {
    // Width 5 from the outset: spend round 1 on vertex 1, then the endgame
    // probe planned against M_1 = V.
    queue_ = {1, plan(everything, 1).front()};
  }
  stage_width_ = width;
  stage_endgame_ = width < 6;
  initial_ = {queue_[0], queue_[1]};
}

std::vector<Vertex> PathCat::plan(const CandidateSet& candidates, Vertex last_probe) const {
  const auto m = candidates.members();
  const int lo = m.front(), hi = m.back();
  const int width = hi - lo;
  if (width >= 6) {
    const int p = (width + 1) / 2 - 1;
    return {lo + p, lo + p + 2};
  }
  // One-step minimax over probes near the interval.
  Vertex best = lo;
  int best_width = std::numeric_limits<int>::max();
  for (Vertex c = std::max(1, lo - 3); c <= std::min(graph_.order(), hi + 3); ++c) {
    int worst = 0;
    for (bool bit : {false, true}) {
      const CandidateSet next = update_candidates(graph_, candidates, last_probe, c, bit, true);
      if (!next.empty()) worst = std::max(worst, span_of(next.members()));
    }
    if (worst < best_width) {
      best_width = worst;
      best = c;
    }
  }
  return {best};
}

CatAction PathCat::step(const CatObservation& obs) {
  if (done_at_start_) return Done{initial_.first, kRadius};
  ++next_;
  if (next_ < queue_.size()) return Probe{queue_[next_]};

  const auto m = obs.candidates.members();
  const int width = span_of(m);
  stages_.push_back({obs.round, stage_width_, width, stage_endgame_});
  if (width <= 4) return Done{m.front() + width / 2, kRadius};
  queue_ = plan(obs.candidates, obs.probes.back());
  next_ = 0;
  stage_width_ = width;
  stage_endgame_ = queue_.size() == 1;
  return Probe{queue_[0]};
}

}  // namespace relloc
