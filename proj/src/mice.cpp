#include "relloc/mice.hpp"

#include <tuple>

#include "relloc/generators.hpp"

namespace relloc {

Vertex StationaryMouse::choose(const MouseObservation& obs) {
  if (obs.round == 1) {
    if (!obs.graph.contains(v_)) throw GraphError("stationary mouse: vertex out of range");
    return v_;
  }
  return obs.current;
}

Vertex RandomMouse::choose(const MouseObservation& obs) {
  if (obs.round == 1) {
    return static_cast<Vertex>(uniform_below(rng_, static_cast<std::uint64_t>(obs.graph.order()))) + 1;
  }
  if (!obs.may_move) return obs.current;
  const std::vector<Vertex> options = obs.graph.closed_neighborhood(obs.current);
  return options[uniform_below(rng_, options.size())];
}

namespace {

// Larger radius, then larger set; callers break remaining ties by id.
using Score = std::tuple<int, std::size_t>;

Score score_of(const Graph& g, const CandidateSet& m) {
  if (m.empty()) return {-1, 0};  // a bit no vertex can produce
  return {radius_of_set(g, m.members()).radius, m.size()};
}

}  // namespace

Vertex GreedyEvader::choose(const MouseObservation& obs) {
  const Graph& g = obs.graph;
  prediction_.reset();
  if (obs.round == 1) {
    const auto [c1, c2] = obs.cat.initial_pair();
    // M_2 depends on v only through the bit v would produce.
    const CandidateSet all = CandidateSet::everything(g);
    const Score by_bit[2] = {score_of(g, update_candidates(g, all, c1, c2, false, true)),
                             score_of(g, update_candidates(g, all, c1, c2, true, true))};
    Vertex best = 1;
    std::optional<std::tuple<int, std::size_t, int>> best_score;
    for (Vertex v = 1; v <= g.order(); ++v) {
      const int d1 = g.dist(c1, v), d2 = g.dist(c2, v);
      const auto [rad, size] = by_bit[d2 <= d1 ? 1 : 0];
      const std::tuple<int, std::size_t, int> s{rad, size, std::min(d1, d2)};
      if (!best_score || s > *best_score) {
        best_score = s;
        best = v;
      }
    }
    return best;
  }

  const Vertex c_prev = obs.probes.back();
  const Vertex c_cur = obs.upcoming_probe;
  const int d_prev = g.dist(c_prev, obs.current);
  const std::vector<Vertex> options =
      obs.may_move ? g.closed_neighborhood(obs.current) : std::vector<Vertex>{obs.current};
  Vertex best = 0;
  std::optional<Score> best_score;
  for (Vertex w : options) {
    const bool bit = g.dist(c_cur, w) <= d_prev;
    CandidateSet next = update_candidates(g, obs.candidates, c_prev, c_cur, bit, obs.may_move);
    const Score s = score_of(g, next);
    if (!best_score || s > *best_score) {
      best_score = s;
      best = w;
      prediction_ = std::move(next);
    }
  }
  return best;
}

ReplayMouse::ReplayMouse(std::vector<Vertex> trajectory) : trajectory_(std::move(trajectory)) {
  if (trajectory_.empty()) throw std::invalid_argument("replay mouse: empty trajectory");
}

Vertex ReplayMouse::choose(const MouseObservation& obs) {
  const auto idx = static_cast<std::size_t>(obs.round - 1);
  return idx < trajectory_.size() ? trajectory_[idx] : trajectory_.back();
}

}  // namespace relloc
