#include "relloc/escape_search.hpp"

#include <stdexcept>

namespace relloc {

namespace {

class Search {
 public:
  Search(const Graph& g, const EscapeQuery& q) : g_(g), q_(q) {}

  EscapeResult run(const CatStrategy& fresh) {
    const auto [c1, c2] = fresh.initial_pair();
    (void)c2;
    const CandidateSet all = CandidateSet::everything(g_);
    for (Vertex v = 1; v <= g_.order() && !result_.escaped; ++v) {
      path_.assign(1, v);
      probes_.assign(1, c1);
      bits_.clear();
      expand(fresh, all, 1);
    }
    return result_;
  }

 private:
  // Round i has just been decided: path_, probes_ and bits_ hold rounds 1..i
  // and `m` is M_i. `cat` has not yet seen round i.
  void expand(const CatStrategy& cat, const CandidateSet& m, int i) {
    ++result_.nodes;
    if (radius_of_set(g_, m.members()).radius <= q_.target) {
      record(i - 1);
      return;
    }
    if (i == q_.horizon) {
      escape();
      return;
    }
    std::unique_ptr<CatStrategy> next_cat = cat.clone();
    const CatAction action = next_cat->step(CatObservation{g_, i, bits_, probes_, m});
    if (std::holds_alternative<Done>(action)) {
      escape();
      return;
    }
    const Vertex c_next = std::get<Probe>(action).vertex;
    const Vertex here = path_.back();
    const int d_here = g_.dist(probes_.back(), here);
    const bool may_move = mouse_may_move(i + 1, q_.slowness);
    const std::vector<Vertex> options =
        may_move ? g_.closed_neighborhood(here) : std::vector<Vertex>{here};
    for (Vertex w : options) {
      const int bit = g_.dist(c_next, w) <= d_here ? 1 : 0;
      CandidateSet next = update_candidates(g_, m, probes_.back(), c_next, bit == 1, may_move);
      path_.push_back(w);
      probes_.push_back(c_next);
      bits_.push_back(bit);
      expand(*next_cat, next, i + 1);
      path_.pop_back();
      probes_.pop_back();
      bits_.pop_back();
      if (result_.escaped) return;
    }
  }

  void record(int survived) {
    if (result_.trajectory.empty() || survived > result_.survived) {
      result_.survived = survived;
      result_.trajectory = path_;
    }
  }

  void escape() {
    result_.escaped = true;
    result_.survived = static_cast<int>(path_.size());
    result_.trajectory = path_;
    result_.trajectory.resize(static_cast<std::size_t>(q_.horizon), path_.back());
  }

  const Graph& g_;
  EscapeQuery q_;
  EscapeResult result_;
  std::vector<Vertex> path_;
  std::vector<Vertex> probes_;
  std::vector<int> bits_;
};

}  // namespace

EscapeResult search_escape(const Graph& g, const CatStrategy& fresh_cat, const EscapeQuery& q) {
  if (g.order() > 10) throw OracleGuardError("escape search: n must be at most 10");
  if (q.horizon < 1 || q.horizon > 12) throw OracleGuardError("escape search: T must be in [1, 12]");
  if (q.slowness < 1) throw std::invalid_argument("escape search: slowness must be positive");
  return Search(g, q).run(fresh_cat);
}

Vertex ExhaustiveEvader::choose(const MouseObservation& obs) {
  if (obs.round == 1) result_ = search_escape(obs.graph, obs.cat, query_);
  const auto& path = result_->trajectory;
  const auto idx = static_cast<std::size_t>(obs.round - 1);
  if (idx < path.size()) return path[idx];
  return obs.round == 1 ? path.front() : obs.current;
}

}  // namespace relloc
