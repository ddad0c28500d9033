#include "relloc/game.hpp"

#include <algorithm>

namespace relloc {

void validate(const GameConfig& cfg) {
  if (cfg.horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  if (cfg.slowness < 1) throw std::invalid_argument("slowness must be at least 1");
  if (cfg.target_distance < 0) throw std::invalid_argument("target distance must be nonnegative");
}

namespace {

bool legal_move(const Graph& g, Vertex from, Vertex to, bool may_move) {
  if (to == from) return true;
  if (!may_move) return false;
  const auto nb = g.neighbors(from);
  return std::binary_search(nb.begin(), nb.end(), to);
}

}  // namespace

GameTrace play_game(const Graph& g, CatStrategy& cat, MouseStrategy& mouse, const GameConfig& cfg,
                    const RoundObserver& observer) {
  validate(cfg);
  GameTrace trace;
  trace.config = cfg;
  trace.cat_name = cat.name();
  trace.mouse_name = mouse.name();

  std::vector<Vertex> probes;
  std::vector<int> bits;
  CandidateSet candidates = CandidateSet::everything(g);
  const auto [c1, c2] = cat.initial_pair();
  if (!g.contains(c1) || !g.contains(c2)) throw EngineError(1, "initial probe out of range");

  Vertex pending = c1;
  Vertex mouse_at = 0;
  int prev_distance = 0;
  for (int i = 1; i <= cfg.horizon; ++i) {
    const bool may_move = i == 1 || mouse_may_move(i, cfg.slowness);
    const MouseObservation mobs{g,     i,    may_move,   cfg.slowness, mouse_at, probes,
                                bits,  candidates, cat,  pending};
    const Vertex m = mouse.choose(mobs);
    if (!g.contains(m)) throw EngineError(i, "mouse vertex " + std::to_string(m) + " out of range");
    if (i > 1 && !legal_move(g, mouse_at, m, may_move)) {
      throw EngineError(i, "illegal mouse move " + std::to_string(mouse_at) + " -> " +
                               std::to_string(m) + (may_move ? "" : " in a frozen round"));
    }

    const Vertex c = pending;
    const int d = g.dist(c, m);
    RoundRecord rec;
    rec.round = i;
    rec.probe = c;
    rec.mouse = m;
    rec.distance = d;
    if (i > 1) {
      const int b = d <= prev_distance ? 1 : 0;
      rec.bit = b;
      bits.push_back(b);
      candidates = update_candidates(g, candidates, probes.back(), c, b == 1, may_move);
      if (candidates.empty()) throw EngineError(i, "candidate set became empty");
    }
    probes.push_back(c);
    if (!candidates.contains(m)) {
      throw EngineError(i, "soundness violated: mouse at " + std::to_string(m) + " not in M_i");
    }
    const SetRadius rad = radius_of_set(g, candidates.members());
    rec.candidate_count = candidates.size();
    rec.candidate_radius = rad.radius;
    rec.candidate_center = rad.center;
    if (!trace.first_success && rad.radius <= cfg.target_distance) trace.first_success = i;
    trace.rounds.push_back(rec);
    if (observer) observer(rec, candidates);

    mouse_at = m;
    prev_distance = d;

    const CatObservation cobs{g, i, bits, probes, candidates};
    const CatAction action = cat.step(cobs);
    if (const auto* done = std::get_if<Done>(&action)) {
      if (!g.contains(done->center)) throw EngineError(i, "Done claim center out of range");
      const int actual = max_distance(g, done->center, candidates.members());
      if (actual > done->radius) {
        throw EngineError(i, cat.name() + " claimed radius " + std::to_string(done->radius) +
                                 " around " + std::to_string(done->center) +
                                 " but M_i reaches distance " + std::to_string(actual));
      }
      trace.done = DoneClaim{i, done->center, done->radius};
      break;
    }
    const Vertex next = std::get<Probe>(action).vertex;
    if (!g.contains(next)) throw EngineError(i + 1, "probe " + std::to_string(next) + " out of range");
    if (i == 1 && next != c2) throw EngineError(2, "cat contradicted its initial pair");
    pending = next;
  }
  return trace;
}

TraceCheck verify_trace(const GameTrace& trace, const Graph& g) {
  auto fail = [](int round, std::string why) { return TraceCheck{false, round, std::move(why)}; };
  const int k = std::max(1, trace.config.slowness);
  CandidateSet candidates = CandidateSet::everything(g);
  for (std::size_t idx = 0; idx < trace.rounds.size(); ++idx) {
    const RoundRecord& r = trace.rounds[idx];
    const int i = static_cast<int>(idx) + 1;
    if (r.round != i) return fail(i, "round index out of sequence");
    if (!g.contains(r.probe) || !g.contains(r.mouse)) return fail(i, "vertex out of range");
    if (r.distance != g.dist(r.probe, r.mouse)) return fail(i, "distance mismatch");
    if (i == 1) {
      if (r.bit) return fail(i, "round 1 carries a bit");
    } else {
      const RoundRecord& p = trace.rounds[idx - 1];
      const bool may_move = mouse_may_move(i, k);
      if (!legal_move(g, p.mouse, r.mouse, may_move)) return fail(i, "illegal mouse move");
      const int expected = r.distance <= p.distance ? 1 : 0;
      if (!r.bit || *r.bit != expected) return fail(i, "bit mismatch");
      candidates = update_candidates(g, candidates, p.probe, r.probe, expected == 1, may_move);
    }
    if (!candidates.contains(r.mouse)) return fail(i, "mouse outside the candidate set");
    if (r.candidate_count != candidates.size()) return fail(i, "candidate count mismatch");
    const SetRadius rad = radius_of_set(g, candidates.members());
    if (r.candidate_radius != rad.radius || r.candidate_center != rad.center) {
      return fail(i, "candidate radius mismatch");
    }
  }
  if (trace.done) {
    const auto& d = *trace.done;
    if (d.round < 1 || d.round > static_cast<int>(trace.rounds.size())) {
      return fail(d.round, "Done claim refers to a missing round");
    }
  }
  return {};
}

}  // namespace relloc
