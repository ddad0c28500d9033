#include "relloc/candidates.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace relloc {

CandidateSet CandidateSet::everything(const Graph& g) {
  std::vector<Vertex> all(g.order());
  std::iota(all.begin(), all.end(), 1);
  return {std::move(all), 1};
}

bool CandidateSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

CandidateSet update_candidates(const Graph& g, const CandidateSet& prev, Vertex c_prev,
                               Vertex c_cur, bool bit, bool may_move) {
  if (!g.contains(c_prev) || !g.contains(c_cur)) {
    throw GraphError("update_candidates: probe out of range");
  }
  std::vector<char> mark(g.order() + 1, 0);
  std::vector<Vertex> out;
  auto consider = [&](Vertex v, int prev_dist) {
    if (mark[v]) return;
    if ((g.dist(c_cur, v) <= prev_dist) == bit) {
      mark[v] = 1;
      out.push_back(v);
    }
  };
  for (Vertex u : prev.members()) {
    const int prev_dist = g.dist(c_prev, u);
    consider(u, prev_dist);
    if (may_move) {
      for (Vertex w : g.neighbors(u)) consider(w, prev_dist);
    }
  }
  std::sort(out.begin(), out.end());
  return {std::move(out), prev.round() + 1};
}

CandidateSet brute_force_candidates(const Graph& g, std::span<const Vertex> probes,
                                    std::span<const int> bits, int slowness) {
  const int n = g.order();
  const int rounds = static_cast<int>(probes.size());
  if (n > 10) throw OracleGuardError("brute_force_candidates: n = " + std::to_string(n) + " > 10");
  if (rounds > 8) {
    throw OracleGuardError("brute_force_candidates: " + std::to_string(rounds) + " rounds > 8");
  }
  if (slowness < 1) throw OracleGuardError("brute_force_candidates: slowness must be >= 1");
  if (rounds == 0) return CandidateSet::everything(g);
  if (bits.size() + 1 != probes.size()) {
    throw OracleGuardError("brute_force_candidates: need exactly one bit per round after the first");
  }

  // Depth-first over m~_1..m~_L; each round's condition is checked as soon as
  // both of its endpoints are fixed.
  std::vector<char> reachable(n + 1, 0);
  std::vector<Vertex> traj(rounds);
  std::vector<std::vector<int>> table(n + 1);
  for (Vertex v = 1; v <= n; ++v) table[v] = bfs_distances(g, v);

  auto extend = [&](auto&& self, int j) -> void {
    if (j == rounds) {
      reachable[traj[rounds - 1]] = 1;
      return;
    }
    const int round = j + 1;  // 1-based round of m~_{j+1}
    for (Vertex v = 1; v <= n; ++v) {
      const Vertex prev = traj[j - 1];
      const bool adjacent_or_same = table[prev][v] <= 1;
      if (!adjacent_or_same) continue;
      if (v != prev && (round - 1) % slowness != 0) continue;
      const bool closer = table[probes[j]][v] <= table[probes[j - 1]][prev];
      if (closer != (bits[j - 1] != 0)) continue;
      traj[j] = v;
      self(self, j + 1);
    }
  };
  for (Vertex v = 1; v <= n; ++v) {
    traj[0] = v;
    extend(extend, 1);
  }

  std::vector<Vertex> members;
  for (Vertex v = 1; v <= n; ++v) {
    if (reachable[v]) members.push_back(v);
  }
  return {std::move(members), rounds};
}

}  // namespace relloc
