#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "relloc/graph.hpp"

namespace relloc {

// The set M_i of mouse positions consistent with every bit seen so far.
class CandidateSet {
 public:
  CandidateSet() = default;
  CandidateSet(std::vector<Vertex> sorted_members, int round)
      : members_(std::move(sorted_members)), round_(round) {}

  // M_1 = V(G).
  static CandidateSet everything(const Graph& g);

  std::span<const Vertex> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  // An empty set means the bit sequence is not realizable by any legal mouse.
  bool empty() const { return members_.empty(); }
  int round() const { return round_; }
  bool contains(Vertex v) const;

  friend bool operator==(const CandidateSet& a, const CandidateSet& b) {
    return a.members_ == b.members_;
  }

 private:
  std::vector<Vertex> members_;
  int round_ = 1;
};

// Whether the mouse may change vertex in round i of a k-slow game.
constexpr bool mouse_may_move(int round, int slowness) {
  return round >= 2 && (round - 1) % slowness == 0;
}

// One forward step of the knowledge DP:
//   M_cur = { v : exists u in M_prev, v in N[u] (or v = u when the mouse is
//             frozen), and [dist(c_cur, v) <= dist(c_prev, u)] == bit }.
// The result may be empty; callers must treat that as an inconsistent bit.
[[nodiscard]] CandidateSet update_candidates(const Graph& g, const CandidateSet& prev,
                                             Vertex c_prev, Vertex c_cur, bool bit,
                                             bool mouse_may_move);

class OracleGuardError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Reference computation of M_L from the definition by enumerating mouse
// trajectories m_1..m_L (probes.size() == L, bits holds b_2..b_L).
// Limited to n <= 10 and L <= 8.
CandidateSet brute_force_candidates(const Graph& g, std::span<const Vertex> probes,
                                    std::span<const int> bits, int slowness = 1);

}  // namespace relloc
