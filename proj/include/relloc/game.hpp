#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "relloc/candidates.hpp"
#include "relloc/graph.hpp"

namespace relloc {

// Raised by the referee: illegal moves, out-of-range probes, an empty
// candidate set, a mouse outside M_i, or a false Done claim.
class EngineError : public std::runtime_error {
 public:
  EngineError(int round, const std::string& what)
      : std::runtime_error("round " + std::to_string(round) + ": " + what), round_(round) {}
  int round() const { return round_; }

 private:
  int round_;
};

struct GameConfig {
  int horizon = 64;         // T
  int slowness = 1;         // k; 1 is the unrestricted game
  int target_distance = 0;  // d; first_success is the first i with rad(M_i) <= d
  std::uint64_t seed = 0;
};

void validate(const GameConfig& cfg);

struct RoundRecord {
  int round = 0;
  Vertex probe = 0;
  Vertex mouse = 0;
  int distance = 0;
  std::optional<int> bit;  // absent in round 1
  std::size_t candidate_count = 0;
  int candidate_radius = 0;
  Vertex candidate_center = 0;
};

struct DoneClaim {
  int round = 0;  // the claim concerns M_round
  Vertex center = 0;
  int radius = 0;
};

struct GameTrace {
  GameConfig config;
  std::string cat_name;
  std::string mouse_name;
  std::vector<RoundRecord> rounds;
  std::optional<int> first_success;
  std::optional<DoneClaim> done;

  int final_radius() const { return rounds.empty() ? 0 : rounds.back().candidate_radius; }
};

// What the cat sees after round i: bits b_2..b_i and its own probes c_1..c_i.
// M_i is a function of those, so handing it over adds no information.
struct CatObservation {
  const Graph& graph;
  int round;
  std::span<const int> bits;
  std::span<const Vertex> probes;
  const CandidateSet& candidates;

  // b_j for 2 <= j <= round.
  int bit(int j) const { return bits[j - 2]; }
};

struct Probe {
  Vertex vertex;
};

// "max over m in M_i of dist(center, m) <= radius".
struct Done {
  Vertex center;
  int radius;
};

using CatAction = std::variant<Probe, Done>;

// Realizes a strategy (c_1, c_2; f). step() runs after every round i >= 1 and
// returns c_{i+1}, or Done with a claim about M_i. After round 1 the probe it
// returns must equal the second vertex of initial_pair().
class CatStrategy {
 public:
  virtual ~CatStrategy() = default;
  virtual std::string name() const = 0;
  virtual std::pair<Vertex, Vertex> initial_pair() const = 0;
  virtual CatAction step(const CatObservation& obs) = 0;
  virtual std::unique_ptr<CatStrategy> clone() const = 0;
  // The distance this strategy guarantees, if any.
  virtual std::optional<int> guaranteed_radius() const { return std::nullopt; }
};

// What the mouse sees before committing m_i: the history through round i-1
// and the cat's strategy. `cat` is the strategy in its current state, so a
// mouse may clone it and simulate hypothetical bits. `upcoming_probe` is c_i,
// which a mouse knowing the deterministic strategy can compute from the
// history.
struct MouseObservation {
  const Graph& graph;
  int round;
  bool may_move;
  int slowness;
  Vertex current;  // m_{i-1}; 0 in round 1
  std::span<const Vertex> probes;
  std::span<const int> bits;
  const CandidateSet& candidates;  // M_{i-1}; M_1 = V in round 1
  const CatStrategy& cat;
  Vertex upcoming_probe;
};

class MouseStrategy {
 public:
  virtual ~MouseStrategy() = default;
  virtual std::string name() const = 0;
  // Returns m_i. In round 1 any vertex; otherwise a member of N[m_{i-1}], or
  // m_{i-1} itself when may_move is false.
  virtual Vertex choose(const MouseObservation& obs) = 0;
};

// Called after every round with the record and the exact M_i.
using RoundObserver = std::function<void(const RoundRecord&, const CandidateSet&)>;

// Runs rounds 1..T, stopping early only when the cat declares Done. Every
// Done claim is checked against M_i.
GameTrace play_game(const Graph& g, CatStrategy& cat, MouseStrategy& mouse, const GameConfig& cfg,
                    const RoundObserver& observer = {});

struct TraceCheck {
  bool ok = true;
  int round = 0;  // first inconsistent round
  std::string reason;
  explicit operator bool() const { return ok; }
};

// Recomputes d_i, b_i and M_i from the probes and mouse positions alone and
// compares against the recorded rounds, including move legality under the
// trace's slowness and m_i in M_i.
TraceCheck verify_trace(const GameTrace& trace, const Graph& g);

}  // namespace relloc
