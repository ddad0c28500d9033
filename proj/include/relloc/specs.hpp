#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>

#include "relloc/game.hpp"
#include "relloc/graph.hpp"

namespace relloc {

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// "kind:key=value,key=value"; "file:PATH" keeps the path whole under "path".
struct Spec {
  std::string kind;
  std::map<std::string, std::string> params;

  bool has(const std::string& key) const { return params.count(key) != 0; }
  long long integer(const std::string& key) const;
  long long integer_or(const std::string& key, long long fallback) const;
  std::uint64_t seed_or(const std::string& key, std::uint64_t fallback) const;
  double real(const std::string& key) const;
  const std::string& text(const std::string& key) const;
};

Spec parse_spec(const std::string& text);

// RELLOC_SEED if set and numeric, else 0.
std::uint64_t default_seed();

// path:n=N | grid:n=N,m=M | substar:k=K | tree:n=N,dmax=D,seed=S |
// connected:n=N,p=P,dmax=D,seed=S | file:PATH
Graph make_graph(const std::string& text, std::uint64_t seed);

// tree | grid | path | slow | random:seed=S
std::unique_ptr<CatStrategy> make_cat(const std::string& text, const Graph& g, std::uint64_t seed);

// stationary:v=V | random:seed=S | greedy | exhaustive:T=T,d=D | replay:file=PATH
// `slowness` feeds the exhaustive search.
std::unique_ptr<MouseStrategy> make_mouse(const std::string& text, std::uint64_t seed,
                                          int slowness = 1);

// The slowness a cat requires, if any (slow cat: 4 * max degree).
std::optional<int> required_slowness(const CatStrategy& cat);

}  // namespace relloc
