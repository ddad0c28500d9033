#include "relloc/cats.hpp"
#include "relloc/generators.hpp"

namespace relloc {

RandomCat::RandomCat(const Graph& g, std::uint64_t seed) : n_(g.order()), rng_(seed) {
  const Vertex c1 = draw();
  const Vertex c2 = draw();
  initial_ = {c1, c2};
}

Vertex RandomCat::draw() { return static_cast<Vertex>(uniform_below(rng_, n_)) + 1; }

CatAction RandomCat::step(const CatObservation& obs) {
  if (obs.round == 1) return Probe{initial_.second};
  return Probe{draw()};
}

}  // namespace relloc
