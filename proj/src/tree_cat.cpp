#include <algorithm>

#include "relloc/cats.hpp"

namespace relloc {

TreeCat::TreeCat(const Graph& tree, int max_degree) : max_degree_(max_degree) {
  if (!tree.is_tree()) throw GraphError("tree cat: graph is not a tree");
  if (max_degree < 2) throw GraphError("tree cat: maximum degree must be at least 2");
  if (tree.max_degree() > max_degree) {
    throw GraphError("tree cat: tree has degree " + std::to_string(tree.max_degree()) +
                     " > " + std::to_string(max_degree));
  }
  tree_ = std::make_shared<const RootedTree>(rooted_view(tree, tree_center(tree)));
  local_root_ = tree_->root;
  advance(0);
  first_pair_ = pair_;
}

int TreeCat::round_bound() const {
  const int h = tree_->height[tree_->root];
  return 2 * std::max(0, h - radius_bound()) * (2 * max_degree_ - 2);
}

std::pair<Vertex, Vertex> TreeCat::initial_pair() const {
  if (first_pair_) return {first_pair_->first, first_pair_->second};
  return {tree_->root, tree_->root};
}

void TreeCat::advance(int completed) {
  while (true) {
    switch (phase_) {
      case Phase::kOuterStart:
        outer_starts_.push_back({completed, local_root_});
        if (tree_->height[local_root_] <= radius_bound()) {
          phase_ = Phase::kFinished;
          return;
        }
        siblings_ = tree_->children[local_root_];
        phase_ = Phase::kSiblings;
        break;
      case Phase::kSiblings:
        if (siblings_.size() >= 2) {
          pair_ = PendingPair{PairKind::kSiblings, siblings_[0], siblings_[1]};
          return;
        }
        // T_r is deeper than the bound, so r has at least one child.
        survivor_ = siblings_.front();
        children_ = tree_->children[survivor_];
        phase_ = Phase::kChildren;
        break;
      case Phase::kChildren:
        if (!children_.empty()) {
          pair_ = PendingPair{PairKind::kChild, children_.front(), local_root_};
          return;
        }
        phase_ = Phase::kFinished;
        return;
      case Phase::kFinished:
        return;
    }
  }
}

void TreeCat::apply_bit(int bit, int round) {
  const PendingPair p = *pair_;
  pair_.reset();
  if (p.kind == PairKind::kSiblings) {
    // Siblings share the neighbor r; the bit rules out one subtree.
    const Vertex out = bit == 1 ? p.first : p.second;
    siblings_.erase(std::find(siblings_.begin(), siblings_.end(), out));
    facts_.push_back({round, out, local_root_});
    return;
  }
  if (bit == 1) {
    children_.erase(children_.begin());
    facts_.push_back({round, p.first, survivor_});
  } else {
    facts_.push_back({round, local_root_, survivor_});
    local_root_ = survivor_;
    phase_ = Phase::kOuterStart;
  }
}

CatAction TreeCat::step(const CatObservation& obs) {
  if (phase_ == Phase::kFinished) return Done{local_root_, radius_bound()};
  if (!pair_half_done_) {
    pair_half_done_ = true;
    return Probe{pair_->second};
  }
  pair_half_done_ = false;
  apply_bit(obs.bit(obs.round), obs.round);
  advance(obs.round);
  if (phase_ == Phase::kFinished) return Done{local_root_, radius_bound()};
  return Probe{pair_->first};
}

}  // namespace relloc
