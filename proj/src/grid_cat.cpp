#include <algorithm>
#include <limits>

#include "relloc/cats.hpp"

namespace relloc {

Box bounding_box(const Layout& layout, std::span<const Vertex> members) {
  int xlo = std::numeric_limits<int>::max(), xhi = std::numeric_limits<int>::min();
  int ylo = xlo, yhi = xhi;
  for (Vertex v : members) {
    xlo = std::min(xlo, layout.x_of(v));
    xhi = std::max(xhi, layout.x_of(v));
    ylo = std::min(ylo, layout.y_of(v));
    yhi = std::max(yhi, layout.y_of(v));
  }
  return {xlo, ylo, xhi - xlo, yhi - ylo};
}

namespace {

int probe_offset(int extent) { return extent % 2 == 0 ? extent / 2 - 1 : (extent - 1) / 2; }

}  // namespace

GridCat::GridCat(const Graph& grid) : layout_(grid.layout()) {
  if (layout_.kind != Layout::Kind::kGrid) throw GraphError("grid cat: graph is not a grid");
  box_ = {1, 1, layout_.cols - 1, layout_.rows - 1};
  if (!done_for_box()) plan_block();
}

std::pair<Vertex, Vertex> GridCat::initial_pair() const {
  if (block_.empty()) {
    const Done d = *done_for_box();
    return {d.center, d.center};
  }
  return {block_[0], block_[1]};
}

std::optional<Done> GridCat::done_for_box() const {
  if (box_.radius() > kRadius) return std::nullopt;
  return Done{layout_.vertex_at(box_.x + box_.dx / 2, box_.y + box_.dy / 2), kRadius};
}

void GridCat::plan_block() {
  swapped_ = box_.dx == 9 && box_.dy == 7;
  const int x = box_.x + probe_offset(box_.dx);
  const int y = box_.y + probe_offset(box_.dy);
  auto at = [&](int px, int py) {
    return layout_.vertex_at(std::clamp(px, 1, layout_.cols), std::clamp(py, 1, layout_.rows));
  };
  if (swapped_) {
    block_ = {at(x, y), at(x, y + 2), at(x + 2, y + 2)};
  } else {
    block_ = {at(x, y), at(x + 2, y), at(x + 2, y + 2)};
  }
  next_in_block_ = 0;
}

CatAction GridCat::step(const CatObservation& obs) {
  if (block_.empty()) return *done_for_box();
  ++next_in_block_;
  if (next_in_block_ < block_.size()) return Probe{block_[next_in_block_]};

  const Box before = box_;
  box_ = bounding_box(layout_, obs.candidates.members());
  blocks_.push_back({obs.round, before, box_, swapped_});
  if (auto d = done_for_box()) {
    block_.clear();
    return *d;
  }
  plan_block();
  return Probe{block_[0]};
}

}  // namespace relloc
