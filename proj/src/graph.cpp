#include "relloc/graph.hpp"

#include <atomic>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <numeric>

namespace relloc {

class DistanceOracle {
 public:
  explicit DistanceOracle(int n)
      : tables_(std::make_unique<std::atomic<const std::vector<int>*>[]>(n + 1)),
        owned_(n + 1) {}

  std::span<const int> table(const Graph& g, Vertex source) {
    const std::vector<int>* t = tables_[source].load(std::memory_order_acquire);
    if (t == nullptr) {
      std::lock_guard lock(mutex_);
      t = tables_[source].load(std::memory_order_relaxed);
      if (t == nullptr) {
        owned_[source] = std::make_unique<const std::vector<int>>(bfs_distances(g, source));
        t = owned_[source].get();
        tables_[source].store(t, std::memory_order_release);
      }
    }
    return *t;
  }

 private:
  std::unique_ptr<std::atomic<const std::vector<int>*>[]> tables_;
  std::vector<std::unique_ptr<const std::vector<int>>> owned_;
  std::mutex mutex_;
};

Graph Graph::from_edges(int n, std::span<const Edge> edges, Layout layout) {
  if (n < 1) throw GraphError("graph must have at least one vertex");
  std::vector<std::vector<Vertex>> lists(n + 1);
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside [1," + std::to_string(n) + "]");
    }
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    lists[u].push_back(v);
    lists[v].push_back(u);
  }

  Graph g;
  g.n_ = n;
  g.layout_ = layout;
  auto offsets = std::make_shared<std::vector<std::size_t>>(n + 2, 0);
  auto adj = std::make_shared<std::vector<Vertex>>();
  for (Vertex v = 1; v <= n; ++v) {
    auto& l = lists[v];
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    (*offsets)[v] = adj->size();
    adj->insert(adj->end(), l.begin(), l.end());
    g.max_degree_ = std::max(g.max_degree_, static_cast<int>(l.size()));
  }
  (*offsets)[n + 1] = adj->size();
  g.edge_count_ = adj->size() / 2;
  g.offsets_ = std::move(offsets);
  g.adj_ = std::move(adj);
  g.oracle_ = std::make_shared<DistanceOracle>(n);

  // One traversal decides connectivity.
  const auto d = bfs_distances(g, 1);
  for (Vertex v = 1; v <= n; ++v) {
    if (d[v] < 0) throw GraphError("graph is disconnected (vertex " + std::to_string(v) +
                                   " unreachable from 1)");
  }
  return g;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  const auto& off = *offsets_;
  return {adj_->data() + off[v], off[v + 1] - off[v]};
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 1; u <= n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<Vertex> Graph::closed_neighborhood(Vertex v) const {
  auto nb = neighbors(v);
  std::vector<Vertex> out(nb.begin(), nb.end());
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

int Graph::dist(Vertex u, Vertex v) const {
  switch (layout_.kind) {
    case Layout::Kind::kPath:
      return std::abs(u - v);
    case Layout::Kind::kGrid:
      return std::abs(layout_.x_of(u) - layout_.x_of(v)) +
             std::abs(layout_.y_of(u) - layout_.y_of(v));
    case Layout::Kind::kGeneral:
      break;
  }
  return distances_from(u)[v];
}

std::span<const int> Graph::distances_from(Vertex source) const {
  if (!contains(source)) throw GraphError("vertex " + std::to_string(source) + " out of range");
  return oracle_->table(*this, source);
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> d(g.order() + 1, -1);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  d[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (d[w] < 0) {
        d[w] = d[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return d;
}

namespace {

void require_members(const Graph& g, std::span<const Vertex> members) {
  if (members.empty()) throw GraphError("radius of an empty vertex set is undefined");
  for (Vertex m : members) {
    if (!g.contains(m)) throw GraphError("vertex " + std::to_string(m) + " out of range");
  }
}

SetRadius path_radius(std::span<const Vertex> members) {
  auto [lo, hi] = std::minmax_element(members.begin(), members.end());
  const int span = *hi - *lo;
  return {(span + 1) / 2, *lo + span / 2};
}

// Manhattan metric: max_m |ux-mx|+|uy-my| is the max of four linear forms.
SetRadius grid_radius(const Graph& g, std::span<const Vertex> members) {
  const Layout& lay = g.layout();
  int smin = std::numeric_limits<int>::max(), smax = std::numeric_limits<int>::min();
  int tmin = smin, tmax = smax;
  for (Vertex m : members) {
    const int s = lay.x_of(m) + lay.y_of(m);
    const int t = lay.x_of(m) - lay.y_of(m);
    smin = std::min(smin, s);
    smax = std::max(smax, s);
    tmin = std::min(tmin, t);
    tmax = std::max(tmax, t);
  }
  SetRadius best{std::numeric_limits<int>::max(), 0};
  for (int y = 1; y <= lay.rows; ++y) {
    for (int x = 1; x <= lay.cols; ++x) {
      const int s = x + y, t = x - y;
      const int ecc = std::max(std::max(s - smin, smax - s), std::max(t - tmin, tmax - t));
      if (ecc < best.radius) best = {ecc, lay.vertex_at(x, y)};
    }
  }
  return best;
}

// In a tree the optimal centers are the middle vertices of a longest path
// between members; with odd length there are two and the smaller id wins.
SetRadius tree_radius(const Graph& g, std::span<const Vertex> members) {
  auto farthest_member = [&](const std::vector<int>& d) {
    Vertex best = members.front();
    for (Vertex m : members) {
      if (d[m] > d[best]) best = m;
    }
    return best;
  };
  const Vertex a = farthest_member(bfs_distances(g, members.front()));
  const auto from_a = bfs_distances(g, a);
  const Vertex b = farthest_member(from_a);
  const int diameter = from_a[b];

  // Walk from b toward a along strictly decreasing distance.
  Vertex v = b;
  const int lo = diameter / 2, hi = (diameter + 1) / 2;
  Vertex mid_lo = 0, mid_hi = 0;
  while (true) {
    if (from_a[v] == hi) mid_hi = v;
    if (from_a[v] == lo) {
      mid_lo = v;
      break;
    }
    for (Vertex w : g.neighbors(v)) {
      if (from_a[w] == from_a[v] - 1) {
        v = w;
        break;
      }
    }
  }
  return {hi, std::min(mid_lo, mid_hi)};
}

}  // namespace

SetRadius radius_of_set_exhaustive(const Graph& g, std::span<const Vertex> members) {
  require_members(g, members);
  SetRadius best{std::numeric_limits<int>::max(), 0};
  for (Vertex u = 1; u <= g.order(); ++u) {
    const auto d = g.distances_from(u);
    int ecc = 0;
    for (Vertex m : members) {
      ecc = std::max(ecc, d[m]);
      if (ecc >= best.radius) break;
    }
    if (ecc < best.radius) best = {ecc, u};
  }
  return best;
}

SetRadius radius_of_set(const Graph& g, std::span<const Vertex> members) {
  require_members(g, members);
  switch (g.layout().kind) {
    case Layout::Kind::kPath:
      return path_radius(members);
    case Layout::Kind::kGrid:
      return grid_radius(g, members);
    case Layout::Kind::kGeneral:
      break;
  }
  if (g.is_tree()) return tree_radius(g, members);
  return radius_of_set_exhaustive(g, members);
}

int max_distance(const Graph& g, Vertex center, std::span<const Vertex> members) {
  int out = 0;
  for (Vertex m : members) out = std::max(out, g.dist(center, m));
  return out;
}

int eccentricity(const Graph& g, Vertex v) {
  const auto d = g.distances_from(v);
  return *std::max_element(d.begin() + 1, d.end());
}

Vertex tree_center(const Graph& g) {
  if (!g.is_tree()) throw GraphError("tree_center: graph has a cycle");
  std::vector<Vertex> all(g.order());
  std::iota(all.begin(), all.end(), 1);
  return radius_of_set(g, all).center;
}

RootedTree rooted_view(const Graph& g, Vertex root) {
  if (!g.is_tree()) throw GraphError("rooted_view: graph has a cycle");
  if (!g.contains(root)) throw GraphError("rooted_view: root out of range");
  const int n = g.order();
  RootedTree t;
  t.root = root;
  t.parent.assign(n + 1, 0);
  t.children.assign(n + 1, {});
  t.height.assign(n + 1, 0);
  t.level.assign(n + 1, 0);
  t.entry.assign(n + 1, 0);
  t.exit.assign(n + 1, 0);

  // Iterative DFS; children visited in ascending order.
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  std::vector<Vertex> order;
  int clock = 0;
  t.entry[root] = clock++;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto nb = g.neighbors(v);
    if (next < nb.size()) {
      const Vertex w = nb[next++];
      if (w == t.parent[v]) continue;
      t.parent[w] = v;
      t.level[w] = t.level[v] + 1;
      t.children[v].push_back(w);
      t.entry[w] = clock++;
      stack.emplace_back(w, 0);
    } else {
      t.exit[v] = clock++;
      order.push_back(v);
      stack.pop_back();
    }
  }
  for (Vertex v : order) {  // post-order
    for (Vertex c : t.children[v]) t.height[v] = std::max(t.height[v], t.height[c] + 1);
  }
  return t;
}

SplittingEdge find_splitting_edge(const Graph& g, std::span<const Vertex> members) {
  if (members.empty()) throw GraphError("find_splitting_edge: empty vertex set");
  if (g.edge_count() == 0) throw GraphError("find_splitting_edge: graph has no edges");
  SplittingEdge best;
  bool found = false;
  for (const auto& [u, v] : g.edges()) {
    const auto du = g.distances_from(u);
    const auto dv = g.distances_from(v);
    SplittingEdge cand{{u, v}, 0, 0};
    for (Vertex m : members) {
      if (du[m] < dv[m]) ++cand.closer_to_u;
      if (du[m] > dv[m]) ++cand.closer_to_v;
    }
    if (!found || cand.min_side() > best.min_side()) {
      best = cand;
      found = true;
    }
  }
  const long long need = static_cast<long long>(members.size()) - 1;
  if (static_cast<long long>(best.min_side()) * g.max_degree() < need) {
    throw std::logic_error("find_splitting_edge: no edge meets the (|M|-1)/Delta bound");
  }
  return best;
}

}  // namespace relloc
