#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace relloc {

// Vertices are 1-indexed: a graph of order n has vertices 1..n.
using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Optional geometric layout recorded by the generators. Distances on paths
// and grids are answered in closed form instead of by BFS.
//   Path: vertex v sits at x = v.
//   Grid: columns x in [1, cols], rows y in [1, rows], v = (y-1)*cols + x.
struct Layout {
  enum class Kind { kGeneral, kPath, kGrid };
  Kind kind = Kind::kGeneral;
  int cols = 0;
  int rows = 0;

  int x_of(Vertex v) const { return (v - 1) % cols + 1; }
  int y_of(Vertex v) const { return (v - 1) / cols + 1; }
  Vertex vertex_at(int x, int y) const { return (y - 1) * cols + x; }
};

class DistanceOracle;

// Immutable, connected, simple, undirected graph. Copies share the same
// adjacency storage and distance cache.
class Graph {
 public:
  // Builds from a 1-indexed edge list. Duplicate edges (in either
  // orientation) are dropped. Throws GraphError on loops, out-of-range
  // endpoints, n < 1, or a disconnected result.
  static Graph from_edges(int n, std::span<const Edge> edges, Layout layout = {});

  int order() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const { return max_degree_; }
  bool is_tree() const { return edge_count_ + 1 == static_cast<std::size_t>(n_); }
  bool contains(Vertex v) const { return v >= 1 && v <= n_; }
  const Layout& layout() const { return layout_; }

  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  // Closed neighborhood N[v], ascending.
  std::vector<Vertex> closed_neighborhood(Vertex v) const;

  int dist(Vertex u, Vertex v) const;

  // Full distance table from `source`, indexed by vertex (slot 0 unused).
  // Materialized once per source and cached for the graph's lifetime;
  // safe to call concurrently.
  std::span<const int> distances_from(Vertex source) const;

 private:
  Graph() = default;

  int n_ = 0;
  std::size_t edge_count_ = 0;
  int max_degree_ = 0;
  Layout layout_;
  // CSR adjacency: neighbors of v are adj_[offsets_[v] .. offsets_[v+1]).
  std::shared_ptr<const std::vector<std::size_t>> offsets_;
  std::shared_ptr<const std::vector<Vertex>> adj_;
  std::shared_ptr<DistanceOracle> oracle_;
};

// Single-source BFS without touching the cache. Slot 0 unused.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

struct SetRadius {
  int radius = 0;
  Vertex center = 0;  // smallest vertex id achieving the radius
};

// min over u in V(G) of max over m in M of dist(u, m). The center ranges over
// all vertices, not only M. Throws GraphError on empty M.
SetRadius radius_of_set(const Graph& g, std::span<const Vertex> members);

// Plain O(n * |M|) evaluation of radius_of_set over cached BFS tables.
SetRadius radius_of_set_exhaustive(const Graph& g, std::span<const Vertex> members);

// max over m in M of dist(center, m).
int max_distance(const Graph& g, Vertex center, std::span<const Vertex> members);

int eccentricity(const Graph& g, Vertex v);

// Minimum-eccentricity vertex of a tree, smaller id on ties.
Vertex tree_center(const Graph& g);

struct RootedTree {
  Vertex root = 0;
  std::vector<Vertex> parent;                 // parent[root] == 0
  std::vector<std::vector<Vertex>> children;  // ascending
  std::vector<int> height;                    // depth of T_v below v
  std::vector<int> level;                     // distance from root
  std::vector<int> entry, exit;               // DFS interval, for subtree tests

  bool in_subtree(Vertex v, Vertex subtree_root) const {
    return entry[subtree_root] <= entry[v] && exit[v] <= exit[subtree_root];
  }
};

RootedTree rooted_view(const Graph& g, Vertex root);

struct SplittingEdge {
  Edge edge;
  // |{m : dist(u,m) < dist(v,m)}| and |{m : dist(u,m) > dist(v,m)}|.
  int closer_to_u = 0;
  int closer_to_v = 0;
  int min_side() const { return std::min(closer_to_u, closer_to_v); }
};

// Exhaustive search over edges for the one maximizing the smaller strict
// side; the first maximizer in edge order wins. Throws std::logic_error if the
// result violates min_side * max_degree >= |M| - 1.
SplittingEdge find_splitting_edge(const Graph& g, std::span<const Vertex> members);

}  // namespace relloc
