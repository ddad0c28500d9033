#include "relloc/generators.hpp"

#include <fstream>
#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace relloc {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Graph gen_path(int n) {
  if (n < 1) throw GraphError("gen_path: n must be positive");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges, {Layout::Kind::kPath, n, 1});
}

Graph gen_grid(int cols, int rows) {
  if (cols < 1 || rows < 1) throw GraphError("gen_grid: dimensions must be positive");
  const Layout lay{Layout::Kind::kGrid, cols, rows};
  std::vector<Edge> edges;
  for (int y = 1; y <= rows; ++y) {
    for (int x = 1; x <= cols; ++x) {
      if (x < cols) edges.emplace_back(lay.vertex_at(x, y), lay.vertex_at(x + 1, y));
      if (y < rows) edges.emplace_back(lay.vertex_at(x, y), lay.vertex_at(x, y + 1));
    }
  }
  return Graph::from_edges(cols * rows, edges, lay);
}

Graph gen_subdivided_star(int k) {
  if (k < 2) throw GraphError("gen_subdivided_star: k must be at least 2");
  std::vector<Edge> edges;
  for (int leg = 0; leg < k; ++leg) {
    Vertex prev = 1;
    for (int step = 1; step <= k; ++step) {
      const Vertex v = 1 + leg * k + step;
      edges.emplace_back(prev, v);
      prev = v;
    }
  }
  return Graph::from_edges(1 + k * k, edges);
}

namespace {

std::vector<Edge> random_tree_edges(int n, int max_degree, std::mt19937_64& rng,
                                    std::vector<int>& degree) {
  if (n < 1) throw GraphError("random tree: n must be positive");
  if (n >= 3 && max_degree < 2) throw GraphError("random tree: max_degree < 2 forces n <= 2");
  if (n == 2 && max_degree < 1) throw GraphError("random tree: max_degree < 1");
  degree.assign(n + 1, 0);
  std::vector<Edge> edges;
  // Vertices that can still take a neighbor. Once a vertex fills up it never
  // returns, so swap-removal keeps this O(n) overall.
  std::vector<Vertex> open{1};
  for (Vertex t = 2; t <= n; ++t) {
    const auto idx = uniform_below(rng, open.size());
    const Vertex p = open[idx];
    edges.emplace_back(p, t);
    if (++degree[p] >= max_degree) {
      open[idx] = open.back();
      open.pop_back();
    }
    ++degree[t];
    if (degree[t] < max_degree) open.push_back(t);
  }
  return edges;
}

}  // namespace

Graph gen_random_tree(int n, int max_degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> degree;
  const auto edges = random_tree_edges(n, max_degree, rng, degree);
  return Graph::from_edges(n, edges);
}

Graph gen_random_connected(int n, double p, int max_degree, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw GraphError("gen_random_connected: p outside [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<int> degree;
  auto edges = random_tree_edges(n, max_degree, rng, degree);
  std::set<Edge> present;
  for (auto [u, v] : edges) present.emplace(std::min(u, v), std::max(u, v));
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (present.count({u, v})) continue;
      // Draw unconditionally so the stream does not depend on capacities.
      const bool take = uniform_unit(rng) < p;
      if (take && degree[u] < max_degree && degree[v] < max_degree) {
        edges.emplace_back(u, v);
        ++degree[u];
        ++degree[v];
      }
    }
  }
  return Graph::from_edges(n, edges);
}

std::vector<Graph> all_connected_graphs(int n) {
  if (n < 1 || n > 6) throw GraphError("all_connected_graphs: n must be in [1,6]");
  std::vector<Edge> slots;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
  }
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < slots.size(); ++b) {
      if (mask >> b & 1) edges.push_back(slots[b]);
    }
    if (edges.size() + 1 < static_cast<std::size_t>(n)) continue;
    try {
      out.push_back(Graph::from_edges(n, edges));
    } catch (const GraphError&) {
      // disconnected
    }
  }
  return out;
}

std::vector<Graph> connected_graph_classes(int n) {
  if (n < 1 || n > 6) throw GraphError("connected_graph_classes: n must be in [1,6]");
  std::vector<int> slot(n * n, -1);
  int slots = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) slot[u * n + v] = slot[v * n + u] = slots++;
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  auto mask_of = [&](const Graph& g) {
    std::uint32_t m = 0;
    for (const Edge& e : g.edges()) m |= 1u << slot[(e.first - 1) * n + (e.second - 1)];
    return m;
  };
  std::set<std::uint32_t> seen;
  std::vector<Graph> out;
  for (Graph& g : all_connected_graphs(n)) {
    const std::uint32_t m = mask_of(g);
    std::uint32_t canonical = m;
    for (const auto& p : perms) {
      std::uint32_t image = 0;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (m >> slot[u * n + v] & 1) image |= 1u << slot[p[u] * n + p[v]];
        }
      }
      canonical = std::min(canonical, image);
    }
    if (canonical == m && seen.insert(m).second) out.push_back(std::move(g));
  }
  return out;
}

namespace {

// AHU encoding of the tree rooted at v.
std::string rooted_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> parts;
  for (int w : adj[v]) {
    if (w != parent) parts.push_back(rooted_code(adj, w, v));
  }
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (const auto& p : parts) s += p;
  return s + ")";
}

// Canonical form of a free tree: the smallest code over its centers.
std::string free_code(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> deg(n);
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] <= 1) leaves.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    remaining -= static_cast<int>(leaves.size());
    for (int l : leaves) {
      for (int w : adj[l]) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    leaves = std::move(next);
  }
  std::string best;
  for (int c : leaves) {
    auto code = rooted_code(adj, c, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace

std::vector<Graph> all_free_trees(int n) {
  if (n < 1 || n > 14) throw GraphError("all_free_trees: n must be in [1,14]");
  // Grow every class by one leaf at a time and deduplicate canonically.
  std::vector<std::vector<std::vector<int>>> layer{{{}}};
  for (int size = 2; size <= n; ++size) {
    std::set<std::string> seen;
    std::vector<std::vector<std::vector<int>>> next;
    for (const auto& t : layer) {
      for (int v = 0; v < size - 1; ++v) {
        auto grown = t;
        grown.emplace_back();
        grown[v].push_back(size - 1);
        grown[size - 1].push_back(v);
        if (seen.insert(free_code(grown)).second) next.push_back(std::move(grown));
      }
    }
    layer = std::move(next);
  }
  std::vector<Graph> out;
  for (const auto& t : layer) {
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
      for (int w : t[v]) {
        if (v < w) edges.emplace_back(v + 1, w + 1);
      }
    }
    out.push_back(Graph::from_edges(n, edges));
  }
  return out;
}

Graph read_edge_list(std::istream& in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m) || n < 1 || m < 0) throw GraphError("edge list: bad header line");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) {
      throw GraphError("edge list: expected " + std::to_string(m) + " edges, read " +
                       std::to_string(i));
    }
    if (u < 1 || v < 1 || u > n || v > n) {
      throw GraphError("edge list: endpoint out of range on edge " + std::to_string(i + 1));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open edge list " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

}  // namespace relloc
