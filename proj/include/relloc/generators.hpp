#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "relloc/graph.hpp"

namespace relloc {

// Uniform integer in [0, bound) by rejection; stable across standard
// library implementations, unlike std::uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Uniform double in [0, 1) from the top 53 bits.
double uniform_unit(std::mt19937_64& rng);

Graph gen_path(int n);

// cols x rows grid; vertex (x, y) is (y-1)*cols + x.
Graph gen_grid(int cols, int rows);

// K_{1,k} with every edge subdivided k-1 times: hub 1, leg j occupies
// vertices 2+(j-1)k .. 1+jk ordered outward from the hub. Order 1 + k^2.
Graph gen_subdivided_star(int k);

// Each vertex t = 2..n attaches to a uniformly random earlier vertex with
// residual degree capacity.
Graph gen_random_tree(int n, int max_degree, std::uint64_t seed);

// Random tree as above, then each remaining pair (u < v) in lexicographic
// order becomes an edge with probability p if both endpoints have capacity.
Graph gen_random_connected(int n, double p, int max_degree, std::uint64_t seed);

// Every connected labeled graph on n vertices (n <= 6).
std::vector<Graph> all_connected_graphs(int n);

// One representative per isomorphism class of connected graphs (n <= 6),
// chosen as the labeling with the smallest edge mask.
std::vector<Graph> connected_graph_classes(int n);

// One representative per isomorphism class of trees on n vertices (n <= 14).
std::vector<Graph> all_free_trees(int n);

// Edge-list format: "n m" then m lines "u v", 1-indexed.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace relloc
