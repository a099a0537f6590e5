#pragma once

#include <vector>

#include "distidx/graph.hpp"

namespace distidx {

// Maximum matching size via Edmonds' blossom contraction. Any graph.
int matching_number(const Graph& g);

// Exact independence number; branch and bound with a greedy clique-cover
// bound. Any graph.
int independence_number(const Graph& g);

std::vector<int> eccentricities(const DistanceMatrix& d);
int total_eccentricity(const DistanceMatrix& d);
int diameter(const DistanceMatrix& d);
int radius(const DistanceMatrix& d);

// Throw kNotConnected on disconnected input.
std::vector<int> eccentricities(const Graph& g);
int total_eccentricity(const Graph& g);
int diameter(const Graph& g);
int radius(const Graph& g);

VertexSet leaves(const Graph& g);
inline int leaf_count(const Graph& g) { return popcount(leaves(g)); }

inline bool is_tree(const Graph& g) {
  return g.edge_count() == g.order() - 1 && is_connected(g);
}

// Connected with exactly one cycle.
inline bool is_unicyclic(const Graph& g) {
  return g.edge_count() == g.order() && is_connected(g);
}

// True when g has a simple cycle of exactly `length` vertices.
bool has_cycle_of_length(const Graph& g, int length);

}  // namespace distidx
