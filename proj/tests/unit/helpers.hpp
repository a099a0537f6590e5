#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "distidx/graph.hpp"

namespace testing_helpers {

// Random connected graph: a random spanning tree plus extra edges with
// probability p.
inline distidx::Graph random_connected(int n, double p, std::mt19937& rng) {
  std::vector<distidx::Edge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.push_back({pick(rng), v});
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return distidx::Graph::from_edges(n, edges);
}

inline distidx::Graph random_tree(int n, std::mt19937& rng) {
  return random_connected(n, 0.0, rng);
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace testing_helpers
