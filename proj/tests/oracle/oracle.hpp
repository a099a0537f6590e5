#pragma once

// Slow, independent reference implementations. Nothing here calls into the
// library beyond reading a Graph's edge list.

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "distidx/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<int>>;
inline constexpr int kInf = 1 << 20;

// Plain adjacency matrix.
Matrix adjacency(const distidx::Graph& g);

// Floyd-Warshall; kInf for unreachable pairs.
Matrix floyd(const distidx::Graph& g);

std::int64_t wiener(const Matrix& d);
// Twice the hyper-Wiener index, to stay integral.
std::int64_t twice_hyper_wiener(const Matrix& d);
std::int64_t sum_power(const Matrix& d, int j);
std::int64_t eccentricity_sum(const Matrix& d);
std::int64_t external_wiener(const distidx::Graph& g, const Matrix& d);
std::int64_t terminal_wiener(const distidx::Graph& g, const Matrix& d);
std::int64_t szeged(const distidx::Graph& g, const Matrix& d);
std::int64_t weighted_szeged(const distidx::Graph& g, const Matrix& d);

// Exhaustive search.
int matching_number(const distidx::Graph& g);
int independence_number(const distidx::Graph& g);
// Two-colouring by repeated relaxation; empty pair when not bipartite.
std::pair<int, int> bipartition(const distidx::Graph& g);

// Lexicographically smallest upper-triangle bit string over all vertex
// permutations. Feasible for n <= 8.
std::string canonical_string(const distidx::Graph& g);
// Number of automorphisms, by trying every permutation.
std::int64_t automorphism_count(const distidx::Graph& g);

// Centre-rooted AHU string of a tree.
std::string tree_code(const distidx::Graph& tree);

// Free trees on n vertices from all Prufer sequences, bucketed by AHU code.
std::set<std::string> trees_by_prufer(int n);
// Free trees on n + 1 vertices obtained by hanging a leaf anywhere on the
// given trees.
std::vector<distidx::Graph> grow_trees(const std::vector<distidx::Graph>& trees);

// Connected labeled graphs on n vertices, counted over all edge subsets.
std::int64_t labeled_connected_count(int n);
// Isomorphism classes of connected graphs on n <= 6 vertices from all edge
// subsets, bucketed by canonical_string.
std::set<std::string> connected_classes(int n);

}  // namespace oracle
