#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "distidx/error.hpp"

namespace distidx {

// Vertex sets are single machine words; this caps the order of every graph.
inline constexpr int kMaxOrder = 64;

using VertexSet = std::uint64_t;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

inline constexpr VertexSet first_n(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int popcount(VertexSet s) { return std::popcount(s); }

inline int lowest(VertexSet s) { return std::countr_zero(s); }

// Calls fn(v) for every vertex in s, in increasing order.
template <typename Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s != 0) {
    const int v = std::countr_zero(s);
    s &= s - 1;
    fn(v);
  }
}

struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1 with one adjacency word per
// vertex. Instances are immutable; the mutating helpers return new graphs.
class Graph {
 public:
  Graph() = default;

  // Throws kInvalidOrder for n outside [1, kMaxOrder], kIndexOutOfRange for
  // endpoints >= n and kInvalidEdge for self-loops. Duplicates collapse.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  // Adjacency rows must already be symmetric and loop-free (checked).
  static Graph from_adjacency(std::span<const VertexSet> rows);

  int order() const { return n_; }
  VertexSet vertices() const { return first_n(n_); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int edge_count() const;

  // Sorted (u < v) edge list.
  std::vector<Edge> edges() const;
  std::vector<int> degrees() const;

  Graph with_edge(int u, int v) const;
  // Appends vertex n adjacent to `nbrs`.
  Graph with_vertex(VertexSet nbrs) const;
  // Removes vertex v; vertices above v shift down by one.
  Graph without_vertex(int v) const;
  Graph complement() const;
  // perm[v] is the new label of vertex v.
  Graph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_invariants() const;

  int n_ = 0;
  std::array<VertexSet, kMaxOrder> adj_{};
};

bool is_connected(const Graph& g);

// Same vertex set with e removed; throws kNoSuchEdge if e is not an edge.
Graph delete_edge(const Graph& g, Edge e);

// Sizes (p, q), p <= q, of the two colour classes; empty when g has an odd
// cycle. Throws kNotConnected.
std::optional<std::pair<int, int>> bipartition(const Graph& g);

// BFS hop counts of a connected graph. Entries fit a byte since n <= 64.
class DistanceMatrix {
 public:
  // Throws kNotConnected.
  explicit DistanceMatrix(const Graph& g);

  int order() const { return n_; }
  int operator()(int u, int v) const { return dist_[u * n_ + v]; }
  std::span<const std::uint8_t> row(int u) const {
    return {dist_.data() + u * n_, static_cast<std::size_t>(n_)};
  }

 private:
  int n_ = 0;
  std::vector<std::uint8_t> dist_;
};

inline DistanceMatrix distances(const Graph& g) { return DistanceMatrix(g); }

}  // namespace distidx
