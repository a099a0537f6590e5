#include "distidx/graph.hpp"

#include <algorithm>
#include <string>

namespace distidx {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidEdge: return "InvalidEdge";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kNoSuchEdge: return "NoSuchEdge";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kWeightDomainExceeded: return "WeightDomainExceeded";
    case ErrorCode::kInvalidWeight: return "InvalidWeight";
    case ErrorCode::kInvalidOrder: return "InvalidOrder";
    case ErrorCode::kInvalidMatching: return "InvalidMatching";
    case ErrorCode::kInvalidAlpha: return "InvalidAlpha";
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kInvalidTarget: return "InvalidTarget";
    case ErrorCode::kNoMoveAvailable: return "NoMoveAvailable";
    case ErrorCode::kEmptyFamily: return "EmptyFamily";
    case ErrorCode::kBadEncoding: return "BadEncoding";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kUsage: return "Usage";
  }
  return "Unknown";
}

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxOrder) {
    throw Error(ErrorCode::kInvalidOrder,
                "order " + std::to_string(n) + " outside [1, " +
                    std::to_string(kMaxOrder) + "]");
  }
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  check_order(n);
  Graph g;
  g.n_ = n;
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") on " + std::to_string(n) + " vertices");
    }
    if (u == v) {
      throw Error(ErrorCode::kInvalidEdge,
                  "self-loop at vertex " + std::to_string(u));
    }
    g.adj_[u] |= bit(v);
    g.adj_[v] |= bit(u);
  }
  return g;
}

Graph Graph::from_adjacency(std::span<const VertexSet> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  Graph g;
  g.n_ = n;
  std::copy(rows.begin(), rows.end(), g.adj_.begin());
  g.check_invariants();
  return g;
}

void Graph::check_invariants() const {
  const VertexSet all = vertices();
  for (int u = 0; u < n_; ++u) {
    if ((adj_[u] & ~all) != 0) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "adjacency of " + std::to_string(u) + " leaves 0..n-1");
    }
    if (has_edge(u, u)) {
      throw Error(ErrorCode::kInvalidEdge,
                  "self-loop at vertex " + std::to_string(u));
    }
    for_each_vertex(adj_[u], [&](int v) {
      if (!has_edge(v, u)) {
        throw Error(ErrorCode::kInvalidEdge, "asymmetric adjacency");
      }
    });
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for_each_vertex(adj_[u] & ~first_n(u + 1),
                    [&](int v) { out.push_back({u, v}); });
  }
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(n_);
  for (int v = 0; v < n_; ++v) out[v] = degree(v);
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw Error(ErrorCode::kIndexOutOfRange, "with_edge");
  }
  if (u == v) throw Error(ErrorCode::kInvalidEdge, "self-loop");
  Graph g = *this;
  g.adj_[u] |= bit(v);
  g.adj_[v] |= bit(u);
  return g;
}

Graph Graph::with_vertex(VertexSet nbrs) const {
  if (n_ + 1 > kMaxOrder) throw Error(ErrorCode::kTooLarge, "with_vertex");
  if ((nbrs & ~vertices()) != 0) {
    throw Error(ErrorCode::kIndexOutOfRange, "with_vertex");
  }
  Graph g = *this;
  g.adj_[n_] = nbrs;
  for_each_vertex(nbrs, [&](int v) { g.adj_[v] |= bit(n_); });
  g.n_ = n_ + 1;
  return g;
}

Graph Graph::without_vertex(int v) const {
  if (n_ == 1) throw Error(ErrorCode::kInvalidOrder, "cannot empty a graph");
  const VertexSet low = first_n(v);
  Graph g;
  g.n_ = n_ - 1;
  int w = 0;
  for (int u = 0; u < n_; ++u) {
    if (u == v) continue;
    const VertexSet row = adj_[u];
    g.adj_[w++] = (row & low) | ((row >> 1) & ~low);
  }
  return g;
}

Graph Graph::complement() const {
  Graph g;
  g.n_ = n_;
  const VertexSet all = vertices();
  for (int v = 0; v < n_; ++v) g.adj_[v] = all & ~adj_[v] & ~bit(v);
  return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  Graph g;
  g.n_ = n_;
  for (int u = 0; u < n_; ++u) {
    VertexSet row = 0;
    for_each_vertex(adj_[u], [&](int v) { row |= bit(perm[v]); });
    g.adj_[perm[u]] = row;
  }
  return g;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ &&
         std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

bool is_connected(const Graph& g) {
  VertexSet seen = bit(0);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertices();
}

Graph delete_edge(const Graph& g, Edge e) {
  const int n = g.order();
  if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || !g.has_edge(e.u, e.v)) {
    throw Error(ErrorCode::kNoSuchEdge, "(" + std::to_string(e.u) + "," +
                                            std::to_string(e.v) +
                                            ") is not an edge");
  }
  std::vector<Edge> kept;
  for (const Edge& f : g.edges()) {
    if (!(f.u == std::min(e.u, e.v) && f.v == std::max(e.u, e.v))) {
      kept.push_back(f);
    }
  }
  return Graph::from_edges(n, kept);
}

std::optional<std::pair<int, int>> bipartition(const Graph& g) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::kNotConnected, "bipartition");
  }
  VertexSet side[2] = {bit(0), 0};
  VertexSet frontier = bit(0);
  VertexSet seen = frontier;
  int colour = 0;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
    if ((next & side[colour]) != 0) return std::nullopt;
    colour ^= 1;
    frontier = next & ~seen;
    side[colour] |= frontier;
    seen |= next;
  }
  const int a = popcount(side[0]);
  const int b = popcount(side[1]);
  return std::pair{std::min(a, b), std::max(a, b)};
}

DistanceMatrix::DistanceMatrix(const Graph& g)
    : n_(g.order()), dist_(static_cast<std::size_t>(n_) * n_, 0) {
  const VertexSet all = g.vertices();
  for (int s = 0; s < n_; ++s) {
    std::uint8_t* row = dist_.data() + s * n_;
    VertexSet seen = bit(s);
    VertexSet frontier = seen;
    std::uint8_t d = 0;
    while (frontier != 0) {
      ++d;
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
      frontier = next & ~seen;
      seen |= frontier;
      for_each_vertex(frontier, [&](int v) { row[v] = d; });
    }
    if (seen != all) {
      throw Error(ErrorCode::kNotConnected, "distances need a connected graph");
    }
  }
}

}  // namespace distidx
