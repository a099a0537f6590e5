#include "distidx/transforms.hpp"

#include <tuple>

#include "distidx/invariants.hpp"

namespace distidx {

namespace {

// Vertices reachable from `start` without passing through `blocked`.
VertexSet side_of(const Graph& g, int start, int blocked) {
  VertexSet seen = bit(start);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
    next &= ~bit(blocked);
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

void require_tree(const Graph& g) {
  if (!is_tree(g)) throw Error(ErrorCode::kNotATree, "SPR needs a tree");
}

}  // namespace

Graph spr(const Graph& tree, Edge root_edge, int target) {
  require_tree(tree);
  const auto [root, child] = root_edge;
  const int n = tree.order();
  if (root < 0 || child < 0 || root >= n || child >= n ||
      !tree.has_edge(root, child)) {
    throw Error(ErrorCode::kNoSuchEdge, "SPR root edge is not an edge");
  }
  if (target < 0 || target >= n) {
    throw Error(ErrorCode::kIndexOutOfRange, "SPR target");
  }
  if (side_of(tree, child, root) & bit(target)) {
    throw Error(ErrorCode::kInvalidTarget,
                "target " + std::to_string(target) + " lies inside the subtree");
  }
  Graph pruned = delete_edge(tree, {root, child});
  return pruned.with_edge(target, child);
}

Graph prop1_move(const Graph& tree) {
  require_tree(tree);
  const int n = tree.order();
  VertexSet branch = 0;
  for (int v = 0; v < n; ++v) {
    if (tree.degree(v) >= 3) branch |= bit(v);
  }
  if (branch == 0) {
    throw Error(ErrorCode::kNoMoveAvailable, "a path admits no such move");
  }
  const DistanceMatrix d(tree);
  std::tuple<int, int, int> best{n, n, n};
  for_each_vertex(leaves(tree), [&](int leaf) {
    for_each_vertex(branch, [&](int w) {
      best = std::min(best, std::tuple{d(leaf, w), leaf, w});
    });
  });
  const auto [dist, leaf, w] = best;
  int moved = -1;
  for_each_vertex(tree.neighbors(w), [&](int c) {
    if (moved < 0 && !(side_of(tree, c, w) & bit(leaf))) moved = c;
  });
  return spr(tree, {w, moved}, leaf);
}

}  // namespace distidx
