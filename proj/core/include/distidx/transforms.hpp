#pragma once

#include "distidx/graph.hpp"

namespace distidx {

// Subtree prune and regraft on a tree. The subtree S is `child` together
// with everything below it when the tree hangs from `root` (the edge
// root-child must exist); S minus its root is removed and a copy is hung
// from `target`, i.e. the edge root-child becomes target-child.
//
// Throws kNotATree, kNoSuchEdge when root-child is not an edge, and
// kInvalidTarget when target lies in the pruned part.
Graph spr(const Graph& tree, Edge root_edge, int target);

// The rearrangement used to show that the maximum W_f over trees with
// matching number m grows with m: take the leaf l and branch vertex w
// (degree >= 3) at minimum distance, then move the lowest-index branch of w
// not containing l so that it hangs from l. Ties go to the lowest
// (distance, leaf, branch vertex) triple.
//
// Throws kNotATree, and kNoMoveAvailable for paths.
Graph prop1_move(const Graph& tree);

}  // namespace distidx
