#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "distidx/graph.hpp"

namespace distidx {

// Standard graphs; path and cycle use consecutive labels. Each throws
// kInvalidOrder for orders it cannot realise.
Graph path(int n);
Graph cycle(int n);                        // n >= 3
Graph star(int n);                         // K_{1,n-1}, n >= 2
Graph complete(int n);
Graph complete_bipartite(int p, int q);    // parts 0..p-1 and p..p+q-1

// Path v_0..v_{k-1} with `a` pendant leaves on v_0 and `b` on v_{k-1}.
// k = 1 degenerates to the star K_{1,a+b}.
Graph double_broom(int k, int a, int b);

// Balanced double broom on a (2m-1)-vertex spine with n-(2m-1) leaves, or
// P_n when n = 2m. Certifies matching_number == m (kInvalidMatching for m
// outside [1, n/2]).
Graph a_nm(int n, int m);

// Cliques of orders ceil(n/2)-alpha+2 and floor(n/2)-alpha+2 whose attachment
// vertices are joined by a path of length 2*alpha-3. Certifies the
// independence number and diameter 2*alpha-1. kInvalidAlpha unless
// 2 <= alpha < n/2.
Graph dumbbell(int n, int alpha);

// Unicyclic graph on C_4 = v0 v1 v2 v3: a path of c vertices hangs from v0,
// its far end (v0 itself when c = 0) carries `a` pendant leaves, and v2
// carries `b` pendant leaves. n = 4 + a + b + c.
Graph g4(int a, int b, int c);

// C_{2k} with a pendant path of n-2k vertices at one cycle vertex.
Graph cycle_with_path(int k, int n);

// K_{1,n-2} with one edge subdivided once; n >= 4.
Graph subdivided_star(int n);

// Diamond K_4 - e with a pendant vertex on one of its degree-2 vertices.
Graph diamond_with_pendant();

// Graphs attaining the minimum of W - eccentricity for order n >= 4:
// complement of (n/2)K_2, or for odd n the complements of
// ((n-1)/2)K_2 + K_1 and ((n-3)/2)K_2 + P_3; plus P_4 (n = 4) and the
// diamond with pendant (n = 5).
std::vector<Graph> min_we_extremal_family(int n);

// Every balanced double broom of order n, one graph per isomorphism class
// (stars and paths included).
std::vector<Graph> balanced_double_brooms(int n);

// Leaf counts (larger first) at the two ends of the spine when g is a double
// broom: a tree whose non-leaves induce a path with every leaf hanging from
// one of its ends. A star counts, with its leaves split evenly.
std::optional<std::pair<int, int>> double_broom_ends(const Graph& g);
bool is_double_broom(const Graph& g);
// Double broom whose end leaf counts differ by at most one.
bool is_balanced_double_broom(const Graph& g);

}  // namespace distidx
