#include "distidx/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>

#include "distidx/invariants.hpp"

namespace distidx {

namespace {

void require_order(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kInvalidOrder, what);
}

// A constructor that fails its own certificate is a bug, not bad input.
void certify(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("certificate failed: " + what);
}

class EdgeList {
 public:
  void add(int u, int v) { edges_.push_back({u, v}); }
  void add_path(int from, int first, int count) {
    int prev = from;
    for (int i = 0; i < count; ++i) {
      add(prev, first + i);
      prev = first + i;
    }
  }
  void add_clique(int first, int count) {
    for (int i = 0; i < count; ++i) {
      for (int j = i + 1; j < count; ++j) add(first + i, first + j);
    }
  }
  Graph build(int n) const { return Graph::from_edges(n, edges_); }

 private:
  std::vector<Edge> edges_;
};

Graph complement_of_matching_plus(int pairs, int tail) {
  // tail: 0 -> nothing, 1 -> K_1, 3 -> P_3.
  const int n = 2 * pairs + tail;
  EdgeList el;
  for (int i = 0; i < pairs; ++i) el.add(2 * i, 2 * i + 1);
  if (tail == 3) {
    el.add(2 * pairs, 2 * pairs + 1);
    el.add(2 * pairs + 1, 2 * pairs + 2);
  }
  return el.build(n).complement();
}

}  // namespace

Graph path(int n) {
  require_order(n >= 1, "path needs n >= 1");
  EdgeList el;
  el.add_path(0, 1, n - 1);
  return el.build(n);
}

Graph cycle(int n) {
  require_order(n >= 3, "cycle needs n >= 3");
  EdgeList el;
  el.add_path(0, 1, n - 1);
  el.add(n - 1, 0);
  return el.build(n);
}

Graph star(int n) {
  require_order(n >= 2, "star needs n >= 2");
  return complete_bipartite(1, n - 1);
}

Graph complete(int n) {
  require_order(n >= 1, "complete graph needs n >= 1");
  EdgeList el;
  el.add_clique(0, n);
  return el.build(n);
}

Graph complete_bipartite(int p, int q) {
  require_order(p >= 1 && q >= 1, "complete bipartite needs p, q >= 1");
  EdgeList el;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) el.add(i, p + j);
  }
  return el.build(p + q);
}

Graph double_broom(int k, int a, int b) {
  require_order(k >= 1 && a >= 0 && b >= 0,
                "double broom needs k >= 1 and a, b >= 0");
  EdgeList el;
  el.add_path(0, 1, k - 1);
  int next = k;
  for (int i = 0; i < a; ++i) el.add(0, next++);
  for (int i = 0; i < b; ++i) el.add(k - 1, next++);
  return el.build(next);
}

Graph a_nm(int n, int m) {
  if (m < 1 || 2 * m > n) {
    throw Error(ErrorCode::kInvalidMatching,
                "m = " + std::to_string(m) + " outside [1, " +
                    std::to_string(n / 2) + "]");
  }
  Graph g;
  if (n == 2 * m) {
    g = path(n);
  } else {
    const int leaves = n - (2 * m - 1);
    g = double_broom(2 * m - 1, (leaves + 1) / 2, leaves / 2);
  }
  certify(g.order() == n && matching_number(g) == m, "a_nm matching number");
  return g;
}

Graph dumbbell(int n, int alpha) {
  if (alpha < 2 || 2 * alpha >= n) {
    throw Error(ErrorCode::kInvalidAlpha,
                "alpha = " + std::to_string(alpha) + " needs 2 <= alpha < " +
                    std::to_string(n) + "/2");
  }
  const int left = (n + 1) / 2 - alpha + 2;
  const int right = n / 2 - alpha + 2;
  const int inner = 2 * alpha - 4;
  EdgeList el;
  el.add_clique(0, left);
  el.add_clique(left + inner, right);
  // Path of length 2*alpha-3 from left attachment to right attachment.
  el.add_path(left - 1, left, inner);
  el.add(inner == 0 ? left - 1 : left + inner - 1, left + inner);
  Graph g = el.build(n);
  certify(independence_number(g) == alpha, "dumbbell independence number");
  certify(diameter(g) == 2 * alpha - 1, "dumbbell diameter");
  return g;
}

Graph g4(int a, int b, int c) {
  require_order(a >= 0 && b >= 0 && c >= 0, "g4 needs a, b, c >= 0");
  EdgeList el;
  el.add_path(0, 1, 3);
  el.add(3, 0);
  el.add_path(0, 4, c);
  const int tip = c == 0 ? 0 : 3 + c;
  int next = 4 + c;
  for (int i = 0; i < a; ++i) el.add(tip, next++);
  for (int i = 0; i < b; ++i) el.add(2, next++);
  Graph g = el.build(next);
  certify(is_unicyclic(g) && bipartition(g).has_value(),
          "g4 unicyclic bipartite");
  return g;
}

Graph cycle_with_path(int k, int n) {
  require_order(k >= 2 && n >= 2 * k, "cycle_with_path needs n >= 2k >= 4");
  EdgeList el;
  el.add_path(0, 1, 2 * k - 1);
  el.add(2 * k - 1, 0);
  el.add_path(0, 2 * k, n - 2 * k);
  return el.build(n);
}

Graph subdivided_star(int n) {
  require_order(n >= 4, "subdivided star needs n >= 4");
  EdgeList el;
  for (int leaf = 1; leaf <= n - 3; ++leaf) el.add(0, leaf);
  el.add(0, n - 2);
  el.add(n - 2, n - 1);
  return el.build(n);
}

Graph diamond_with_pendant() {
  // 1-3 is the chord; 0 and 2 have degree 2 in the diamond.
  return Graph::from_edges(5, {{0, 1}, {0, 3}, {1, 2}, {2, 3}, {1, 3}, {2, 4}});
}

std::vector<Graph> min_we_extremal_family(int n) {
  require_order(n >= 4, "minimum W - eccentricity family needs n >= 4");
  std::vector<Graph> out;
  if (n % 2 == 0) {
    out.push_back(complement_of_matching_plus(n / 2, 0));
  } else {
    out.push_back(complement_of_matching_plus((n - 1) / 2, 1));
    out.push_back(complement_of_matching_plus((n - 3) / 2, 3));
  }
  if (n == 4) out.push_back(path(4));
  if (n == 5) out.push_back(diamond_with_pendant());
  return out;
}

std::vector<Graph> balanced_double_brooms(int n) {
  require_order(n >= 1, "balanced double brooms need n >= 1");
  if (n <= 2) return {path(n)};
  std::vector<Graph> out{star(n)};
  for (int spine = 2; spine <= n - 2; ++spine) {
    const int leaves = n - spine;
    out.push_back(double_broom(spine, (leaves + 1) / 2, leaves / 2));
  }
  return out;
}

std::optional<std::pair<int, int>> double_broom_ends(const Graph& g) {
  if (!is_tree(g)) return std::nullopt;
  const int n = g.order();
  if (n <= 2) return std::pair{0, 0};
  const VertexSet leaf = leaves(g);
  const VertexSet spine = g.vertices() & ~leaf;
  if (popcount(spine) == 1) {
    const int l = popcount(leaf);
    return std::pair{(l + 1) / 2, l / 2};
  }
  std::vector<int> ends;
  bool ok = true;
  for_each_vertex(spine, [&](int v) {
    const int spine_deg = popcount(g.neighbors(v) & spine);
    const int leaf_deg = popcount(g.neighbors(v) & leaf);
    if (spine_deg > 2) ok = false;
    if (spine_deg == 1) {
      ends.push_back(leaf_deg);
    } else if (leaf_deg != 0) {
      ok = false;
    }
  });
  if (!ok || ends.size() != 2) return std::nullopt;
  return std::pair{std::max(ends[0], ends[1]), std::min(ends[0], ends[1])};
}

bool is_double_broom(const Graph& g) { return double_broom_ends(g).has_value(); }

bool is_balanced_double_broom(const Graph& g) {
  const auto ends = double_broom_ends(g);
  return ends && ends->first - ends->second <= 1;
}

}  // namespace distidx
