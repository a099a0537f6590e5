#include "distidx/invariants.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>

namespace distidx {

namespace {

// Edmonds' algorithm with explicit blossom bases: grow an alternating BFS
// forest from one exposed root, contract odd cycles onto their base, and
// augment along the first exposed vertex reached.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.order()), match_(n_, -1), parent_(n_), base_(n_) {}

  int run() {
    // Greedy start keeps the number of augmentation rounds small.
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for_each_vertex(g_.neighbors(v), [&](int u) {
        if (match_[v] == -1 && match_[u] == -1) {
          match_[v] = u;
          match_[u] = v;
        }
      });
    }
    for (int root = 0; root < n_; ++root) {
      if (match_[root] != -1) continue;
      int v = find_path(root);
      while (v != -1) {
        const int pv = parent_[v];
        const int ppv = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = ppv;
      }
    }
    int matched = 0;
    for (int v = 0; v < n_; ++v) matched += match_[v] != -1;
    return matched / 2;
  }

 private:
  int lca(int a, int b) {
    VertexSet on_path = 0;
    while (true) {
      a = base_[a];
      on_path |= bit(a);
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (on_path & bit(b)) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child, VertexSet& in_blossom) {
    while (base_[v] != b) {
      in_blossom |= bit(base_[v]) | bit(base_[match_[v]]);
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    VertexSet used = bit(root);
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      VertexSet nbrs = g_.neighbors(v);
      while (nbrs != 0) {
        const int to = lowest(nbrs);
        nbrs &= nbrs - 1;
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int b = lca(v, to);
          VertexSet in_blossom = 0;
          mark_path(v, b, to, in_blossom);
          mark_path(to, b, v, in_blossom);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom & bit(base_[i])) {
              base_[i] = b;
              if (!(used & bit(i))) {
                used |= bit(i);
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used |= bit(match_[to]);
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
};

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) : g_(g) {}

  int run() {
    expand(g_.vertices(), 0);
    return best_;
  }

 private:
  void expand(VertexSet candidates, int size) {
    if (candidates == 0) {
      best_ = std::max(best_, size);
      return;
    }
    // Cover the candidates greedily by cliques; an independent set takes at
    // most one vertex from each, so the clique index bounds what remains.
    std::array<int, kMaxOrder> order{};
    std::array<int, kMaxOrder> bound{};
    int count = 0;
    VertexSet rest = candidates;
    int cliques = 0;
    while (rest != 0) {
      ++cliques;
      VertexSet open = rest;
      while (open != 0) {
        const int v = lowest(open);
        rest &= ~bit(v);
        open &= g_.neighbors(v);
        order[count] = v;
        bound[count] = cliques;
        ++count;
      }
    }
    for (int i = count - 1; i >= 0; --i) {
      if (size + bound[i] <= best_) return;
      const int v = order[i];
      expand(candidates & ~g_.neighbors(v) & ~bit(v), size + 1);
      candidates &= ~bit(v);
    }
  }

  const Graph& g_;
  int best_ = 0;
};

bool extend_cycle(const Graph& g, int start, int at, VertexSet used,
                  int remaining) {
  if (remaining == 0) return g.has_edge(at, start);
  // Only vertices above `start` so each cycle is rooted at its minimum.
  VertexSet next = g.neighbors(at) & ~used & ~first_n(start + 1);
  while (next != 0) {
    const int v = lowest(next);
    next &= next - 1;
    if (extend_cycle(g, start, v, used | bit(v), remaining - 1)) return true;
  }
  return false;
}

}  // namespace

int matching_number(const Graph& g) { return Blossom(g).run(); }

int independence_number(const Graph& g) {
  return IndependentSetSearch(g).run();
}

std::vector<int> eccentricities(const DistanceMatrix& d) {
  const int n = d.order();
  std::vector<int> ecc(n, 0);
  for (int u = 0; u < n; ++u) {
    const auto row = d.row(u);
    ecc[u] = *std::max_element(row.begin(), row.end());
  }
  return ecc;
}

int total_eccentricity(const DistanceMatrix& d) {
  const auto ecc = eccentricities(d);
  return std::accumulate(ecc.begin(), ecc.end(), 0);
}

int diameter(const DistanceMatrix& d) {
  const auto ecc = eccentricities(d);
  return *std::max_element(ecc.begin(), ecc.end());
}

int radius(const DistanceMatrix& d) {
  const auto ecc = eccentricities(d);
  return *std::min_element(ecc.begin(), ecc.end());
}

std::vector<int> eccentricities(const Graph& g) {
  return eccentricities(DistanceMatrix(g));
}
int total_eccentricity(const Graph& g) {
  return total_eccentricity(DistanceMatrix(g));
}
int diameter(const Graph& g) { return diameter(DistanceMatrix(g)); }
int radius(const Graph& g) { return radius(DistanceMatrix(g)); }

VertexSet leaves(const Graph& g) {
  VertexSet out = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out |= bit(v);
  }
  return out;
}

bool has_cycle_of_length(const Graph& g, int length) {
  if (length < 3 || length > g.order()) return false;
  for (int s = 0; s < g.order(); ++s) {
    if (extend_cycle(g, s, s, bit(s), length - 1)) return true;
  }
  return false;
}

}  // namespace distidx
