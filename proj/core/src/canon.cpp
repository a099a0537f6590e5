#include "distidx/canon.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>

namespace distidx {

namespace {

// Ordered partition of the vertex set. Cell order is part of the state: the
// refinement only ever looks at cell positions and neighbour counts, never
// at vertex labels, so isomorphic inputs walk isomorphic search trees.
struct OrderedPartition {
  std::array<VertexSet, kMaxOrder> cells{};
  int count = 0;

  void replace(int at, const VertexSet* pieces, int num) {
    std::copy_backward(cells.begin() + at + 1, cells.begin() + count,
                       cells.begin() + count + num - 1);
    std::copy(pieces, pieces + num, cells.begin() + at);
    count += num - 1;
  }
};

// Splits cells by neighbour counts into each splitter cell until stable.
void refine(const Graph& g, OrderedPartition& p) {
  const int n = g.order();
  bool changed = true;
  while (changed && p.count < n) {
    changed = false;
    for (int w = 0; w < p.count && p.count < n; ++w) {
      const VertexSet splitter = p.cells[w];
      for (int x = 0; x < p.count; ++x) {
        const VertexSet cell = p.cells[x];
        if ((cell & (cell - 1)) == 0) continue;
        std::array<VertexSet, kMaxOrder + 1> by_count{};
        int lo = kMaxOrder;
        int hi = 0;
        for_each_vertex(cell, [&](int v) {
          const int c = popcount(g.neighbors(v) & splitter);
          by_count[c] |= bit(v);
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        });
        if (lo == hi) continue;
        std::array<VertexSet, kMaxOrder> pieces{};
        int num = 0;
        for (int c = lo; c <= hi; ++c) {
          if (by_count[c] != 0) pieces[num++] = by_count[c];
        }
        p.replace(x, pieces.data(), num);
        x += num - 1;
        changed = true;
      }
    }
  }
}

using Code = std::array<VertexSet, kMaxOrder>;
using Perm = std::array<std::int8_t, kMaxOrder>;

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {
    for (int v = 0; v < n_; ++v) {
      for (int u = 0; u < n_; ++u) {
        if (u != v && (g.neighbors(u) & ~bit(v)) == (g.neighbors(v) & ~bit(u))) {
          twins_[v] |= bit(u);
        }
      }
    }
  }

  std::vector<int> run() {
    OrderedPartition root;
    root.cells[0] = g_.vertices();
    root.count = 1;
    visit(root);
    std::vector<int> position(n_);
    for (int i = 0; i < n_; ++i) position[best_lab_[i]] = i;
    return position;
  }

 private:
  static constexpr std::size_t kMaxStoredAutomorphisms = 64;

  void visit(OrderedPartition p) {
    refine(g_, p);
    if (p.count == n_) {
      leaf(p);
      return;
    }
    int target = 0;
    while ((p.cells[target] & (p.cells[target] - 1)) == 0) ++target;
    const VertexSet cell = p.cells[target];
    VertexSet tried = 0;
    VertexSet rest = cell;
    while (rest != 0) {
      const int v = lowest(rest);
      rest &= rest - 1;
      if ((twins_[v] & tried) != 0 || equivalent_to_tried(v, tried)) continue;
      tried |= bit(v);
      OrderedPartition child = p;
      const VertexSet pieces[2] = {bit(v), cell & ~bit(v)};
      child.replace(target, pieces, 2);
      fixed_.push_back(v);
      visit(child);
      fixed_.pop_back();
    }
  }

  // True when some stored automorphism fixing the current prefix pointwise
  // maps v into the orbit of an already explored sibling.
  bool equivalent_to_tried(int v, VertexSet tried) const {
    if (automorphisms_.empty() || tried == 0) return false;
    std::array<int, kMaxOrder> root{};
    std::iota(root.begin(), root.begin() + n_, 0);
    auto find = [&](int x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    bool any = false;
    for (const Perm& gamma : automorphisms_) {
      bool fixes = true;
      for (int f : fixed_) {
        if (gamma[f] != f) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) {
        const int a = find(x);
        const int b = find(gamma[x]);
        if (a != b) root[a] = b;
      }
    }
    if (!any) return false;
    const int rv = find(v);
    bool hit = false;
    for_each_vertex(tried, [&](int u) { hit = hit || find(u) == rv; });
    return hit;
  }

  void leaf(const OrderedPartition& p) {
    std::array<int, kMaxOrder> lab{};
    std::array<int, kMaxOrder> pos{};
    for (int i = 0; i < n_; ++i) {
      lab[i] = lowest(p.cells[i]);
      pos[lab[i]] = i;
    }
    Code code{};
    for (int i = 0; i < n_; ++i) {
      VertexSet row = 0;
      for_each_vertex(g_.neighbors(lab[i]),
                      [&](int u) { row |= bit(n_ - 1 - pos[u]); });
      code[i] = row;
    }
    const auto cmp = std::lexicographical_compare_three_way(
        code.begin(), code.begin() + n_, best_.begin(), best_.begin() + n_);
    if (!have_best_ || cmp > 0) {
      have_best_ = true;
      best_ = code;
      best_lab_ = lab;
    } else if (cmp == 0 && automorphisms_.size() < kMaxStoredAutomorphisms) {
      Perm gamma{};
      for (int i = 0; i < n_; ++i) {
        gamma[best_lab_[i]] = static_cast<std::int8_t>(lab[i]);
      }
      automorphisms_.push_back(gamma);
    }
  }

  const Graph& g_;
  int n_;
  std::array<VertexSet, kMaxOrder> twins_{};
  std::vector<int> fixed_;
  std::vector<Perm> automorphisms_;
  bool have_best_ = false;
  Code best_{};
  std::array<int, kMaxOrder> best_lab_{};
};

}  // namespace

std::size_t CanonicalForm::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(order());
  for (int v = 0; v < order(); ++v) {
    h ^= graph_.neighbors(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const CanonicalForm& a,
                                 const CanonicalForm& b) {
  if (auto c = a.order() <=> b.order(); c != 0) return c;
  for (int v = 0; v < a.order(); ++v) {
    if (auto c = a.graph_.neighbors(v) <=> b.graph_.neighbors(v); c != 0) {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

std::vector<int> canonical_labeling(const Graph& g) {
  return CanonSearch(g).run();
}

CanonicalForm canonical_form(const Graph& g) {
  const auto position = canonical_labeling(g);
  return CanonicalForm(g.relabeled(position));
}

}  // namespace distidx
