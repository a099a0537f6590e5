#include "distidx/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

#include "distidx/canon.hpp"
#include "distidx/graph6.hpp"
#include "distidx/invariants.hpp"

namespace distidx {

// ---------------------------------------------------------------- trees

TreeGenerator::TreeGenerator(int n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::kInvalidOrder, "trees need n >= 1");
  if (n > kMaxOrder) {
    throw Error(ErrorCode::kTooLarge,
                "tree order " + std::to_string(n) + " above cap");
  }
  levels_.resize(n);
  for (int i = 0; i < n; ++i) levels_[i] = i;
}

bool TreeGenerator::advance() {
  int p = n_ - 1;
  while (p > 0 && levels_[p] <= 1) --p;
  if (p == 0) return false;
  int q = p - 1;
  while (levels_[q] != levels_[p] - 1) --q;
  const int shift = p - q;
  for (int i = p; i < n_; ++i) levels_[i] = levels_[i - shift];
  return true;
}

bool TreeGenerator::centroid_rooted() const {
  int start = 1;
  while (start < n_) {
    int end = start + 1;
    while (end < n_ && levels_[end] > 1) ++end;
    const int size = end - start;
    if (2 * size > n_) return false;
    if (2 * size == n_) {
      // Two centroids: keep the rooting whose remaining half is not
      // smaller than the half hanging below the other centroid.
      std::vector<int> rest(levels_.begin(), levels_.begin() + start);
      rest.insert(rest.end(), levels_.begin() + end, levels_.end());
      std::vector<int> below;
      for (int i = start; i < end; ++i) below.push_back(levels_[i] - 1);
      return !(rest < below);
    }
    start = end;
  }
  return true;
}

Graph TreeGenerator::build() const {
  std::vector<Edge> edges;
  std::vector<int> last(n_, 0);
  for (int i = 1; i < n_; ++i) {
    edges.push_back({last[levels_[i] - 1], i});
    last[levels_[i]] = i;
  }
  return Graph::from_edges(n_, edges);
}

std::optional<Graph> TreeGenerator::next() {
  if (done_) return std::nullopt;
  if (started_ && !advance()) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  while (!centroid_rooted()) {
    if (!advance()) {
      done_ = true;
      return std::nullopt;
    }
  }
  return build();
}

void for_each_tree(int n, Partition part, const GraphVisitor& visit) {
  TreeGenerator gen(n);
  std::int64_t index = 0;
  while (auto t = gen.next()) {
    if (index++ % part.count == part.index) visit(*t);
  }
}

std::vector<Graph> trees(int n) {
  std::vector<Graph> out;
  for_each_tree(n, {}, [&](const Graph& g) { out.push_back(g); });
  return out;
}

// ----------------------------------------------------- connected graphs

namespace {

VertexSet non_cut_vertices(const Graph& g) {
  const VertexSet all = g.vertices();
  VertexSet out = 0;
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet rest = all & ~bit(v);
    if (rest == 0) {
      out |= bit(v);
      continue;
    }
    VertexSet seen = bit(lowest(rest));
    VertexSet frontier = seen;
    while (frontier != 0) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int u) { next |= g.neighbors(u); });
      next &= rest;
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen == rest) out |= bit(v);
  }
  return out;
}

// Isomorphism-invariant vertex key used to narrow the deletion candidates
// before any canonical labeling is computed.
std::uint64_t deletion_key(const Graph& g, int v) {
  std::uint64_t nbr_degrees = 0;
  std::uint64_t triangles = 0;
  for_each_vertex(g.neighbors(v), [&](int u) {
    nbr_degrees += g.degree(u);
    triangles += popcount(g.neighbors(u) & g.neighbors(v));
  });
  return (std::uint64_t(g.degree(v)) << 40) | (nbr_degrees << 20) | triangles;
}

// Children of a canonically labeled parent that pass the canonical-deletion
// test, deduplicated, in subset order. Children are canonically labeled.
void extend(const Graph& parent, const GraphVisitor& visit) {
  const int k = parent.order();
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  for (VertexSet s = 1; s <= first_n(k); ++s) {
    const Graph child = parent.with_vertex(s);
    const VertexSet movable = non_cut_vertices(child);
    std::uint64_t best = 0;
    for_each_vertex(movable, [&](int v) {
      best = std::max(best, deletion_key(child, v));
    });
    if (deletion_key(child, k) != best) continue;
    VertexSet candidates = 0;
    for_each_vertex(movable, [&](int v) {
      if (deletion_key(child, v) == best) candidates |= bit(v);
    });
    const auto position = canonical_labeling(child);
    if (candidates != bit(k)) {
      int chosen = -1;
      for_each_vertex(candidates, [&](int v) {
        if (chosen < 0 || position[v] > position[chosen]) chosen = v;
      });
      if (chosen != k &&
          canonical_form(child.without_vertex(chosen)).graph() != parent) {
        continue;
      }
    }
    CanonicalForm form(child.relabeled(position));
    if (seen.insert(form).second) visit(form.graph());
  }
}

void check_connected_order(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidOrder, "graphs need n >= 1");
  if (n > kMaxConnectedOrder) {
    throw Error(ErrorCode::kTooLarge,
                "built-in connected graph generation stops at n = " +
                    std::to_string(kMaxConnectedOrder) +
                    "; import graph6 for larger orders");
  }
}

}  // namespace

void for_each_connected_graph(int n, Partition part, const GraphVisitor& visit) {
  check_connected_order(n);
  std::vector<Graph> level{Graph::from_edges(1, {})};
  if (n == 1) {
    if (part.index == 0) visit(level.front());
    return;
  }
  for (int k = 1; k + 1 < n; ++k) {
    std::vector<Graph> next;
    for (const Graph& p : level) {
      extend(p, [&](const Graph& c) { next.push_back(c); });
    }
    level = std::move(next);
  }
  for (std::size_t i = part.index; i < level.size(); i += part.count) {
    extend(level[i], visit);
  }
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for_each_connected_graph(n, {}, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::int64_t count_connected_graphs(int n) {
  std::int64_t count = 0;
  for_each_connected_graph(n, {}, [&](const Graph&) { ++count; });
  return count;
}

std::vector<Graph> unicyclic_graphs(int n) {
  if (n < 3) return {};
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  std::vector<Graph> out;
  for_each_tree(n, {}, [&](const Graph& t) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (t.has_edge(u, v)) continue;
        CanonicalForm form = canonical_form(t.with_edge(u, v));
        if (seen.insert(form).second) out.push_back(form.graph());
      }
    }
  });
  return out;
}

// -------------------------------------------------------------- filters

bool Filter::accepts(const Graph& g) const {
  if (unicyclic && !is_unicyclic(g)) return false;
  if (bipartition) {
    if (!is_connected(g) || distidx::bipartition(g) != bipartition) {
      return false;
    }
  }
  if (cycle_length && !has_cycle_of_length(g, *cycle_length)) return false;
  if (min_radius && (!is_connected(g) || radius(g) < *min_radius)) {
    return false;
  }
  if (matching && matching_number(g) != *matching) return false;
  if (alpha && independence_number(g) != *alpha) return false;
  return true;
}

GraphVisitor filtered(const Filter& filter, GraphVisitor visit,
                      FilterCounts& counts) {
  return [filter, visit = std::move(visit), &counts](const Graph& g) {
    ++counts.seen;
    if (filter.accepts(g)) {
      ++counts.accepted;
      visit(g);
    }
  };
}

// -------------------------------------------------------------- sources

namespace {

class TreeSource : public GraphSource {
 public:
  explicit TreeSource(int n) : n_(n) {}
  void for_each(Partition part, const GraphVisitor& visit) const override {
    for_each_tree(n_, part, visit);
  }
  std::string name() const override { return "trees"; }

 private:
  int n_;
};

class ConnectedSource : public GraphSource {
 public:
  explicit ConnectedSource(int n) : n_(n) { check_connected_order(n); }
  void for_each(Partition part, const GraphVisitor& visit) const override {
    for_each_connected_graph(n_, part, visit);
  }
  std::string name() const override { return "builtin"; }

 private:
  int n_;
};

class ListSource : public GraphSource {
 public:
  ListSource(std::vector<Graph> graphs, std::string name)
      : graphs_(std::move(graphs)), name_(std::move(name)) {}
  void for_each(Partition part, const GraphVisitor& visit) const override {
    for (std::size_t i = part.index; i < graphs_.size(); i += part.count) {
      visit(graphs_[i]);
    }
  }
  std::string name() const override { return name_; }

 private:
  std::vector<Graph> graphs_;
  std::string name_;
};

}  // namespace

std::unique_ptr<GraphSource> tree_source(int n) {
  return std::make_unique<TreeSource>(n);
}

std::unique_ptr<GraphSource> connected_source(int n) {
  return std::make_unique<ConnectedSource>(n);
}

std::unique_ptr<GraphSource> unicyclic_source(int n) {
  return std::make_unique<ListSource>(unicyclic_graphs(n), "unicyclic");
}

std::unique_ptr<GraphSource> graph6_file_source(const std::string& path,
                                                int n) {
  std::vector<Graph> graphs = read_graph6_file(path);
  if (n != 0) {
    std::erase_if(graphs, [n](const Graph& g) { return g.order() != n; });
  }
  return std::make_unique<ListSource>(std::move(graphs), path);
}

std::unique_ptr<GraphSource> list_source(std::vector<Graph> graphs,
                                         std::string name) {
  return std::make_unique<ListSource>(std::move(graphs), std::move(name));
}

}  // namespace distidx
