#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "distidx/graph.hpp"

namespace distidx {

// Order cap for the built-in connected graph generator.
inline constexpr int kMaxConnectedOrder = 9;

// One slice of a generation stream. Slices of the same stream are disjoint,
// cover it, and may be consumed on different threads.
struct Partition {
  int index = 0;
  int count = 1;
};

using GraphVisitor = std::function<void(const Graph&)>;

// Free trees on n vertices, one per isomorphism class, as a lazy stream.
// Canonical level sequences rooted at a centroid are produced by the
// Beyer-Hedetniemi successor rule; sequences not rooted at the canonical
// centroid are skipped. Vertex 0 is the root and labels follow the level
// sequence.
class TreeGenerator {
 public:
  // kInvalidOrder for n < 1, kTooLarge for n > kMaxOrder.
  explicit TreeGenerator(int n);

  std::optional<Graph> next();

  // Level sequence of the tree returned by the last next().
  const std::vector<int>& levels() const { return levels_; }

 private:
  bool advance();
  bool centroid_rooted() const;
  Graph build() const;

  int n_;
  std::vector<int> levels_;
  bool started_ = false;
  bool done_ = false;
};

// Partition k of K receives trees k, k+K, k+2K, ... of the stream.
void for_each_tree(int n, Partition part, const GraphVisitor& visit);
std::vector<Graph> trees(int n);

// Connected graphs on n <= kMaxConnectedOrder vertices, one per isomorphism
// class, by vertex augmentation with a canonical-deletion test. Graphs on
// n-1 vertices are the generation prefix: partition k of K extends parents
// k, k+K, ... Emission order is deterministic.
void for_each_connected_graph(int n, Partition part, const GraphVisitor& visit);
std::vector<Graph> connected_graphs(int n);
std::int64_t count_connected_graphs(int n);

// Unicyclic graphs (connected, |E| = n): every tree plus one non-edge,
// deduplicated by canonical form. Deterministic order.
std::vector<Graph> unicyclic_graphs(int n);

// Conjunction of the supported structural constraints.
struct Filter {
  std::optional<int> matching;
  std::optional<int> alpha;
  std::optional<std::pair<int, int>> bipartition;
  bool unicyclic = false;
  std::optional<int> min_radius;
  std::optional<int> cycle_length;

  bool empty() const {
    return !matching && !alpha && !bipartition && !unicyclic && !min_radius &&
           !cycle_length;
  }
  bool accepts(const Graph& g) const;
};

struct FilterCounts {
  std::int64_t seen = 0;
  std::int64_t accepted = 0;
};

// Wraps a visitor so that only accepted graphs reach it; `counts` tallies
// the stream as it passes.
GraphVisitor filtered(const Filter& filter, GraphVisitor visit,
                      FilterCounts& counts);

// Enumeration source handed to the checkers: built-in generators or a
// graph6 file, all behind the same partitioned stream interface.
class GraphSource {
 public:
  virtual ~GraphSource() = default;
  virtual void for_each(Partition part, const GraphVisitor& visit) const = 0;
  virtual std::string name() const = 0;
};

std::unique_ptr<GraphSource> tree_source(int n);
std::unique_ptr<GraphSource> connected_source(int n);
std::unique_ptr<GraphSource> unicyclic_source(int n);
// Graphs of the file with order n (all orders when n == 0); partition k of
// K takes lines k, k+K, ...
std::unique_ptr<GraphSource> graph6_file_source(const std::string& path,
                                                int n = 0);
// In-memory list, mostly for tests.
std::unique_ptr<GraphSource> list_source(std::vector<Graph> graphs,
                                         std::string name);

}  // namespace distidx
