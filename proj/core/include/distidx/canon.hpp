#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "distidx/graph.hpp"

namespace distidx {

// Labeling-invariant representative of an isomorphism class: the graph
// relabeled so that its adjacency rows are lexicographically maximal over
// the leaves of an individualization-refinement search.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(Graph canonical) : graph_(std::move(canonical)) {}

  const Graph& graph() const { return graph_; }
  int order() const { return graph_.order(); }
  std::size_t hash() const;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.graph_ == b.graph_;
  }
  friend std::strong_ordering operator<=>(const CanonicalForm& a,
                                          const CanonicalForm& b);

 private:
  Graph graph_;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const { return f.hash(); }
};

// position[v] = canonical index of vertex v.
std::vector<int> canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() &&
         canonical_form(a) == canonical_form(b);
}

}  // namespace distidx
