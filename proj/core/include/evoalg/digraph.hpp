#pragma once

#include <cstdint>
#include <vector>

#include "evoalg/algebra.hpp"

namespace evoalg {

/// Directed graph on vertices {0..n-1} with dense boolean adjacency.
/// Immutable in practice: built once, then queried.
class DiGraph {
 public:
  DiGraph() = default;
  explicit DiGraph(int n);

  int size() const { return n_; }
  void add_edge(int from, int to);
  bool edge(int from, int to) const;
  std::vector<int> out_neighbors(int v) const;
  int edge_count() const;

  bool operator==(const DiGraph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint8_t> adj_;  // row-major n*n
};

/// Partition of the vertex set: a vertex is cyclic when some cycle is
/// reachable from it (itself included), acyclic otherwise.
struct VertexClassification {
  IndexSet cyclic;
  IndexSet acyclic;
};

/// Associated graph of the algebra: edge i->k iff the (i,k) structure
/// constant is nonzero.
DiGraph from_algebra(const EvolutionAlgebra& alg);

/// First-generation descendants of a vertex set: the union of its
/// out-neighborhoods.
IndexSet descendants_1(const DiGraph& g, const IndexSet& sources);

/// m-th generation descendants of v, the m-fold iterated out-neighborhood.
/// Requires m >= 1.
IndexSet descendants_m(const DiGraph& g, int v, int m);

/// All vertices reachable from v by a path of length >= 1.
IndexSet descendants_all(const DiGraph& g, int v);

/// Cyclic/acyclic split, computed by condensing to strongly connected
/// components: v is cyclic iff it reaches an SCC that is nontrivial or
/// carries a self-loop.
VertexClassification classify_vertices(const DiGraph& g);

/// Weak connectivity (connectivity of the underlying undirected graph).
/// Requires at least one vertex.
bool is_connected(const DiGraph& g);

/// Maximal weakly-connected components, ordered by smallest contained
/// vertex; singleton list iff is_connected.
std::vector<IndexSet> weak_components(const DiGraph& g);

/// Subgraph induced on `vertices` keeping every edge with both endpoints
/// inside; vertex order preserved (ascending original index).
DiGraph full_subgraph(const DiGraph& g, const IndexSet& vertices);

/// True iff the graph has no cycles, i.e. no vertex is cyclic.
bool is_acyclic(const DiGraph& g);

}  // namespace evoalg
