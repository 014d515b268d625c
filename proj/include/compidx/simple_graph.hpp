#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "compidx/bool_matrix.hpp"

namespace compidx {

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected simple graph on vertices 0..n-1 (symmetric bit-row adjacency, zero diagonal).
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : adj_(n) {}

  static SimpleGraph from_edges(std::size_t n, const std::vector<Edge>& edges);
  /// Complete graph on `clique`, every other vertex isolated.
  static SimpleGraph clique_on(std::size_t n, const VertexSet& clique);
  static SimpleGraph complete(std::size_t n) { return clique_on(n, VertexSet::full(n)); }

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  bool adjacent(std::size_t u, std::size_t v) const noexcept { return adj_.get(u, v); }
  void add_edge(std::size_t u, std::size_t v);

  std::size_t edge_count() const noexcept { return adj_.count() / 2; }
  bool empty() const noexcept { return adj_.is_zero(); }
  bool is_complete() const noexcept;
  std::size_t degree(std::size_t v) const noexcept;
  /// Edges with u < v in lexicographic order; this is the canonical form.
  std::vector<Edge> edges() const;
  /// Every edge of this graph is an edge of `other`.
  bool is_subgraph_of(const SimpleGraph& other) const noexcept;
  SimpleGraph complement() const;

  Hash128 canonical_hash() const { return hash_words(adj_.raw(), adj_.size()); }
  const BooleanMatrix& adjacency() const noexcept { return adj_; }
  BooleanMatrix& adjacency() noexcept { return adj_; }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  BooleanMatrix adj_;
};

/// Graph of a matrix's rows: i ~ j when rows i and j share a 1 in some column.
SimpleGraph row_graph(const BooleanMatrix& a);

/// Sorted complement-degree multiset, descending, zeros dropped. Used for the
/// "K_n minus a small graph" shape tests.
std::vector<std::size_t> missing_degree_profile(const SimpleGraph& g);

/// True when g is K_n minus the edges of a path on `path_vertices` vertices.
bool is_complete_minus_path(const SimpleGraph& g, std::size_t path_vertices);
/// True when g is K_n minus the edges of a triangle.
bool is_complete_minus_triangle(const SimpleGraph& g);
/// True when g is K_a plus isolated vertices (any vertex labels).
bool is_clique_plus_isolated(const SimpleGraph& g, std::size_t clique_size);

/// Short human-readable shape label ("K_n", "K_n-P_3", "K_4+I_2", "edges=7").
std::string describe_shape(const SimpleGraph& g);

}  // namespace compidx
