#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "compidx/bool_matrix.hpp"

namespace compidx {

using Arc = std::pair<std::size_t, std::size_t>;
using Partition = std::vector<int>;

/// Loop-free, digon-free digraph on vertices 0..n-1, optionally carrying a
/// validated multipartite-tournament partition. Immutable after construction.
class Digraph {
 public:
  Digraph() = default;

  /// Validating constructor.
  ///
  /// With `require_multipartite` set, the digraph must be an orientation of a
  /// complete k-partite graph. When `partition` is absent the parts are
  /// inferred as the classes of the transitive closure of non-adjacency.
  /// Throws Error with LoopArc, DigonArc, VertexOutOfRange, IntraPartArc,
  /// MissingCrossArc or NotMultipartite.
  static Digraph build(std::size_t n, const std::vector<Arc>& arcs,
                       std::optional<Partition> partition = std::nullopt,
                       bool require_multipartite = false);

  std::size_t vertex_count() const noexcept { return out_.size(); }
  bool has_arc(std::size_t u, std::size_t v) const noexcept { return out_.get(u, v); }
  bool adjacent(std::size_t u, std::size_t v) const noexcept { return has_arc(u, v) || has_arc(v, u); }
  std::size_t out_degree(std::size_t v) const noexcept;
  std::size_t in_degree(std::size_t v) const noexcept;
  std::size_t arc_count() const noexcept { return out_.count(); }

  /// Arcs in lexicographic (u, v) order.
  std::vector<Arc> arcs() const;

  const BooleanMatrix& adjacency() const noexcept { return out_; }
  const BooleanMatrix& reverse_adjacency() const noexcept { return in_; }
  VertexSet out_set(std::size_t v) const { return out_.row_set(v); }
  VertexSet in_set(std::size_t v) const { return in_.row_set(v); }

  const std::optional<Partition>& partition() const noexcept { return partition_; }
  bool is_multipartite_tournament() const noexcept { return partition_.has_value(); }
  /// Number of partite sets (0 when no partition is attached).
  std::size_t part_count() const noexcept { return part_count_; }
  int part_of(std::size_t v) const { return partition_->at(v); }

  /// Induced subdigraph on `keep`, vertices renumbered ascending. The
  /// partition is dropped.
  Digraph induced(const VertexSet& keep) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.out_ == b.out_ && a.partition_ == b.partition_;
  }

 private:
  BooleanMatrix out_;
  BooleanMatrix in_;
  std::optional<Partition> partition_;
  std::size_t part_count_ = 0;
};

/// Partition inference from raw structure: classes of the transitive closure
/// of non-adjacency, numbered by least member. Returns nullopt when the
/// classes are not independent sets completely joined to each other.
std::optional<Partition> infer_multipartite(const Digraph& d);

/// Every pair of distinct vertices joined by exactly one arc.
bool is_tournament(const Digraph& d);

/// Number of distinct ids in a contiguous 0..k-1 partition (throws InvalidArgument otherwise).
std::size_t count_parts(const Partition& partition);

}  // namespace compidx
