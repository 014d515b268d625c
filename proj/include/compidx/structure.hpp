#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "compidx/bool_matrix.hpp"
#include "compidx/digraph.hpp"
#include "compidx/sink_analysis.hpp"

namespace compidx {

using Triangle = std::array<std::size_t, 3>;
using Hole = std::array<std::size_t, 4>;

/// Directed 3-cycles x -> y -> z -> x, least vertex first, each listed once, sorted.
std::vector<Triangle> find_triangles(const Digraph& d);

/// Induced directed 4-cycles v0 -> v1 -> v2 -> v3 -> v0, least vertex first, sorted.
/// Multipartite tournaments only search quadruples alternating between two parts.
std::vector<Hole> find_holes4(const Digraph& d);

enum class WalkType { Type1, Type2 };

enum class VertexType { Type1Only, Type2Only, Both };

/// Answers typed-walk existence queries for one digraph.
///
/// A (u, w)-walk through every vertex of a cycle K exists iff u reaches K and
/// K reaches w: enter K, go once around it and leave. Type 1 uses the directed
/// triangles, Type 2 the induced 4-holes.
class TypedWalkIndex {
 public:
  explicit TypedWalkIndex(const Digraph& d);

  bool has_walk(std::size_t u, std::size_t w, WalkType type) const {
    return (type == WalkType::Type1 ? type1_ : type2_).get(u, w);
  }

  const std::vector<Triangle>& triangles() const noexcept { return triangles_; }
  const std::vector<Hole>& holes() const noexcept { return holes_; }
  const BooleanMatrix& closure() const noexcept { return closure_; }

 private:
  BooleanMatrix closure_;
  std::vector<Triangle> triangles_;
  std::vector<Hole> holes_;
  BooleanMatrix type1_;
  BooleanMatrix type2_;
};

bool has_typed_walk(const Digraph& d, std::size_t u, std::size_t w, WalkType type);

/// Classifies w in the union of layers[0..zeta-1] against every vertex of the
/// sink-free residual. Throws NotMultipartite, NoDirectedCycle, NotInU, or
/// TheoremViolation when some residual vertex has neither walk type.
VertexType vertex_type(const Digraph& d, const SinkSequence& ss, std::size_t w);
VertexType vertex_type(const Digraph& d, const SinkSequence& ss, const TypedWalkIndex& index, std::size_t w);

/// Nondecreasing out-degrees of a tournament; throws NotTournament.
std::vector<std::size_t> score_sequence(const Digraph& d);

/// Largest integer not representable as a nonnegative combination of `ps`,
/// or -1 when 1 is in `ps`. Throws NotCoprime, InvalidArgument (empty / zero).
std::int64_t frobenius(const std::vector<std::int64_t>& ps);

}  // namespace compidx
