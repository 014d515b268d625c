#pragma once

#include <cstddef>
#include <vector>

#include "compidx/bool_matrix.hpp"
#include "compidx/digraph.hpp"
#include "compidx/simple_graph.hpp"

namespace compidx {

/// C(D): u ~ v when they share an out-neighbour.
SimpleGraph competition_graph(const Digraph& d);

/// C^m(D) = R(A^m).
SimpleGraph m_step_competition_graph(const Digraph& d, std::size_t m);

/// [C^1(D), ..., C^{m_max}(D)], built incrementally.
std::vector<SimpleGraph> graph_sequence(const Digraph& d, std::size_t m_max);

/// The eventually periodic sequence A, A^2, A^3, ... together with its row graphs.
///
/// Powers are generated until the first repeat A^j = A^i (i < j), found through
/// a 128-bit hash table with full equality confirmation. Afterwards
/// A^t = A^{i + (t - i) mod (j - i)} for every t >= i, so power(t) and graph(t)
/// answer for arbitrary t >= 1.
class PowerSequence {
 public:
  /// Throws TooLarge when no repeat appears within `max_steps` powers.
  explicit PowerSequence(const BooleanMatrix& a, std::size_t max_steps = std::size_t{1} << 20);
  explicit PowerSequence(const Digraph& d, std::size_t max_steps = std::size_t{1} << 20)
      : PowerSequence(d.adjacency(), max_steps) {}

  std::size_t index() const noexcept { return index_; }
  std::size_t period() const noexcept { return period_; }
  std::size_t dimension() const noexcept { return powers_.front().size(); }
  /// Exponents 1..stored() are held explicitly.
  std::size_t stored() const noexcept { return powers_.size(); }

  const BooleanMatrix& power(std::size_t t) const { return powers_[slot(t)]; }
  const SimpleGraph& graph(std::size_t t) const { return graphs_[slot(t)]; }
  bool walk(std::size_t u, std::size_t v, std::size_t length) const { return power(length).get(u, v); }

 private:
  std::size_t slot(std::size_t t) const;

  std::vector<BooleanMatrix> powers_;
  std::vector<SimpleGraph> graphs_;
  std::size_t index_ = 1;
  std::size_t period_ = 1;
};

struct CompetitionProfile {
  std::size_t matrix_index = 1;
  std::size_t matrix_period = 1;
  std::size_t cindex = 1;
  /// Least p >= 1 with C^{cindex} = C^{cindex + p}.
  std::size_t cperiod_literal = 1;
  /// Least p >= 1 with C^t = C^{t + p} for every t >= cindex.
  std::size_t eventual_graph_period = 1;
  /// Canonical hashes of C^1 .. C^{matrix_index + matrix_period}.
  std::vector<Hash128> sequence_hashes;
};

CompetitionProfile competition_profile(const Digraph& d);
CompetitionProfile competition_profile(const PowerSequence& powers);

}  // namespace compidx
