#pragma once

#include <cstddef>
#include <vector>

#include "compidx/digraph.hpp"

namespace compidx {

enum class TerminalKind {
  AllSinks,  // the last layer is the whole residual digraph
  Empty,     // the residual digraph has no sinks
};

/// Layers obtained by repeatedly stripping all current sinks.
///
/// layers[i] are the sinks of D_i, where D_0 = D and D_{i+1} = D_i - layers[i].
/// Stripping stops at the first i whose layer is empty or is all of D_i; that
/// i is zeta. residual[i] lists V(D_i). All vertex lists are ascending.
struct SinkSequence {
  std::size_t zeta = 0;
  std::vector<std::vector<std::size_t>> layers;
  std::vector<std::vector<std::size_t>> residual;
  TerminalKind terminal = TerminalKind::Empty;

  /// Union of layers[0..zeta-1].
  VertexSet eliminated(std::size_t n) const;
  /// V(D_zeta).
  VertexSet core(std::size_t n) const;
  /// Layer index of every vertex; -1 for vertices of a sink-free residual.
  std::vector<int> layer_of(std::size_t n) const;
};

SinkSequence sink_sequence(const Digraph& d);

/// Directed-cycle test by Kahn elimination (independent of sink_sequence).
bool is_acyclic(const Digraph& d);

struct WalkSpectrum {
  bool unbounded = false;
  /// Exact set of lengths of walks from the start vertex, ascending; empty when unbounded.
  std::vector<std::size_t> lengths;

  friend bool operator==(const WalkSpectrum&, const WalkSpectrum&) = default;
};

/// Lengths of directed walks starting at v. Unbounded when v reaches a
/// directed cycle. `cap` must be at least n (InvalidArgument otherwise).
WalkSpectrum walk_length_spectrum(const Digraph& d, std::size_t v, std::size_t cap);

}  // namespace compidx
