#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "compidx/digraph.hpp"

namespace compidx {

/// Seed for the corpus generators. Streams come from std::mt19937_64, whose
/// output sequence is fixed by the C++ standard, and each coin flip is the top
/// bit of one draw, so a seed reproduces the same digraph on every platform.
struct Seed {
  std::uint64_t value = 0;
};

class CoinStream {
 public:
  explicit CoinStream(Seed seed) : engine_(seed.value) {}
  bool flip() { return (engine_() >> 63) != 0; }
  /// Uniform integer in [lo, hi] by rejection on the raw 64-bit stream.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// Vertex v preys on every lower-numbered vertex; vertex 0 is the sink.
Digraph gen_transitive_tournament(std::size_t n);

/// Transitive tournament with the arc between n-1 and `zeta` reversed, which
/// makes the sink elimination index exactly `zeta`. Throws InvalidZeta unless
/// 1 <= zeta <= n-1 and zeta != n-2.
Digraph gen_zeta_tournament(std::size_t n, std::size_t zeta);

/// Acyclic multipartite tournament whose sink sequence is the given layers:
/// layer i holds layer_sizes[i] consecutive vertices in part layer_parts[i], and
/// every cross-part pair is oriented from the higher layer to the lower one.
Digraph gen_acyclic_kpartite(const std::vector<std::size_t>& layer_sizes, const std::vector<int>& layer_parts);

/// Random layer specification for gen_acyclic_kpartite with exactly k parts
/// and at most n_max vertices (n_max >= k).
struct LayerSpec {
  std::vector<std::size_t> sizes;
  std::vector<int> parts;
};
LayerSpec random_layer_spec(std::size_t k, std::size_t n_max, CoinStream& coins);

/// Each cross-part pair (u < v, lexicographic order) gets one fair coin:
/// heads u -> v, tails v -> u.
Digraph gen_random_kpartite(const std::vector<std::size_t>& part_sizes, Seed seed);
Digraph gen_random_kpartite(const std::vector<std::size_t>& part_sizes, CoinStream& coins);

/// Rejection sampling of gen_random_kpartite until the digraph has a sink and
/// a directed cycle. Throws ExhaustedTries.
Digraph gen_sink_cycle_kpartite(const std::vector<std::size_t>& part_sizes, Seed seed, std::size_t max_tries = 10000);

/// Rejection sampling of gen_random_kpartite until strongly connected.
Digraph gen_strong_kpartite(const std::vector<std::size_t>& part_sizes, Seed seed, std::size_t max_tries = 10000);

/// Hamiltonian cycle 0 -> 1 -> ... -> n-1 -> 0 plus `chords` random extra arcs,
/// resampled until primitive. Not multipartite in general.
Digraph gen_mixed_cycle(std::size_t n, std::size_t chords, Seed seed, std::size_t max_tries = 10000);

/// All labeled orientations of the complete multipartite graph with the given
/// part sizes. Orientation `index` sets pair b (lexicographic) to u -> v when
/// bit b of index is 1, so ranges of indices can be handed to separate workers.
class OrientationEnumerator {
 public:
  /// Throws TooLarge beyond 30 cross-part pairs.
  explicit OrientationEnumerator(std::vector<std::size_t> part_sizes);

  std::uint64_t count() const noexcept { return std::uint64_t{1} << pairs_.size(); }
  std::size_t pair_count() const noexcept { return pairs_.size(); }
  Digraph at(std::uint64_t index) const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t i = 0; i < count(); ++i) fn(at(i));
  }

 private:
  std::size_t n_ = 0;
  Partition partition_;
  std::vector<Arc> pairs_;
};

Partition partition_from_sizes(const std::vector<std::size_t>& part_sizes);

}  // namespace compidx
