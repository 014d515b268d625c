#include "compidx/generators.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "compidx/connectivity.hpp"
#include "compidx/error.hpp"
#include "compidx/sink_analysis.hpp"

namespace compidx {

namespace {

void require_part_sizes(const std::vector<std::size_t>& part_sizes) {
  if (part_sizes.size() < 2) throw Error(ErrorCode::InvalidArgument, "need at least two parts");
  for (auto s : part_sizes)
    if (s == 0) throw Error(ErrorCode::InvalidArgument, "part sizes must be positive");
}

std::vector<Arc> cross_pairs(const Partition& partition) {
  std::vector<Arc> pairs;
  for (std::size_t u = 0; u < partition.size(); ++u)
    for (std::size_t v = u + 1; v < partition.size(); ++v)
      if (partition[u] != partition[v]) pairs.emplace_back(u, v);
  return pairs;
}

bool has_sink(const Digraph& d) {
  for (std::size_t v = 0; v < d.vertex_count(); ++v)
    if (d.out_degree(v) == 0) return true;
  return false;
}

}  // namespace

std::uint64_t CoinStream::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw Error(ErrorCode::InvalidArgument, "empty uniform range");
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return engine_();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x < limit) return lo + x % range;
  }
}

Partition partition_from_sizes(const std::vector<std::size_t>& part_sizes) {
  Partition partition;
  for (std::size_t p = 0; p < part_sizes.size(); ++p)
    partition.insert(partition.end(), part_sizes[p], static_cast<int>(p));
  return partition;
}

Digraph gen_transitive_tournament(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  std::vector<Arc> arcs;
  for (std::size_t l = 1; l < n; ++l)
    for (std::size_t k = 0; k < l; ++k) arcs.emplace_back(l, k);
  Partition parts(n);
  for (std::size_t v = 0; v < n; ++v) parts[v] = static_cast<int>(v);
  return Digraph::build(n, arcs, parts, true);
}

Digraph gen_zeta_tournament(std::size_t n, std::size_t zeta) {
  if (n < 2 || zeta < 1 || zeta > n - 1 || zeta + 2 == n)
    throw Error(ErrorCode::InvalidZeta, "no tournament on " + std::to_string(n) + " vertices has sink elimination index " +
                                            std::to_string(zeta));
  std::vector<Arc> arcs;
  for (std::size_t l = 1; l < n; ++l)
    for (std::size_t k = 0; k < l; ++k) {
      if (l == n - 1 && k == zeta) {
        arcs.emplace_back(k, l);
      } else {
        arcs.emplace_back(l, k);
      }
    }
  Partition parts(n);
  for (std::size_t v = 0; v < n; ++v) parts[v] = static_cast<int>(v);
  return Digraph::build(n, arcs, parts, true);
}

Digraph gen_acyclic_kpartite(const std::vector<std::size_t>& layer_sizes, const std::vector<int>& layer_parts) {
  if (layer_sizes.empty() || layer_sizes.size() != layer_parts.size())
    throw Error(ErrorCode::InvalidArgument, "need one part id per layer");
  for (auto s : layer_sizes)
    if (s == 0) throw Error(ErrorCode::InvalidArgument, "layer sizes must be positive");
  for (std::size_t i = 1; i < layer_parts.size(); ++i)
    if (layer_parts[i] == layer_parts[i - 1])
      throw Error(ErrorCode::ConsecutiveSamePart, "layers " + std::to_string(i - 1) + " and " + std::to_string(i) + " share part " +
                                                      std::to_string(layer_parts[i]));
  count_parts(layer_parts);

  Partition partition;
  std::vector<std::size_t> layer;
  for (std::size_t i = 0; i < layer_sizes.size(); ++i) {
    partition.insert(partition.end(), layer_sizes[i], layer_parts[i]);
    layer.insert(layer.end(), layer_sizes[i], i);
  }
  const std::size_t n = partition.size();
  std::vector<Arc> arcs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (layer[u] > layer[v] && partition[u] != partition[v]) arcs.emplace_back(u, v);
  return Digraph::build(n, arcs, partition, true);
}

LayerSpec random_layer_spec(std::size_t k, std::size_t n_max, CoinStream& coins) {
  if (k < 2 || n_max < k) throw Error(ErrorCode::InvalidArgument, "random layer specs need 2 <= k <= n_max");
  const std::size_t layers = coins.uniform(k, std::min(n_max, 2 * k + 2));
  LayerSpec spec;
  // Part sequence with no two consecutive layers equal, resampled until every part appears.
  auto misses_a_part = [&] {
    std::vector<bool> used(k, false);
    for (int p : spec.parts) used[static_cast<std::size_t>(p)] = true;
    return std::find(used.begin(), used.end(), false) != used.end();
  };
  do {
    spec.parts.assign(1, static_cast<int>(coins.uniform(0, k - 1)));
    while (spec.parts.size() < layers) {
      auto next = static_cast<int>(coins.uniform(0, k - 2));
      if (next >= spec.parts.back()) ++next;
      spec.parts.push_back(next);
    }
  } while (misses_a_part());
  spec.sizes.assign(layers, 1);
  const std::size_t extra = coins.uniform(0, n_max - layers);
  for (std::size_t e = 0; e < extra; ++e) ++spec.sizes[coins.uniform(0, layers - 1)];
  return spec;
}

Digraph gen_random_kpartite(const std::vector<std::size_t>& part_sizes, Seed seed) {
  CoinStream coins(seed);
  return gen_random_kpartite(part_sizes, coins);
}

Digraph gen_random_kpartite(const std::vector<std::size_t>& part_sizes, CoinStream& coins) {
  require_part_sizes(part_sizes);
  Partition partition = partition_from_sizes(part_sizes);
  std::vector<Arc> arcs;
  for (auto [u, v] : cross_pairs(partition)) {
    if (coins.flip()) {
      arcs.emplace_back(u, v);
    } else {
      arcs.emplace_back(v, u);
    }
  }
  const std::size_t n = partition.size();
  return Digraph::build(n, arcs, std::move(partition), true);
}

Digraph gen_sink_cycle_kpartite(const std::vector<std::size_t>& part_sizes, Seed seed, std::size_t max_tries) {
  CoinStream coins(seed);
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    Digraph d = gen_random_kpartite(part_sizes, coins);
    if (has_sink(d) && !is_acyclic(d)) return d;
  }
  throw Error(ErrorCode::ExhaustedTries, "no sink-and-cycle orientation in " + std::to_string(max_tries) + " tries");
}

Digraph gen_strong_kpartite(const std::vector<std::size_t>& part_sizes, Seed seed, std::size_t max_tries) {
  CoinStream coins(seed);
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    Digraph d = gen_random_kpartite(part_sizes, coins);
    if (strongly_connected_components(d).size() == 1) return d;
  }
  throw Error(ErrorCode::ExhaustedTries, "no strongly connected orientation in " + std::to_string(max_tries) + " tries");
}

Digraph gen_mixed_cycle(std::size_t n, std::size_t chords, Seed seed, std::size_t max_tries) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "a Hamiltonian cycle needs n >= 3");
  std::vector<Arc> ring;
  for (std::size_t v = 0; v < n; ++v) ring.emplace_back(v, (v + 1) % n);
  std::vector<Arc> free_pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (v != u + 1 && !(u == 0 && v == n - 1)) free_pairs.emplace_back(u, v);
  if (chords > free_pairs.size()) throw Error(ErrorCode::InvalidArgument, "more chords than free vertex pairs");

  CoinStream coins(seed);
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<Arc> pool = free_pairs;
    std::vector<Arc> arcs = ring;
    for (std::size_t c = 0; c < chords; ++c) {
      const auto pick = coins.uniform(0, pool.size() - 1);
      auto [u, v] = pool[pick];
      pool[pick] = pool.back();
      pool.pop_back();
      if (coins.flip()) {
        arcs.emplace_back(u, v);
      } else {
        arcs.emplace_back(v, u);
      }
    }
    Digraph d = Digraph::build(n, arcs);
    if (cycle_gcd(d) == 1) return d;
  }
  throw Error(ErrorCode::ExhaustedTries, "no primitive chord set in " + std::to_string(max_tries) + " tries");
}

OrientationEnumerator::OrientationEnumerator(std::vector<std::size_t> part_sizes) {
  for (auto s : part_sizes)
    if (s == 0) throw Error(ErrorCode::InvalidArgument, "part sizes must be positive");
  partition_ = partition_from_sizes(part_sizes);
  n_ = partition_.size();
  if (n_ == 0) throw Error(ErrorCode::InvalidArgument, "need at least one vertex");
  pairs_ = cross_pairs(partition_);
  if (pairs_.size() > 30) throw Error(ErrorCode::TooLarge, std::to_string(pairs_.size()) + " cross-part pairs exceed 30");
}

Digraph OrientationEnumerator::at(std::uint64_t index) const {
  if (index >= count()) throw Error(ErrorCode::InvalidArgument, "orientation index out of range");
  std::vector<Arc> arcs;
  arcs.reserve(pairs_.size());
  for (std::size_t b = 0; b < pairs_.size(); ++b) {
    auto [u, v] = pairs_[b];
    if ((index >> b) & 1u) {
      arcs.emplace_back(u, v);
    } else {
      arcs.emplace_back(v, u);
    }
  }
  return Digraph::build(n_, arcs, partition_, true);
}

}  // namespace compidx
