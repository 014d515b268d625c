#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "compidx/digraph.hpp"

namespace compidx {

/// Maximal strongly connected sets, each sorted ascending, listed by least vertex.
std::vector<std::vector<std::size_t>> strongly_connected_components(const Digraph& d);

/// Reflexive-transitive closure: row u is the set of vertices reachable from u.
BooleanMatrix reachability(const Digraph& d);

/// gcd of all directed cycle lengths; 0 when the digraph is acyclic.
std::size_t cycle_gcd(const Digraph& d);

struct PrimitivityReport {
  bool strongly_connected = false;
  std::size_t cycle_gcd = 0;
  bool primitive = false;
  std::optional<std::size_t> exponent;
};

/// Wielandt's bound (n-1)^2 + 1 on the exponent of a primitive n-vertex digraph.
constexpr std::size_t wielandt_bound(std::size_t n) noexcept { return n == 0 ? 1 : (n - 1) * (n - 1) + 1; }

/// Primitivity and exponent. The exponent search is linear in t and stops at
/// the Wielandt bound; running past it throws ExponentOverflow.
PrimitivityReport primitivity(const Digraph& d);

/// Length of a longest directed cycle (0 if acyclic) by subset dynamic
/// programming; nullopt when n exceeds `n_max`.
std::optional<std::size_t> longest_cycle_length(const Digraph& d, std::size_t n_max = 20);

}  // namespace compidx
