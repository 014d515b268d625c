#pragma once

// Brute-force reference implementations. Deliberately naive: plain vectors,
// explicit walk enumeration, no bitsets, so they share no code with the library.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "compidx/digraph.hpp"
#include "compidx/simple_graph.hpp"

namespace oracle {

using Adj = std::vector<std::vector<std::size_t>>;

inline Adj out_lists(const compidx::Digraph& d) {
  Adj out(d.vertex_count());
  for (auto [u, v] : d.arcs()) out[u].push_back(v);
  return out;
}

// Endpoints of every walk of exactly `len` arcs from u, found by DFS over walks.
inline std::set<std::size_t> walk_ends(const Adj& out, std::size_t u, std::size_t len) {
  std::set<std::size_t> ends;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{u, 0}};
  while (!stack.empty()) {
    auto [v, depth] = stack.back();
    stack.pop_back();
    if (depth == len) {
      ends.insert(v);
      continue;
    }
    for (auto w : out[v]) stack.emplace_back(w, depth + 1);
  }
  return ends;
}

// C^m by definition: u ~ v when some vertex ends a length-m walk from each.
inline std::set<std::pair<std::size_t, std::size_t>> competition_edges(const compidx::Digraph& d, std::size_t m) {
  const Adj out = out_lists(d);
  std::vector<std::set<std::size_t>> ends;
  for (std::size_t u = 0; u < d.vertex_count(); ++u) ends.push_back(walk_ends(out, u, m));
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < ends.size(); ++u)
    for (std::size_t v = u + 1; v < ends.size(); ++v)
      for (auto x : ends[u])
        if (ends[v].count(x)) {
          edges.emplace(u, v);
          break;
        }
  return edges;
}

inline std::set<std::pair<std::size_t, std::size_t>> edge_set(const compidx::SimpleGraph& g) {
  auto e = g.edges();
  return {e.begin(), e.end()};
}

// Sink layers by repeated deletion on adjacency lists.
inline std::vector<std::vector<std::size_t>> sink_layers(const compidx::Digraph& d) {
  const Adj out = out_lists(d);
  std::vector<bool> alive(d.vertex_count(), true);
  std::vector<std::vector<std::size_t>> layers;
  for (;;) {
    std::vector<std::size_t> sinks;
    std::size_t remaining = 0;
    for (std::size_t v = 0; v < alive.size(); ++v) {
      if (!alive[v]) continue;
      ++remaining;
      bool sink = true;
      for (auto w : out[v]) sink = sink && !alive[w];
      if (sink) sinks.push_back(v);
    }
    layers.push_back(sinks);
    if (sinks.empty() || sinks.size() == remaining) return layers;
    for (auto v : sinks) alive[v] = false;
  }
}

// Least t with every ordered pair joined by a length-t walk, by naive integer
// matrix powers; 0 when none up to `limit`.
inline std::size_t exponent(const compidx::Digraph& d, std::size_t limit) {
  const std::size_t n = d.vertex_count();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0)), p;
  for (auto [u, v] : d.arcs()) a[u][v] = 1;
  p = a;
  for (std::size_t t = 1; t <= limit; ++t) {
    bool all = true;
    for (auto& row : p)
      for (int x : row) all = all && x != 0;
    if (all) return t;
    std::vector<std::vector<int>> next(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (p[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (a[k][j]) next[i][j] = 1;
    p = std::move(next);
  }
  return 0;
}

// Largest non-representable integer by a sieve up to `bound`.
inline std::int64_t frobenius(const std::vector<std::int64_t>& ps, std::int64_t bound) {
  std::vector<bool> ok(static_cast<std::size_t>(bound) + 1, false);
  ok[0] = true;
  for (std::int64_t x = 1; x <= bound; ++x)
    for (auto p : ps)
      if (p <= x && ok[static_cast<std::size_t>(x - p)]) {
        ok[static_cast<std::size_t>(x)] = true;
        break;
      }
  std::int64_t last = -1;
  for (std::int64_t x = 0; x <= bound; ++x)
    if (!ok[static_cast<std::size_t>(x)]) last = x;
  return last;
}

// Every tournament on n labeled vertices, indexed by the orientation bits of
// the pairs (u < v) in lexicographic order; bit set means u -> v.
inline compidx::Digraph tournament(std::size_t n, std::uint64_t bits) {
  std::vector<compidx::Arc> arcs;
  std::size_t b = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v, ++b) {
      if ((bits >> b) & 1u) {
        arcs.emplace_back(u, v);
      } else {
        arcs.emplace_back(v, u);
      }
    }
  return compidx::Digraph::build(n, arcs);
}

}  // namespace oracle
