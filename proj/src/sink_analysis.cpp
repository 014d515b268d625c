#include "compidx/sink_analysis.hpp"

#include <algorithm>
#include <functional>

#include "compidx/connectivity.hpp"
#include "compidx/error.hpp"

namespace compidx {

VertexSet SinkSequence::eliminated(std::size_t n) const {
  VertexSet out(n);
  for (std::size_t i = 0; i < zeta; ++i)
    for (auto v : layers[i]) out.set(v);
  return out;
}

VertexSet SinkSequence::core(std::size_t n) const {
  VertexSet out(n);
  for (auto v : residual[zeta]) out.set(v);
  return out;
}

std::vector<int> SinkSequence::layer_of(std::size_t n) const {
  std::vector<int> out(n, -1);
  for (std::size_t i = 0; i < layers.size(); ++i)
    for (auto v : layers[i]) out[v] = static_cast<int>(i);
  return out;
}

SinkSequence sink_sequence(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  SinkSequence ss;
  VertexSet alive = VertexSet::full(n);
  for (;;) {
    VertexSet sinks(n);
    alive.for_each([&](std::size_t v) {
      if (!d.out_set(v).intersects(alive)) sinks.set(v);
    });
    ss.residual.push_back(alive.members());
    ss.layers.push_back(sinks.members());
    if (sinks.none()) {
      ss.terminal = TerminalKind::Empty;
      break;
    }
    if (sinks == alive) {
      ss.terminal = TerminalKind::AllSinks;
      break;
    }
    alive.subtract(sinks);
  }
  ss.zeta = ss.layers.size() - 1;
  return ss;
}

bool is_acyclic(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  std::vector<std::size_t> indeg(n);
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v) {
    indeg[v] = d.in_degree(v);
    if (indeg[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const auto v = ready.back();
    ready.pop_back();
    ++removed;
    d.out_set(v).for_each([&](std::size_t w) {
      if (--indeg[w] == 0) ready.push_back(w);
    });
  }
  return removed == n;
}

WalkSpectrum walk_length_spectrum(const Digraph& d, std::size_t v, std::size_t cap) {
  const std::size_t n = d.vertex_count();
  if (v >= n) throw Error(ErrorCode::VertexOutOfRange, "start vertex out of range");
  if (cap < n) throw Error(ErrorCode::InvalidArgument, "cap must be at least n");

  VertexSet on_cycle(n);
  for (const auto& comp : strongly_connected_components(d))
    if (comp.size() > 1)
      for (auto u : comp) on_cycle.set(u);
  const VertexSet reached = reachability(d).row_set(v);
  if (reached.intersects(on_cycle)) return {true, {}};

  // The reachable region is acyclic, and every prefix of a walk is a walk,
  // so the spectrum is {0, ..., longest path from v}.
  std::vector<long long> longest(n, -1);
  std::function<long long(std::size_t)> depth = [&](std::size_t u) -> long long {
    if (longest[u] >= 0) return longest[u];
    long long best = 0;
    d.out_set(u).for_each([&](std::size_t w) { best = std::max(best, depth(w) + 1); });
    return longest[u] = best;
  };
  const auto top = static_cast<std::size_t>(depth(v));
  if (top > cap) throw Error(ErrorCode::TheoremViolation, "acyclic walk longer than the cap");
  WalkSpectrum spectrum;
  for (std::size_t len = 0; len <= top; ++len) spectrum.lengths.push_back(len);
  return spectrum;
}

}  // namespace compidx
