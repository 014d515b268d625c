#include "compidx/connectivity.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>

#include "compidx/error.hpp"

namespace compidx {

std::vector<std::vector<std::size_t>> strongly_connected_components(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;

  // Iterative Tarjan: each frame remembers the next successor to try.
  struct Frame {
    std::size_t v;
    std::vector<std::size_t> succ;
    std::size_t next = 0;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<Frame> frames;
    auto push = [&](std::size_t v) {
      index[v] = low[v] = counter++;
      stack.push_back(v);
      on_stack[v] = true;
      frames.push_back({v, d.out_set(v).members()});
    };
    push(root);
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < f.succ.size()) {
        const std::size_t w = f.succ[f.next++];
        if (index[w] == kUnvisited) {
          push(w);
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      if (low[v] == index[v]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
      frames.pop_back();
      if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
    }
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

BooleanMatrix reachability(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  BooleanMatrix r = d.adjacency();
  for (std::size_t i = 0; i < n; ++i) r.set(i, i);
  // Warshall over bit-rows.
  for (std::size_t k = 0; k < n; ++k) {
    auto rk = r.row(k);
    std::vector<Word> pivot(rk.begin(), rk.end());
    for (std::size_t i = 0; i < n; ++i) {
      if (!r.get(i, k)) continue;
      auto ri = r.row(i);
      for (std::size_t w = 0; w < pivot.size(); ++w) ri[w] |= pivot[w];
    }
  }
  return r;
}

std::size_t cycle_gcd(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  std::size_t g = 0;
  std::vector<long long> level(n, -1);
  for (const auto& comp : strongly_connected_components(d)) {
    if (comp.size() < 2) continue;
    VertexSet members(n);
    for (auto v : comp) members.set(v);
    // BFS levels inside the component; every arc (u,v) closes a walk whose
    // length differs from a cycle combination by level[u] + 1 - level[v].
    std::deque<std::size_t> queue{comp.front()};
    level[comp.front()] = 0;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      d.out_set(u).for_each([&](std::size_t v) {
        if (members.test(v) && level[v] < 0) {
          level[v] = level[u] + 1;
          queue.push_back(v);
        }
      });
    }
    for (auto u : comp)
      d.out_set(u).for_each([&](std::size_t v) {
        if (!members.test(v)) return;
        const long long diff = level[u] + 1 - level[v];
        g = std::gcd(g, static_cast<std::size_t>(diff < 0 ? -diff : diff));
      });
  }
  return g;
}

PrimitivityReport primitivity(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  PrimitivityReport report;
  report.strongly_connected = strongly_connected_components(d).size() == 1;
  report.cycle_gcd = cycle_gcd(d);
  report.primitive = report.strongly_connected && report.cycle_gcd == 1 && n >= 2;
  if (!report.primitive) return report;

  const std::size_t cap = wielandt_bound(n);
  BooleanMatrix power = d.adjacency();
  std::size_t t = 1;
  while (!power.is_all_ones()) {
    if (t >= cap)
      throw Error(ErrorCode::ExponentOverflow, "no all-ones power up to the Wielandt bound " + std::to_string(cap));
    power = bool_multiply(power, d.adjacency());
    ++t;
  }
  report.exponent = t;
  return report;
}

std::optional<std::size_t> longest_cycle_length(const Digraph& d, std::size_t n_max) {
  const std::size_t n = d.vertex_count();
  if (n > n_max || n > 31) return std::nullopt;
  std::size_t best = 0;
  // Cycles are rooted at their least vertex s; paths from s may only use
  // vertices above s. dp[mask] = possible endpoints of an s-path covering mask.
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t m = n - s - 1;
    if (m + 1 <= best) break;
    std::vector<std::uint32_t> dp(std::size_t{1} << m, 0);
    auto bit_of = [&](std::size_t v) { return v - s - 1; };
    std::vector<std::uint32_t> succ(m, 0);
    std::vector<bool> closes(m, false);
    std::uint32_t from_s = 0;
    for (std::size_t v = s + 1; v < n; ++v) {
      if (d.has_arc(s, v)) from_s |= std::uint32_t{1} << bit_of(v);
      closes[bit_of(v)] = d.has_arc(v, s);
      for (std::size_t w = s + 1; w < n; ++w)
        if (d.has_arc(v, w)) succ[bit_of(v)] |= std::uint32_t{1} << bit_of(w);
    }
    for (std::size_t b = 0; b < m; ++b)
      if (from_s >> b & 1u) dp[std::size_t{1} << b] |= std::uint32_t{1} << b;
    for (std::size_t mask = 1; mask < dp.size(); ++mask) {
      std::uint32_t ends = dp[mask];
      const auto size = static_cast<std::size_t>(std::popcount(mask));
      while (ends != 0) {
        const auto b = static_cast<std::size_t>(std::countr_zero(ends));
        ends &= ends - 1;
        if (closes[b]) best = std::max(best, size + 1);
        std::uint32_t next = succ[b] & ~static_cast<std::uint32_t>(mask);
        while (next != 0) {
          const auto c = static_cast<std::size_t>(std::countr_zero(next));
          next &= next - 1;
          dp[mask | (std::size_t{1} << c)] |= std::uint32_t{1} << c;
        }
      }
    }
  }
  return best;
}

}  // namespace compidx
