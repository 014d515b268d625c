#include "compidx/structure.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>

#include "compidx/connectivity.hpp"
#include "compidx/error.hpp"

namespace compidx {

std::vector<Triangle> find_triangles(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  std::vector<Triangle> out;
  for (std::size_t x = 0; x < n; ++x) {
    const VertexSet back = d.in_set(x);
    d.out_set(x).for_each([&](std::size_t y) {
      if (y < x) return;
      VertexSet closing = d.out_set(y);
      closing &= back;
      closing.for_each([&](std::size_t z) {
        if (z > x) out.push_back({x, y, z});
      });
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Hole> find_holes4(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  const bool by_parts = d.is_multipartite_tournament();
  std::vector<Hole> out;
  for (std::size_t v0 = 0; v0 < n; ++v0) {
    const VertexSet into_v0 = d.in_set(v0);
    d.out_set(v0).for_each([&](std::size_t v1) {
      if (v1 < v0) return;
      d.out_set(v1).for_each([&](std::size_t v2) {
        if (v2 < v0 || d.adjacent(v0, v2)) return;
        if (by_parts && d.part_of(v2) != d.part_of(v0)) return;
        VertexSet last = d.out_set(v2);
        last &= into_v0;
        last.for_each([&](std::size_t v3) {
          if (v3 < v0 || v3 == v1 || d.adjacent(v1, v3)) return;
          out.push_back({v0, v1, v2, v3});
        });
      });
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

TypedWalkIndex::TypedWalkIndex(const Digraph& d)
    : closure_(reachability(d)), triangles_(find_triangles(d)), holes_(find_holes4(d)) {
  const std::size_t n = d.vertex_count();
  const BooleanMatrix reached_by = closure_.transposed();
  type1_ = BooleanMatrix(n);
  type2_ = BooleanMatrix(n);

  // Every cycle lies inside one strong component, and all cycles of a
  // component share the same "reaches it" and "reached from it" sets, so
  // only the components matter.
  const auto comps = strongly_connected_components(d);
  std::vector<std::size_t> comp_of(n);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (auto v : comps[c]) comp_of[v] = c;
  std::vector<bool> has_triangle(comps.size(), false), has_hole(comps.size(), false);
  for (const auto& t : triangles_) has_triangle[comp_of[t[0]]] = true;
  for (const auto& h : holes_) has_hole[comp_of[h[0]]] = true;

  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (!has_triangle[c] && !has_hole[c]) continue;
    const std::size_t rep = comps[c].front();
    const auto forward = closure_.row(rep);
    reached_by.row_set(rep).for_each([&](std::size_t u) {
      if (has_triangle[c]) {
        auto row = type1_.row(u);
        for (std::size_t w = 0; w < row.size(); ++w) row[w] |= forward[w];
      }
      if (has_hole[c]) {
        auto row = type2_.row(u);
        for (std::size_t w = 0; w < row.size(); ++w) row[w] |= forward[w];
      }
    });
  }
}

bool has_typed_walk(const Digraph& d, std::size_t u, std::size_t w, WalkType type) {
  if (u >= d.vertex_count() || w >= d.vertex_count()) throw Error(ErrorCode::VertexOutOfRange, "walk endpoint out of range");
  return TypedWalkIndex(d).has_walk(u, w, type);
}

VertexType vertex_type(const Digraph& d, const SinkSequence& ss, std::size_t w) {
  return vertex_type(d, ss, TypedWalkIndex(d), w);
}

VertexType vertex_type(const Digraph& d, const SinkSequence& ss, const TypedWalkIndex& index, std::size_t w) {
  const std::size_t n = d.vertex_count();
  if (!d.is_multipartite_tournament() && !infer_multipartite(d))
    throw Error(ErrorCode::NotMultipartite, "vertex types need a multipartite tournament");
  if (is_acyclic(d)) throw Error(ErrorCode::NoDirectedCycle, "vertex types need a directed cycle");
  if (w >= n || !ss.eliminated(n).test(w))
    throw Error(ErrorCode::NotInU, "vertex " + std::to_string(w) + " is not in an eliminated sink layer");

  bool all1 = true, all2 = true;
  for (auto u : ss.residual[ss.zeta]) {
    const bool t1 = index.has_walk(u, w, WalkType::Type1);
    const bool t2 = index.has_walk(u, w, WalkType::Type2);
    if (!t1 && !t2)
      throw Error(ErrorCode::TheoremViolation,
                  "no typed walk from " + std::to_string(u) + " to " + std::to_string(w));
    all1 = all1 && t1;
    all2 = all2 && t2;
  }
  if (all1 && all2) return VertexType::Both;
  if (all1) return VertexType::Type1Only;
  if (all2) return VertexType::Type2Only;
  throw Error(ErrorCode::TheoremViolation,
              "vertex " + std::to_string(w) + " has neither a uniform Type 1 nor a uniform Type 2 source set");
}

std::vector<std::size_t> score_sequence(const Digraph& d) {
  if (!is_tournament(d)) throw Error(ErrorCode::NotTournament, "score sequences need a tournament");
  std::vector<std::size_t> scores(d.vertex_count());
  for (std::size_t v = 0; v < scores.size(); ++v) scores[v] = d.out_degree(v);
  std::sort(scores.begin(), scores.end());
  return scores;
}

std::int64_t frobenius(const std::vector<std::int64_t>& ps) {
  if (ps.empty()) throw Error(ErrorCode::InvalidArgument, "frobenius needs at least one generator");
  std::int64_t g = 0;
  for (auto p : ps) {
    if (p <= 0) throw Error(ErrorCode::InvalidArgument, "generators must be positive");
    g = std::gcd(g, p);
  }
  if (g != 1) throw Error(ErrorCode::NotCoprime, "generators have gcd " + std::to_string(g));
  const std::int64_t a = *std::min_element(ps.begin(), ps.end());
  if (a == 1) return -1;

  // dist[r] = least representable value congruent to r mod a (Dijkstra on residues).
  constexpr auto kInf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist(static_cast<std::size_t>(a), kInf);
  using Item = std::pair<std::int64_t, std::int64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [value, r] = queue.top();
    queue.pop();
    if (value != dist[static_cast<std::size_t>(r)]) continue;
    for (auto p : ps) {
      const std::int64_t next = value + p;
      const auto slot = static_cast<std::size_t>(next % a);
      if (next < dist[slot]) {
        dist[slot] = next;
        queue.emplace(next, next % a);
      }
    }
  }
  return *std::max_element(dist.begin(), dist.end()) - a;
}

}  // namespace compidx
