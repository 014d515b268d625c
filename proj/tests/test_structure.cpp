#include <doctest.h>

#include <numeric>

#include "compidx/error.hpp"
#include "compidx/generators.hpp"
#include "compidx/sink_analysis.hpp"
#include "compidx/structure.hpp"
#include "oracles.hpp"

using namespace compidx;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

// Does some walk from u to w of length <= limit visit every vertex of `cycle`?
bool walk_covers(const Digraph& d, std::size_t u, std::size_t w, const std::vector<std::size_t>& cycle, std::size_t limit) {
  const auto out = oracle::out_lists(d);
  std::vector<std::size_t> pos(d.vertex_count(), cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i) pos[cycle[i]] = i;
  const std::size_t full = (std::size_t{1} << cycle.size()) - 1;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<std::pair<std::size_t, std::size_t>> frontier;
  auto add = [&](std::size_t mask, std::size_t v) {
    if (pos[v] < cycle.size()) mask |= std::size_t{1} << pos[v];
    if (seen.emplace(mask, v).second) frontier.emplace_back(mask, v);
  };
  add(0, u);
  for (std::size_t len = 0; len <= limit && !frontier.empty(); ++len) {
    std::vector<std::pair<std::size_t, std::size_t>> next;
    std::swap(next, frontier);
    for (auto [mask, v] : next) {
      if (mask == full && v == w) return true;
      for (auto x : out[v]) add(mask, x);
    }
  }
  for (auto [mask, v] : seen)
    if (mask == full && v == w) return true;
  return false;
}

Digraph both_instance() {
  return Digraph::build(6, {{0, 2}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {2, 1}, {2, 5}, {3, 0}, {3, 5}, {5, 1}, {5, 4}},
                        Partition{0, 0, 1, 1, 1, 2}, true);
}

}  // namespace

TEST_CASE("triangles of a small tournament") {
  auto d = Digraph::build(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 1}, {2, 3}});
  CHECK(find_triangles(d) == std::vector<Triangle>{{0, 1, 2}, {1, 2, 3}});
  CHECK(find_holes4(d).empty());
  CHECK(find_triangles(gen_transitive_tournament(6)).empty());
}

TEST_CASE("a 4-cycle in a bipartite tournament is a hole") {
  auto d = Digraph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, Partition{0, 1, 0, 1}, true);
  CHECK(find_holes4(d) == std::vector<Hole>{{0, 1, 2, 3}});
  auto chorded = Digraph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  CHECK(find_holes4(chorded).empty());
}

TEST_CASE("typed walks agree with bounded walk search") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto d = gen_random_kpartite({2, 2, 2}, Seed{seed});
    const TypedWalkIndex index(d);
    for (std::size_t u = 0; u < 6; ++u)
      for (std::size_t w = 0; w < 6; ++w) {
        bool t1 = false, t2 = false;
        for (const auto& t : index.triangles()) t1 = t1 || walk_covers(d, u, w, {t[0], t[1], t[2]}, 20);
        for (const auto& h : index.holes()) t2 = t2 || walk_covers(d, u, w, {h[0], h[1], h[2], h[3]}, 20);
        CHECK(index.has_walk(u, w, WalkType::Type1) == t1);
        CHECK(index.has_walk(u, w, WalkType::Type2) == t2);
      }
  }
}

TEST_CASE("vertex types") {
  auto tri = Digraph::build(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}}, Partition{0, 1, 2, 2}, true);
  auto ss = sink_sequence(tri);
  CHECK(vertex_type(tri, ss, 3) == VertexType::Type1Only);
  CHECK(code_of([&] { vertex_type(tri, ss, 0); }) == ErrorCode::NotInU);

  auto both = both_instance();
  auto bss = sink_sequence(both);
  CHECK(bss.eliminated(6).members() == std::vector<std::size_t>{4});
  CHECK(vertex_type(both, bss, 4) == VertexType::Both);

  auto acyclic = gen_transitive_tournament(4);
  CHECK(code_of([&] { vertex_type(acyclic, sink_sequence(acyclic), 0); }) == ErrorCode::NoDirectedCycle);
  auto not_mp = Digraph::build(3, {{0, 1}});
  CHECK(code_of([&] { vertex_type(not_mp, sink_sequence(not_mp), 1); }) == ErrorCode::NotMultipartite);
}

TEST_CASE("score sequences") {
  CHECK(score_sequence(gen_transitive_tournament(4)) == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(code_of([] { score_sequence(gen_random_kpartite({2, 1}, Seed{1})); }) == ErrorCode::NotTournament);
}

TEST_CASE("frobenius numbers") {
  CHECK(frobenius({3, 4}) == 5);
  CHECK(frobenius({2, 3}) == 1);
  CHECK(frobenius({3, 4, 5}) == 2);
  CHECK(frobenius({1, 7}) == -1);
  CHECK(frobenius({6, 10, 15}) == 29);
  CHECK(code_of([] { frobenius({4, 6}); }) == ErrorCode::NotCoprime);
  CHECK(code_of([] { frobenius({}); }) == ErrorCode::InvalidArgument);
  for (std::int64_t a = 2; a <= 12; ++a)
    for (std::int64_t b = a + 1; b <= 13; ++b)
      if (std::gcd(a, b) == 1) CHECK(frobenius({a, b}) == a * b - a - b);
}
