#include <doctest.h>

#include "compidx/error.hpp"
#include "compidx/generators.hpp"
#include "compidx/sink_analysis.hpp"
#include "oracles.hpp"

using namespace compidx;

TEST_CASE("transitive tournament peels one vertex per step") {
  auto ss = sink_sequence(gen_transitive_tournament(4));
  CHECK(ss.zeta == 3);
  CHECK(ss.terminal == TerminalKind::AllSinks);
  CHECK(ss.layers == std::vector<std::vector<std::size_t>>{{0}, {1}, {2}, {3}});
  CHECK(ss.residual.back() == std::vector<std::size_t>{3});
}

TEST_CASE("a sink hanging off a cycle") {
  auto d = Digraph::build(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
  auto ss = sink_sequence(d);
  CHECK(ss.zeta == 1);
  CHECK(ss.terminal == TerminalKind::Empty);
  CHECK(ss.layers.front() == std::vector<std::size_t>{3});
  CHECK(ss.layers.back().empty());
  CHECK(ss.residual[1] == std::vector<std::size_t>{0, 1, 2});
  CHECK(ss.eliminated(4).members() == std::vector<std::size_t>{3});
  CHECK(ss.core(4).count() == 3);
  CHECK_FALSE(is_acyclic(d));
}

TEST_CASE("sink-free digraph stops at once") {
  auto ss = sink_sequence(Digraph::build(3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK(ss.zeta == 0);
  CHECK(ss.terminal == TerminalKind::Empty);
  CHECK(ss.layers.size() == 1);
}

TEST_CASE("edgeless digraph is all sinks") {
  auto ss = sink_sequence(Digraph::build(3, {}));
  CHECK(ss.zeta == 0);
  CHECK(ss.terminal == TerminalKind::AllSinks);
  CHECK(ss.layers.front().size() == 3);
}

TEST_CASE("sink layers match repeated deletion on every 5-tournament") {
  for (std::uint64_t bits = 0; bits < 1024; ++bits) {
    auto d = oracle::tournament(5, bits);
    auto ss = sink_sequence(d);
    CHECK(ss.layers == oracle::sink_layers(d));
    CHECK(ss.zeta + 1 == ss.layers.size());
  }
}

TEST_CASE("walk spectrum") {
  auto d = gen_transitive_tournament(4);
  auto ss = sink_sequence(d);
  for (std::size_t i = 0; i < ss.layers.size(); ++i)
    for (auto v : ss.layers[i]) {
      auto spec = walk_length_spectrum(d, v, 4);
      CHECK_FALSE(spec.unbounded);
      CHECK(spec.lengths.size() == i + 1);
      CHECK(spec.lengths.back() == i);
    }
  auto cyc = Digraph::build(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
  CHECK(walk_length_spectrum(cyc, 1, 4).unbounded);
  CHECK(walk_length_spectrum(cyc, 3, 4).lengths == std::vector<std::size_t>{0});
  CHECK_THROWS_AS(walk_length_spectrum(cyc, 9, 4), Error);
}
