#include <doctest.h>

#include <random>

#include "compidx/kernels.hpp"
#include "compidx/simple_graph.hpp"

using namespace compidx;

namespace {

BooleanMatrix random_matrix(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  BooleanMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (coin(rng)) a.set(i, j);
  return a;
}

}  // namespace

TEST_CASE("multiply kernels agree with the bitwise reference") {
  std::mt19937_64 rng(42);
  for (std::size_t n : {1, 2, 7, 63, 64, 65, 130, 300}) {
    for (double density : {0.02, 0.2, 0.7}) {
      auto a = random_matrix(n, density, rng);
      auto b = random_matrix(n, density, rng);
      const auto ref = kernels::multiply_reference(a, b);
      CHECK(kernels::multiply_serial(a, b) == ref);
      CHECK(kernels::multiply_omp(a, b) == ref);
      CHECK(bool_multiply(a, b) == ref);
    }
  }
}

TEST_CASE("row graph kernels agree with the bitwise reference") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {1, 5, 64, 129, 280}) {
    for (double density : {0.01, 0.1, 0.5}) {
      auto a = random_matrix(n, density, rng);
      const auto ref = kernels::row_graph_reference(a);
      CHECK(kernels::row_graph_serial(a) == ref);
      CHECK(kernels::row_graph_omp(a) == ref);
      CHECK(row_graph(a) == ref);
    }
  }
}

TEST_CASE("row graph has no loops and is symmetric") {
  std::mt19937_64 rng(3);
  auto g = kernels::row_graph_omp(random_matrix(90, 0.3, rng));
  for (std::size_t u = 0; u < 90; ++u) {
    CHECK_FALSE(g.adjacent(u, u));
    for (std::size_t v = 0; v < 90; ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
  }
}
