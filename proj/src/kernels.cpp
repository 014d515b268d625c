#include "compidx/kernels.hpp"

#include <omp.h>

#include "compidx/error.hpp"
#include "compidx/simple_graph.hpp"

namespace compidx::kernels {

namespace {

void require_same_size(const BooleanMatrix& a, const BooleanMatrix& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "operand dimensions differ");
}

// Row i of the product is the OR of the rows of b selected by row i of a.
inline void multiply_row(const BooleanMatrix& a, const BooleanMatrix& b, BooleanMatrix& c, std::size_t i) {
  auto out = c.row(i);
  auto sel = a.row(i);
  const std::size_t stride = a.stride();
  for (std::size_t w = 0; w < stride; ++w) {
    Word bits = sel[w];
    while (bits != 0) {
      const std::size_t t = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
      auto src = b.row(t);
      for (std::size_t k = 0; k < stride; ++k) out[k] |= src[k];
      bits &= bits - 1;
    }
  }
}

inline bool rows_meet(std::span<const Word> x, std::span<const Word> y) {
  for (std::size_t k = 0; k < x.size(); ++k)
    if ((x[k] & y[k]) != 0) return true;
  return false;
}

inline void row_graph_row(const BooleanMatrix& a, BooleanMatrix& adj, std::size_t i) {
  const std::size_t n = a.size();
  auto ri = a.row(i);
  for (std::size_t j = 0; j < n; ++j)
    if (j != i && rows_meet(ri, a.row(j))) adj.set(i, j);
}

}  // namespace

BooleanMatrix multiply_reference(const BooleanMatrix& a, const BooleanMatrix& b) {
  require_same_size(a, b);
  const std::size_t n = a.size();
  BooleanMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < n; ++t)
        if (a.get(i, t) && b.get(t, j)) {
          c.set(i, j);
          break;
        }
  return c;
}

BooleanMatrix multiply_serial(const BooleanMatrix& a, const BooleanMatrix& b) {
  require_same_size(a, b);
  BooleanMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) multiply_row(a, b, c, i);
  return c;
}

BooleanMatrix multiply_omp(const BooleanMatrix& a, const BooleanMatrix& b) {
  require_same_size(a, b);
  const auto n = static_cast<std::ptrdiff_t>(a.size());
  BooleanMatrix c(a.size());
  // Rows are disjoint word ranges of c, so no synchronisation is needed.
#pragma omp parallel for schedule(static) if (!omp_in_parallel())
  for (std::ptrdiff_t i = 0; i < n; ++i) multiply_row(a, b, c, static_cast<std::size_t>(i));
  return c;
}

SimpleGraph row_graph_reference(const BooleanMatrix& a) {
  const std::size_t n = a.size();
  SimpleGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t c = 0; c < n; ++c)
        if (a.get(i, c) && a.get(j, c)) {
          g.add_edge(i, j);
          break;
        }
  return g;
}

SimpleGraph row_graph_serial(const BooleanMatrix& a) {
  SimpleGraph g(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) row_graph_row(a, g.adjacency(), i);
  return g;
}

SimpleGraph row_graph_omp(const BooleanMatrix& a) {
  SimpleGraph g(a.size());
  const auto n = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for schedule(static) if (!omp_in_parallel())
  for (std::ptrdiff_t i = 0; i < n; ++i) row_graph_row(a, g.adjacency(), static_cast<std::size_t>(i));
  return g;
}

}  // namespace compidx::kernels
