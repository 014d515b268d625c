#pragma once

// Boolean matrix kernels in three flavours:
//   *_reference  bit-at-a-time triple loop, kept as the ground truth for tests
//   *_serial     word-parallel row OR / row AND, the default path
//   *_omp        the serial kernel with rows split across OpenMP threads
//
// All three produce identical results for every input.

#include <cstddef>

#include "compidx/bool_matrix.hpp"

namespace compidx {
class SimpleGraph;
}

namespace compidx::kernels {

/// Dimension at which bool_multiply() and row_graph() hand off to the OpenMP kernels.
inline constexpr std::size_t kParallelThreshold = 256;

BooleanMatrix multiply_reference(const BooleanMatrix& a, const BooleanMatrix& b);
BooleanMatrix multiply_serial(const BooleanMatrix& a, const BooleanMatrix& b);
BooleanMatrix multiply_omp(const BooleanMatrix& a, const BooleanMatrix& b);

SimpleGraph row_graph_reference(const BooleanMatrix& a);
SimpleGraph row_graph_serial(const BooleanMatrix& a);
SimpleGraph row_graph_omp(const BooleanMatrix& a);

}  // namespace compidx::kernels
