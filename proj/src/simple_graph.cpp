#include "compidx/simple_graph.hpp"

#include <algorithm>
#include <functional>

#include "compidx/error.hpp"
#include "compidx/kernels.hpp"

namespace compidx {

SimpleGraph SimpleGraph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  SimpleGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

SimpleGraph SimpleGraph::clique_on(std::size_t n, const VertexSet& clique) {
  SimpleGraph g(n);
  const auto members = clique.members();
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b) g.add_edge(members[a], members[b]);
  return g;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  const std::size_t n = vertex_count();
  if (u >= n || v >= n) throw Error(ErrorCode::VertexOutOfRange, "edge endpoint out of range");
  if (u == v) throw Error(ErrorCode::LoopArc, "simple graphs have no loops");
  adj_.set(u, v);
  adj_.set(v, u);
}

bool SimpleGraph::is_complete() const noexcept {
  const std::size_t n = vertex_count();
  return edge_count() == n * (n == 0 ? 0 : n - 1) / 2;
}

std::size_t SimpleGraph::degree(std::size_t v) const noexcept {
  std::size_t d = 0;
  for (Word w : adj_.row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  const std::size_t n = vertex_count();
  for (std::size_t u = 0; u < n; ++u) {
    adj_.row_set(u).for_each([&](std::size_t v) {
      if (v > u) out.emplace_back(u, v);
    });
  }
  return out;
}

bool SimpleGraph::is_subgraph_of(const SimpleGraph& other) const noexcept {
  auto mine = adj_.raw();
  auto theirs = other.adj_.raw();
  for (std::size_t i = 0; i < mine.size(); ++i)
    if ((mine[i] & ~theirs[i]) != 0) return false;
  return true;
}

SimpleGraph SimpleGraph::complement() const {
  const std::size_t n = vertex_count();
  SimpleGraph c(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!adjacent(u, v)) c.add_edge(u, v);
  return c;
}

SimpleGraph row_graph(const BooleanMatrix& a) {
  if (a.size() >= kernels::kParallelThreshold) return kernels::row_graph_omp(a);
  return kernels::row_graph_serial(a);
}

std::vector<std::size_t> missing_degree_profile(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t missing = (n - 1) - g.degree(v);
    if (missing > 0) out.push_back(missing);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool is_complete_minus_path(const SimpleGraph& g, std::size_t path_vertices) {
  const std::size_t n = g.vertex_count();
  if (path_vertices < 2 || path_vertices > n) return false;
  if (n * (n - 1) / 2 - g.edge_count() != path_vertices - 1) return false;
  std::vector<std::size_t> expected(path_vertices - 2, 2);
  expected.push_back(1);
  expected.push_back(1);
  if (missing_degree_profile(g) != expected) return false;
  if (path_vertices <= 4) return true;
  // Past four vertices the multiset also fits a shorter path plus a cycle, so
  // the missing edges must form one component.
  const SimpleGraph missing = g.complement();
  std::size_t start = 0;
  while (missing.degree(start) != 1) ++start;
  VertexSet seen(n);
  std::vector<std::size_t> stack{start};
  seen.set(start);
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    missing.adjacency().row_set(v).for_each([&](std::size_t w) {
      if (!seen.test(w)) {
        seen.set(w);
        stack.push_back(w);
      }
    });
  }
  return seen.count() == path_vertices;
}

bool is_complete_minus_triangle(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3) return false;
  if (n * (n - 1) / 2 - g.edge_count() != 3) return false;
  return missing_degree_profile(g) == std::vector<std::size_t>{2, 2, 2};
}

bool is_clique_plus_isolated(const SimpleGraph& g, std::size_t clique_size) {
  const std::size_t n = g.vertex_count();
  if (clique_size > n) return false;
  if (g.edge_count() != clique_size * (clique_size == 0 ? 0 : clique_size - 1) / 2) return false;
  if (clique_size <= 1) return true;
  std::size_t in_clique = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t d = g.degree(v);
    if (d == 0) continue;
    if (d != clique_size - 1) return false;
    ++in_clique;
  }
  return in_clique == clique_size;
}

std::string describe_shape(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (g.is_complete()) return "K_n";
  if (g.empty()) return "I_n";
  for (std::size_t t = 2; t <= std::min<std::size_t>(n, 4); ++t)
    if (is_complete_minus_path(g, t)) return "K_n-P_" + std::to_string(t);
  if (is_complete_minus_triangle(g)) return "K_n-C_3";
  for (std::size_t a = 2; a < n; ++a)
    if (is_clique_plus_isolated(g, a)) return "K_" + std::to_string(a) + "+I_" + std::to_string(n - a);
  return "edges=" + std::to_string(g.edge_count());
}

}  // namespace compidx
