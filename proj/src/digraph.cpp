#include "compidx/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "compidx/error.hpp"

namespace compidx {

namespace {

std::string arc_text(std::size_t u, std::size_t v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Classes of the transitive closure of non-adjacency, ids by least member.
Partition non_adjacency_classes(const BooleanMatrix& out) {
  const std::size_t n = out.size();
  DisjointSets sets(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!out.get(u, v) && !out.get(v, u)) sets.unite(u, v);
  Partition part(n, -1);
  int next = 0;
  std::vector<int> id_of_root(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    auto r = sets.find(v);
    if (id_of_root[r] < 0) id_of_root[r] = next++;
    part[v] = id_of_root[r];
  }
  return part;
}

// First pair violating "independent parts, completely joined"; nullopt if none.
std::optional<std::pair<Arc, bool>> multipartite_violation(const BooleanMatrix& out, const Partition& part) {
  const std::size_t n = out.size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      const bool adj = out.get(u, v) || out.get(v, u);
      if (part[u] == part[v] && adj) return std::make_pair(Arc{u, v}, true);
      if (part[u] != part[v] && !adj) return std::make_pair(Arc{u, v}, false);
    }
  return std::nullopt;
}

}  // namespace

std::size_t count_parts(const Partition& partition) {
  if (partition.empty()) return 0;
  const int hi = *std::max_element(partition.begin(), partition.end());
  const int lo = *std::min_element(partition.begin(), partition.end());
  if (lo < 0) throw Error(ErrorCode::InvalidArgument, "part ids must be nonnegative");
  std::vector<bool> used(static_cast<std::size_t>(hi) + 1, false);
  for (int p : partition) used[static_cast<std::size_t>(p)] = true;
  if (std::find(used.begin(), used.end(), false) != used.end())
    throw Error(ErrorCode::InvalidArgument, "part ids must be contiguous 0..k-1");
  return used.size();
}

Digraph Digraph::build(std::size_t n, const std::vector<Arc>& arcs, std::optional<Partition> partition,
                       bool require_multipartite) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "a digraph needs at least one vertex");
  Digraph d;
  d.out_ = BooleanMatrix(n);
  d.in_ = BooleanMatrix(n);
  for (auto [u, v] : arcs) {
    if (u >= n || v >= n) throw Error(ErrorCode::VertexOutOfRange, arc_text(u, v) + " with n=" + std::to_string(n));
    if (u == v) throw Error(ErrorCode::LoopArc, arc_text(u, v));
    d.out_.set(u, v);
    d.in_.set(v, u);
  }
  for (auto [u, v] : arcs)
    if (d.out_.get(v, u)) throw Error(ErrorCode::DigonArc, arc_text(std::min(u, v), std::max(u, v)) + " both ways");

  if (partition) {
    if (partition->size() != n)
      throw Error(ErrorCode::InvalidArgument,
                  "partition lists " + std::to_string(partition->size()) + " parts for " + std::to_string(n) + " vertices");
    d.part_count_ = count_parts(*partition);
    if (auto bad = multipartite_violation(d.out_, *partition)) {
      auto [arc, intra] = *bad;
      if (intra) throw Error(ErrorCode::IntraPartArc, "arc inside a part between " + std::to_string(arc.first) + " and " + std::to_string(arc.second));
      throw Error(ErrorCode::MissingCrossArc, "no arc between " + std::to_string(arc.first) + " and " + std::to_string(arc.second));
    }
    d.partition_ = std::move(partition);
  } else if (require_multipartite) {
    auto inferred = non_adjacency_classes(d.out_);
    if (auto bad = multipartite_violation(d.out_, inferred)) {
      auto arc = bad->first;
      throw Error(ErrorCode::NotMultipartite, "vertices " + std::to_string(arc.first) + " and " + std::to_string(arc.second) +
                                                  " are forced into one part but adjacent");
    }
    d.part_count_ = count_parts(inferred);
    d.partition_ = std::move(inferred);
  }
  return d;
}

std::size_t Digraph::out_degree(std::size_t v) const noexcept {
  std::size_t c = 0;
  for (Word w : out_.row(v)) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t Digraph::in_degree(std::size_t v) const noexcept {
  std::size_t c = 0;
  for (Word w : in_.row(v)) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count());
  for (std::size_t u = 0; u < vertex_count(); ++u)
    out_.row_set(u).for_each([&](std::size_t v) { out.emplace_back(u, v); });
  return out;
}

Digraph Digraph::induced(const VertexSet& keep) const {
  const auto members = keep.members();
  std::vector<std::size_t> index(vertex_count(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = i;
  std::vector<Arc> arcs;
  for (auto u : members)
    out_.row_set(u).for_each([&](std::size_t v) {
      if (keep.test(v)) arcs.emplace_back(index[u], index[v]);
    });
  return build(members.size(), arcs);
}

std::optional<Partition> infer_multipartite(const Digraph& d) {
  auto part = non_adjacency_classes(d.adjacency());
  if (multipartite_violation(d.adjacency(), part)) return std::nullopt;
  return part;
}

bool is_tournament(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  return d.arc_count() == n * (n - 1) / 2 && [&] {
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (!d.adjacent(u, v)) return false;
    return true;
  }();
}

}  // namespace compidx
