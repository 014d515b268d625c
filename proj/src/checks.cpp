#include "compidx/checks.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <sstream>

#include "compidx/competition.hpp"
#include "compidx/connectivity.hpp"
#include "compidx/error.hpp"
#include "compidx/sink_analysis.hpp"
#include "compidx/structure.hpp"

namespace compidx {

namespace {

constexpr std::array<std::string_view, 23> kNames = {
    "P2.1", "L2.2", "T2.3", "T2.4", "C2.5", "C2.6", "L2.7", "T2.8", "P3.1", "L3.3", "L3.4", "L3.5",
    "L3.6", "L3.7", "T3.8", "T3.9", "P4.1", "T4.2", "P4.3", "T5.1", "P5.2", "C5.3", "T5.4",
};

std::string list_text(const std::vector<std::size_t>& vs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
  out << '}';
  return out.str();
}

std::string edges_text(const SimpleGraph& g) {
  std::ostringstream out;
  out << '[';
  bool first = true;
  for (auto [u, v] : g.edges()) {
    out << (first ? "" : " ") << u << '-' << v;
    first = false;
  }
  out << ']';
  return out.str();
}

VertexSet set_of(std::size_t n, const std::vector<std::size_t>& vs) {
  VertexSet s(n);
  for (auto v : vs) s.set(v);
  return s;
}

// Lengths 0..63 as a bitmask per ordered pair.
using LengthMask = std::uint64_t;

// Shared per-instance analysis; everything is computed on first use.
class Context {
 public:
  Context(const Digraph& d, const Caps& caps) : d_(d), caps_(caps), n_(d.vertex_count()) {}

  const Digraph& d() const { return d_; }
  std::size_t n() const { return n_; }
  const Caps& caps() const { return caps_; }

  const SinkSequence& ss() {
    if (!ss_) ss_ = sink_sequence(d_);
    return *ss_;
  }
  bool acyclic() {
    if (!acyclic_) acyclic_ = is_acyclic(d_);
    return *acyclic_;
  }
  bool has_sink() {
    for (std::size_t v = 0; v < n_; ++v)
      if (d_.out_degree(v) == 0) return true;
    return false;
  }
  const std::optional<Partition>& parts() {
    if (!parts_done_) {
      parts_ = infer_multipartite(d_);
      parts_done_ = true;
    }
    return parts_;
  }
  // Number of partite sets; 0 when d is not a multipartite tournament.
  std::size_t k() { return parts() ? count_parts(*parts()) : 0; }
  int part(std::size_t v) { return (*parts())[v]; }
  bool tournament() { return parts() && k() == n_; }

  const PowerSequence& powers() {
    if (!powers_) powers_ = std::make_unique<PowerSequence>(d_);
    return *powers_;
  }
  const CompetitionProfile& profile() {
    if (!profile_) profile_ = competition_profile(powers());
    return *profile_;
  }
  const SimpleGraph& graph(std::size_t m) { return powers().graph(m); }

  // Checks pred(C^t, t) for every t >= from, exactly: past max(from, index)
  // one full matrix period repeats forever.
  bool all_m_from(std::size_t from, const std::function<bool(const SimpleGraph&)>& pred, std::size_t* bad = nullptr) {
    const auto& ps = powers();
    const std::size_t stop = std::max(from, ps.index()) + ps.period();
    for (std::size_t t = from; t < stop; ++t)
      if (!pred(ps.graph(t))) {
        if (bad) *bad = t;
        return false;
      }
    return true;
  }

  // Least N >= 0 such that walk(u, w, base + step * m) holds for every m >= N,
  // or nullopt when infinitely many m fail.
  std::optional<std::size_t> pump_threshold(std::size_t u, std::size_t w, std::size_t base, std::size_t step) {
    const auto& ps = powers();
    auto walk = [&](std::size_t len) { return len == 0 ? u == w : ps.walk(u, w, len); };
    std::size_t m0 = 0;
    if (base < ps.index()) m0 = (ps.index() - base + step - 1) / step;
    for (std::size_t m = m0; m < m0 + ps.period(); ++m)
      if (!walk(base + step * m)) return std::nullopt;
    std::size_t N = m0;
    while (N > 0 && walk(base + step * (N - 1))) --N;
    return N;
  }

  const TypedWalkIndex& typed() {
    if (!typed_) typed_ = std::make_unique<TypedWalkIndex>(d_);
    return *typed_;
  }

  std::size_t witness_max() const { return std::min<std::size_t>(2 * n_ + caps_.witness_slack, 63); }

  // Exact lengths (<= witness_max) of typed (u, w)-walks, by a layered DP
  // over (endpoint, visited subset of the cycle) with start sets as bitmasks.
  struct TypedLengths {
    std::vector<LengthMask> type1;
    std::vector<LengthMask> type2;
    std::vector<LengthMask> type2_off_parts;  // hole whose two parts both miss w
  };
  const TypedLengths& typed_lengths() {
    if (typed_lengths_) return *typed_lengths_;
    TypedLengths out;
    out.type1.assign(n_ * n_, 0);
    out.type2.assign(n_ * n_, 0);
    out.type2_off_parts.assign(n_ * n_, 0);
    for (const auto& t : typed().triangles()) scan_cycle(std::vector<std::size_t>(t.begin(), t.end()), [&](std::size_t u, std::size_t w, std::size_t len) {
        out.type1[u * n_ + w] |= LengthMask{1} << len;
      });
    for (const auto& h : typed().holes()) {
      const int x = part(h[0]), y = part(h[1]);
      scan_cycle(std::vector<std::size_t>(h.begin(), h.end()), [&](std::size_t u, std::size_t w, std::size_t len) {
        out.type2[u * n_ + w] |= LengthMask{1} << len;
        if (part(w) != x && part(w) != y) out.type2_off_parts[u * n_ + w] |= LengthMask{1} << len;
      });
    }
    typed_lengths_ = std::move(out);
    return *typed_lengths_;
  }

 private:
  template <typename Record>
  void scan_cycle(const std::vector<std::size_t>& cycle, Record&& record) {
    const std::size_t c = cycle.size();
    const std::size_t full = (std::size_t{1} << c) - 1;
    std::vector<int> pos(n_, -1);
    for (std::size_t i = 0; i < c; ++i) pos[cycle[i]] = static_cast<int>(i);
    auto bit = [&](std::size_t v) { return pos[v] < 0 ? std::size_t{0} : std::size_t{1} << pos[v]; };
    // cur[mask * n + v] = set of starts with a walk ending at v that has visited `mask` of the cycle.
    std::vector<std::uint64_t> cur((full + 1) * n_, 0), next;
    for (std::size_t u = 0; u < n_; ++u) cur[bit(u) * n_ + u] |= std::uint64_t{1} << u;
    const auto arcs = d_.arcs();
    for (std::size_t len = 0;; ++len) {
      for (std::size_t v = 0; v < n_; ++v) {
        std::uint64_t starts = cur[full * n_ + v];
        while (starts != 0) {
          const auto u = static_cast<std::size_t>(std::countr_zero(starts));
          starts &= starts - 1;
          record(u, v, len);
        }
      }
      if (len == witness_max()) break;
      next.assign(cur.size(), 0);
      for (std::size_t mask = 0; mask <= full; ++mask)
        for (auto [v, w] : arcs)
          if (cur[mask * n_ + v] != 0) next[(mask | bit(w)) * n_ + w] |= cur[mask * n_ + v];
      cur.swap(next);
    }
  }

  const Digraph& d_;
  Caps caps_;
  std::size_t n_;
  std::optional<SinkSequence> ss_;
  std::optional<bool> acyclic_;
  std::optional<Partition> parts_;
  bool parts_done_ = false;
  std::unique_ptr<PowerSequence> powers_;
  std::optional<CompetitionProfile> profile_;
  std::unique_ptr<TypedWalkIndex> typed_;
  std::optional<TypedLengths> typed_lengths_;
};

struct Verdict {
  ClaimResult& r;
  // Records the first failure only; later checks keep running for observations.
  void fail(const std::string& why) {
    if (r.passed) {
      r.passed = false;
      r.witness = why;
    }
  }
  // `why` is a callable so failure text is only built for failures.
  template <typename Why>
  void check(bool ok, Why&& why) {
    if (!ok) fail(why());
  }
};

void applicable(ClaimResult& r) {
  r.applicable = true;
  r.passed = true;
}

// ---- acyclic digraphs ----------------------------------------------------

void check_p2_1(Context& c, ClaimResult& r) {
  applicable(r);
  Verdict v{r};
  const auto& ss = c.ss();
  const bool acyclic = c.acyclic();
  const bool all_sinks = ss.terminal == TerminalKind::AllSinks;
  const bool last_full = !ss.layers[ss.zeta].empty() && ss.layers[ss.zeta] == ss.residual[ss.zeta];
  std::size_t covered = 0;
  for (const auto& layer : ss.layers) covered += layer.size();
  v.check(acyclic == all_sinks, [&] { return std::string("terminal kind disagrees with acyclicity"); });
  v.check(acyclic == last_full, [&] { return std::string("W_zeta = V(D_zeta) disagrees with acyclicity"); });
  v.check(acyclic == (covered == c.n()), [&] { return std::string("union of layers disagrees with acyclicity"); });
}

void check_l2_2(Context& c, ClaimResult& r) {
  const auto& ss = c.ss();
  const bool acyclic = c.acyclic();
  if (ss.zeta == 0 && !acyclic) return;
  applicable(r);
  Verdict v{r};
  const std::size_t top = acyclic ? ss.zeta : ss.zeta - 1;
  for (std::size_t i = 0; i <= top; ++i) {
    WalkSpectrum expected;
    for (std::size_t len = 0; len <= i; ++len) expected.lengths.push_back(len);
    for (auto w : ss.layers[i]) {
      const auto got = walk_length_spectrum(c.d(), w, c.n());
      v.check(got == expected, [&] { return std::string("vertex " + std::to_string(w) + " in W_" + std::to_string(i) + " has walk lengths other than 0.." +
                                   std::to_string(i)); });
    }
  }
}

void check_t2_3(Context& c, ClaimResult& r) {
  const auto& ss = c.ss();
  if (!c.acyclic() || ss.zeta < 1) return;
  applicable(r);
  Verdict v{r};
  const std::size_t n = c.n();
  const std::size_t zeta = ss.zeta;
  const auto& prof = c.profile();
  std::size_t bad = 0;
  v.check(c.all_m_from(zeta + 1, [](const SimpleGraph& g) { return g.empty(); }, &bad), [&] { return std::string("(i) C^" + std::to_string(bad) + " is not empty"); });
  v.check(prof.cperiod_literal == 1 && prof.eventual_graph_period == 1, [&] { return std::string("(ii) cperiod " + std::to_string(prof.cperiod_literal) + ", eventual " + std::to_string(prof.eventual_graph_period)); });
  bool singleton = false, smaller = false;
  for (std::size_t i = 0; i < zeta; ++i) {
    singleton = singleton || ss.layers[i].size() == 1;
    smaller = smaller || ss.layers[zeta].size() > ss.layers[i].size();
  }
  if (singleton) {
    const auto expected = SimpleGraph::clique_on(n, set_of(n, ss.layers[zeta]));
    v.check(c.graph(zeta) == expected, [&] { return std::string("(iii) C^zeta = " + edges_text(c.graph(zeta)) + " is not the clique on W_zeta"); });
  }
  v.check(prof.cindex <= zeta + 1, [&] { return std::string("(iv) cindex " + std::to_string(prof.cindex) + " > zeta+1"); });
  if (smaller) v.check(prof.cindex == zeta + 1, [&] { return std::string("(iv) cindex " + std::to_string(prof.cindex) + " != zeta+1 although |W_zeta| is larger"); });
}

bool acyclic_multipartite(Context& c, std::size_t k_min) { return c.acyclic() && c.parts() && c.k() >= k_min; }

// Part of a layer, or -1 when the layer spans several parts.
int layer_part(Context& c, const std::vector<std::size_t>& layer) {
  const int p = c.part(layer.front());
  for (auto v : layer)
    if (c.part(v) != p) return -1;
  return p;
}

void check_t2_4(Context& c, ClaimResult& r) {
  if (!acyclic_multipartite(c, 2)) return;
  applicable(r);
  Verdict v{r};
  const auto& ss = c.ss();
  const auto layer = ss.layer_of(c.n());
  for (std::size_t i = 0; i <= ss.zeta; ++i)
    v.check(layer_part(c, ss.layers[i]) >= 0, [&] { return std::string("(i) W_" + std::to_string(i) + " spans two parts"); });
  for (auto [a, b] : c.d().arcs()) {
    const int j = layer[a], i = layer[b];
    v.check(i < j && c.part(a) != c.part(b), [&] { return std::string("(ii) arc " + std::to_string(a) + "->" + std::to_string(b) + " from W_" + std::to_string(j) + " to W_" + std::to_string(i)); });
  }
  for (std::size_t i = 0; i < ss.zeta; ++i)
    for (auto a : ss.layers[i + 1])
      for (auto b : ss.layers[i])
        v.check(c.d().has_arc(a, b), [&] { return std::string("(iii) missing arc " + std::to_string(a) + "->" + std::to_string(b)); });
}

void check_c2_5(Context& c, ClaimResult& r) {
  if (!acyclic_multipartite(c, 2)) return;
  applicable(r);
  Verdict v{r};
  const auto& ss = c.ss();
  const std::size_t k = c.k();
  v.check(ss.zeta + 1 >= k, [&] { return std::string("zeta " + std::to_string(ss.zeta) + " < k-1 = " + std::to_string(k - 1)); });
  bool all_full = true;
  for (const auto& layer : ss.layers) {
    const int p = layer_part(c, layer);
    std::size_t part_size = 0;
    for (std::size_t u = 0; u < c.n(); ++u) part_size += c.part(u) == p ? 1 : 0;
    all_full = all_full && p >= 0 && part_size == layer.size();
  }
  v.check((ss.zeta + 1 == k) == all_full, [&] { return std::string(all_full ? "every layer is a full part but zeta != k-1" : "zeta = k-1 but some layer is not a full part"); });
  r.observations.push_back(ss.zeta + 1 == k ? "zeta=k-1" : "zeta>k-1");
}

void check_c2_6(Context& c, ClaimResult& r) {
  if (!acyclic_multipartite(c, 3)) return;
  applicable(r);
  const auto& ss = c.ss();
  bool found = false;
  for (std::size_t i = 0; i + 2 <= ss.zeta; ++i)
    found = found || layer_part(c, ss.layers[i]) != layer_part(c, ss.layers[i + 2]);
  Verdict{r}.check(found, [&] { return std::string("W_i and W_{i+2} share a part for every i"); });
}

void check_l2_7(Context& c, ClaimResult& r) {
  if (!acyclic_multipartite(c, 3)) return;
  applicable(r);
  Verdict v{r};
  const auto& ss = c.ss();
  const auto& ps = c.powers();
  std::vector<int> lp;
  for (const auto& layer : ss.layers) lp.push_back(layer_part(c, layer));
  for (std::size_t s = 1; s <= ss.zeta; ++s)
    for (std::size_t p = 1; p <= s; ++p)
      for (std::size_t q = 0; q < p; ++q) {
        if (lp[p] == lp[q]) continue;
        // Walks in an acyclic digraph are paths.
        const std::size_t len = s - p + q + 1;
        for (auto u : ss.layers[s])
          for (auto x : ss.layers[0])
            v.check(ps.walk(u, x, len), [&] { return std::string("no path of length " + std::to_string(len) + " from " + std::to_string(u) + " to " +
                                            std::to_string(x) + " (s,p,q)=(" + std::to_string(s) + "," + std::to_string(p) + "," +
                                            std::to_string(q) + ")"); });
      }
}

void check_t2_8(Context& c, ClaimResult& r) {
  if (!acyclic_multipartite(c, 3)) return;
  applicable(r);
  Verdict v{r};
  const auto& ss = c.ss();
  const std::size_t n = c.n();
  const std::size_t zeta = ss.zeta;
  if (zeta < 2) {
    v.fail("zeta " + std::to_string(zeta) + " < 2 for k >= 3");
    return;
  }
  const auto top = set_of(n, ss.layers[zeta]);
  v.check(c.graph(zeta) == SimpleGraph::clique_on(n, top), [&] { return std::string("(i) C^zeta = " + edges_text(c.graph(zeta))); });
  auto top_two = top;
  top_two |= set_of(n, ss.layers[zeta - 1]);
  v.check(c.graph(zeta - 1) == SimpleGraph::clique_on(n, top_two), [&] { return std::string("(ii) C^(zeta-1) = " + edges_text(c.graph(zeta - 1))); });
  const std::size_t expected = ss.layers[zeta].size() >= 2 ? zeta + 1 : zeta;
  v.check(c.profile().cindex == expected, [&] { return std::string("(iii) cindex " + std::to_string(c.profile().cindex) + ", expected " + std::to_string(expected)); });
  r.observations.push_back(ss.layers[zeta].size() >= 2 ? "cindex=zeta+1" : "cindex=zeta");
}

// ---- multipartite tournaments with sinks and cycles ----------------------

bool sink_and_cycle(Context& c) { return c.parts() && c.k() >= 2 && c.has_sink() && !c.acyclic(); }

bool cyclic_with_u(Context& c) { return c.parts() && c.k() >= 2 && !c.acyclic() && c.ss().zeta >= 1; }

void check_p3_1(Context& c, ClaimResult& r) {
  if (!sink_and_cycle(c)) return;
  applicable(r);
  std::size_t bad = 0;
  Verdict{r}.check(c.all_m_from(1, [](const SimpleGraph& g) { return !g.empty(); }, &bad), [&] { return std::string("C^" + std::to_string(bad) + " is empty"); });
}

void check_l3_3(Context& c, ClaimResult& r) {
  const std::size_t n = c.n();
  if (!c.parts() || c.k() < 2 || n < 3 || n > c.caps().walk_enum_n_max || n > 20) return;
  applicable(r);
  Verdict v{r};
  const auto& idx = c.typed();
  const std::size_t masks = std::size_t{1} << n;
  std::vector<bool> typed(masks, false);
  for (std::size_t mask = 0; mask < masks; ++mask) {
    for (const auto& t : idx.triangles()) {
      const std::size_t need = (std::size_t{1} << t[0]) | (std::size_t{1} << t[1]) | (std::size_t{1} << t[2]);
      if ((mask & need) == need) typed[mask] = true;
    }
    for (const auto& h : idx.holes()) {
      std::size_t need = 0;
      for (auto x : h) need |= std::size_t{1} << x;
      if ((mask & need) == need) typed[mask] = true;
    }
  }
  // Every walk is summarised by (endpoint, visited set); typed states stay
  // typed, so only untyped states are carried forward.
  std::vector<char> cur(masks * n, 0), next;
  for (std::size_t u = 0; u < n; ++u)
    if (!typed[std::size_t{1} << u]) cur[(std::size_t{1} << u) * n + u] = 1;
  for (std::size_t len = 0; len <= 2 * n; ++len) {
    bool any = false;
    for (std::size_t s = 0; s < cur.size(); ++s) {
      if (!cur[s]) continue;
      any = true;
      if (len >= n) {
        v.fail("untyped walk of length " + std::to_string(len) + " ending at " + std::to_string(s % n) + " over vertex mask " +
               std::to_string(s / n));
        return;
      }
    }
    if (!any) break;
    next.assign(cur.size(), 0);
    for (std::size_t s = 0; s < cur.size(); ++s) {
      if (!cur[s]) continue;
      const std::size_t mask = s / n, at = s % n;
      c.d().out_set(at).for_each([&](std::size_t w) {
        const std::size_t m2 = mask | (std::size_t{1} << w);
        if (!typed[m2]) next[m2 * n + w] = 1;
      });
    }
    cur.swap(next);
  }

  // Cross-check the reachability reduction against the exact length DP.
  const auto& lens = c.typed_lengths();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = 0; w < n; ++w) {
      v.check(idx.has_walk(u, w, WalkType::Type1) == (lens.type1[u * n + w] != 0), [&] { return std::string("type 1 reachability and walk DP disagree on (" + std::to_string(u) + "," + std::to_string(w) + ")"); });
      v.check(idx.has_walk(u, w, WalkType::Type2) == (lens.type2[u * n + w] != 0), [&] { return std::string("type 2 reachability and walk DP disagree on (" + std::to_string(u) + "," + std::to_string(w) + ")"); });
    }
}

std::string pair_text(std::size_t u, std::size_t w, std::size_t len) {
  return "(" + std::to_string(u) + "," + std::to_string(w) + ") length " + std::to_string(len);
}

bool typed_pumping_ready(Context& c) { return c.parts() && c.k() >= 2 && c.n() <= 64 && !c.acyclic(); }

void check_l3_4(Context& c, ClaimResult& r) {
  if (!typed_pumping_ready(c) || c.typed().triangles().empty()) return;
  applicable(r);
  Verdict v{r};
  const std::size_t n = c.n();
  const auto& lens = c.typed_lengths();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = 0; w < n; ++w) {
      LengthMask ls = lens.type1[u * n + w];
      while (ls != 0) {
        const auto len = static_cast<std::size_t>(std::countr_zero(ls));
        ls &= ls - 1;
        const auto threshold = c.pump_threshold(u, w, len, 3);
        v.check(threshold && *threshold == 0, [&] { return std::string("type 1 walk " + pair_text(u, w, len) + " does not pump by every multiple of 3"); });
      }
    }
}

void check_l3_5(Context& c, ClaimResult& r) {
  if (!typed_pumping_ready(c) || c.typed().holes().empty() || c.ss().zeta < 1) return;
  const std::size_t n = c.n();
  const auto& lens = c.typed_lengths();
  const auto eliminated = c.ss().eliminated(n);
  const std::size_t cap = c.caps().pump_cap_for(n);
  bool via_second_only = false;
  Verdict v{r};
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = 0; w < n; ++w) {
      const LengthMask first = eliminated.test(w) ? lens.type2[u * n + w] : 0;
      const LengthMask second = lens.type2_off_parts[u * n + w];
      LengthMask ls = first | second;
      if (ls != 0 && !r.applicable) applicable(r);
      if ((second & ~first) != 0) via_second_only = true;
      while (ls != 0) {
        const auto len = static_cast<std::size_t>(std::countr_zero(ls));
        ls &= ls - 1;
        const auto threshold = c.pump_threshold(u, w, len, 2);
        v.check(threshold && len + 2 * *threshold <= cap, [&] { return std::string("type 2 walk " + pair_text(u, w, len) +
                                                              (threshold ? " pumps by 2 only from length " + std::to_string(len + 2 * *threshold)
                                                                         : " does not pump by 2")); });
      }
    }
  if (via_second_only) r.observations.push_back("hypothesis(ii)");
}

// u reaches a triangle component then a hole component then w, or the other way round.
bool mixed_witness(Context& c, std::size_t u, std::size_t w) {
  const auto& idx = c.typed();
  const auto& reach = idx.closure();
  for (const auto& t : idx.triangles())
    for (const auto& h : idx.holes()) {
      const std::size_t a = t[0], b = h[0];
      if (reach.get(u, a) && reach.get(a, b) && reach.get(b, w)) return true;
      if (reach.get(u, b) && reach.get(b, a) && reach.get(a, w)) return true;
    }
  return false;
}

void check_l3_6(Context& c, ClaimResult& r) {
  if (!cyclic_with_u(c) || c.typed().triangles().empty() || c.typed().holes().empty()) return;
  const std::size_t n = c.n();
  const auto& ss = c.ss();
  const std::size_t cap = c.caps().pump_cap_for(n);
  Verdict v{r};
  for (auto u : ss.residual[ss.zeta])
    for (std::size_t i = 0; i < ss.zeta; ++i)
      for (auto w : ss.layers[i]) {
        if (!mixed_witness(c, u, w)) continue;
        if (!r.applicable) applicable(r);
        const auto threshold = c.pump_threshold(u, w, 0, 1);
        v.check(threshold && *threshold <= cap, [&] { return std::string("(" + std::to_string(u) + "," + std::to_string(w) + ") walks " +
                                                    (threshold ? "exist for every length only from " + std::to_string(*threshold)
                                                               : "miss infinitely many lengths")); });
      }
}

void check_l3_7(Context& c, ClaimResult& r) {
  if (!cyclic_with_u(c)) return;
  const std::size_t n = c.n();
  const auto& ss = c.ss();
  const auto& idx = c.typed();
  const auto u_set = ss.eliminated(n).members();
  const std::size_t cap = c.caps().pump_cap_for(n);
  Verdict v{r};
  for (auto u : ss.residual[ss.zeta]) {
    bool t1 = false, t2 = false;
    for (auto w : u_set) {
      t1 = t1 || idx.has_walk(u, w, WalkType::Type1);
      t2 = t2 || idx.has_walk(u, w, WalkType::Type2);
    }
    if (!t1 || !t2) continue;
    if (!r.applicable) applicable(r);
    for (auto w : u_set) {
      const auto threshold = c.pump_threshold(u, w, 0, 1);
      v.check(threshold && *threshold <= cap, [&] { return std::string("(" + std::to_string(u) + "," + std::to_string(w) + ") walks " +
                                                  (threshold ? "exist for every length only from " + std::to_string(*threshold)
                                                             : "miss infinitely many lengths")); });
    }
  }
}

void check_t3_8(Context& c, ClaimResult& r) {
  if (!cyclic_with_u(c)) return;
  applicable(r);
  const auto& ss = c.ss();
  for (auto w : ss.eliminated(c.n()).members()) {
    try {
      switch (vertex_type(c.d(), ss, c.typed(), w)) {
        case VertexType::Type1Only: r.observations.push_back("type1"); break;
        case VertexType::Type2Only: r.observations.push_back("type2"); break;
        case VertexType::Both: r.observations.push_back("both"); break;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TheoremViolation) throw;
      Verdict{r}.fail(e.what());
    }
  }
}

void check_t3_9(Context& c, ClaimResult& r) {
  if (!sink_and_cycle(c)) return;
  applicable(r);
  const auto& prof = c.profile();
  const std::size_t bound = c.k() == 2 ? 2 : 3;
  r.observations.push_back("cperiod=" + std::to_string(prof.cperiod_literal));
  if (prof.eventual_graph_period != prof.cperiod_literal)
    r.observations.push_back("eventual_period=" + std::to_string(prof.eventual_graph_period) + "!=cperiod");
  Verdict{r}.check(prof.cperiod_literal <= bound, [&] { return std::string("cperiod " + std::to_string(prof.cperiod_literal) + " exceeds " + std::to_string(bound) +
                                                      " with k=" + std::to_string(c.k())); });
}

// ---- sink-free and primitive digraphs ------------------------------------

void check_p4_1(Context& c, ClaimResult& r) {
  if (c.has_sink()) return;
  applicable(r);
  const auto& ps = c.powers();
  const std::size_t stop = ps.index() + ps.period();
  for (std::size_t t = 1; t < stop; ++t)
    if (!ps.graph(t).is_subgraph_of(ps.graph(t + 1))) {
      Verdict{r}.fail("an edge of C^" + std::to_string(t) + " is missing from C^" + std::to_string(t + 1));
      return;
    }
  r.observations.push_back("cperiod=" + std::to_string(c.profile().cperiod_literal));
}

void check_t4_2(Context& c, ClaimResult& r) {
  PrimitivityReport prim;
  try {
    prim = primitivity(c.d());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ExponentOverflow) throw;
    applicable(r);
    Verdict{r}.fail(e.what());
    return;
  }
  if (!prim.primitive) return;
  applicable(r);
  Verdict v{r};
  const std::size_t e = *prim.exponent;
  const auto& prof = c.profile();
  std::size_t bad = 0;
  v.check(e <= wielandt_bound(c.n()), [&] { return std::string("exponent " + std::to_string(e) + " above the Wielandt bound"); });
  v.check(c.all_m_from(e, [](const SimpleGraph& g) { return g.is_complete(); }, &bad), [&] { return std::string("(i) C^" + std::to_string(bad) + " is not complete"); });
  v.check(prof.cindex <= e, [&] { return std::string("(ii) cindex " + std::to_string(prof.cindex) + " > exponent " + std::to_string(e)); });
  v.check(prof.cperiod_literal == 1 && prof.eventual_graph_period == 1, [&] { return std::string("(iii) cperiod " + std::to_string(prof.cperiod_literal)); });
  r.observations.push_back("exp=" + std::to_string(e));
}

void check_p4_3(Context& c, ClaimResult& r) {
  const std::size_t n = c.n();
  if (!c.parts() || c.k() < 4 || n > c.caps().longest_cycle_n_max) return;
  if (strongly_connected_components(c.d()).size() != 1) return;
  const auto longest = longest_cycle_length(c.d(), c.caps().longest_cycle_n_max);
  if (!longest || *longest != c.k()) return;
  applicable(r);
  const std::size_t bound = c.k() == 4 ? 5 + n : 2 + n;
  Verdict{r}.check(c.profile().cindex <= bound, [&] { return std::string("cindex " + std::to_string(c.profile().cindex) + " > " + std::to_string(bound) + " with k=" + std::to_string(c.k())); });
  r.observations.push_back(c.k() == 4 ? "k=4" : "k>=5");
}

// ---- tournaments ---------------------------------------------------------

bool minus_path(const SimpleGraph& g, std::size_t t) { return is_complete_minus_path(g, t); }

void check_t5_1(Context& c, ClaimResult& r) {
  const std::size_t n = c.n();
  if (!c.tournament() || n < 2) return;
  applicable(r);
  Verdict v{r};
  const auto s = score_sequence(c.d());
  auto at = [&](std::size_t i) { return i < s.size() ? s[i] : std::size_t{0}; };
  const bool s1_0 = s[0] == 0;
  const bool case_01 = s1_0 && at(1) == 1;
  const bool case_02 = s1_0 && at(1) >= 2;
  const bool case_12 = s[0] == 1 && at(1) >= 2;
  const bool case_112 = s[0] == 1 && at(1) == 1 && n >= 3 && at(2) >= 2;
  const bool case_111 = s[0] == 1 && at(1) == 1 && n >= 3 && at(2) == 1;
  const bool case_2 = s[0] >= 2;
  const std::string label = case_01 ? "s=0,1" : case_02 ? "s=0,>=2" : case_12 ? "s=1,>=2" : case_112 ? "s=1,1,>=2" : case_111 ? "s=1,1,1" : "s>=2";

  const auto& c2 = c.graph(2);
  bool ok2 = true;
  if (case_01) ok2 = is_clique_plus_isolated(c2, n - 2);
  if (case_02) ok2 = is_clique_plus_isolated(c2, n - 1);
  if (case_12) ok2 = c2.is_complete() || minus_path(c2, 2) || minus_path(c2, 3);
  if (case_112) ok2 = minus_path(c2, 3) || minus_path(c2, 4);
  if (case_2) ok2 = c2.is_complete();
  v.check(ok2, [&] { return std::string("(i) " + label + ": C^2 has shape " + describe_shape(c2)); });
  if (!case_111) r.observations.push_back("C2 " + label + " " + describe_shape(c2));

  if (!s1_0) {
    const auto& c3 = c.graph(3);
    bool ok3 = true;
    if (case_12 || case_2) ok3 = c3.is_complete();
    if (case_112) ok3 = minus_path(c3, 2);
    if (case_111) ok3 = is_complete_minus_triangle(c3);
    v.check(ok3, [&] { return std::string("(ii) " + label + ": C^3 has shape " + describe_shape(c3)); });
    r.observations.push_back("C3 " + label + " " + describe_shape(c3));
    for (std::size_t m = 4; m <= 8; ++m) {
      const auto& cm = c.graph(m);
      const bool okm = case_111 ? is_complete_minus_triangle(cm) : cm.is_complete();
      v.check(okm, [&] { return std::string("(iii) " + label + ": C^" + std::to_string(m) + " has shape " + describe_shape(cm)); });
    }
  }
}

void check_p5_2(Context& c, ClaimResult& r) {
  if (!c.tournament()) return;
  applicable(r);
  std::size_t sinks = 0;
  for (std::size_t v = 0; v < c.n(); ++v) sinks += c.d().out_degree(v) == 0 ? 1 : 0;
  Verdict{r}.check(sinks <= 1, [&] { return std::string(std::to_string(sinks) + " sinks"); });
}

void check_c5_3(Context& c, ClaimResult& r) {
  if (!c.tournament() || c.n() < 3) return;
  applicable(r);
  Verdict{r}.check(c.acyclic() == (c.ss().zeta == c.n() - 1), [&] { return std::string(c.acyclic() ? "acyclic but zeta = " + std::to_string(c.ss().zeta) : "cyclic but zeta = n-1"); });
}

void check_t5_4(Context& c, ClaimResult& r) {
  const std::size_t n = c.n();
  if (!c.tournament() || n < 2 || !c.has_sink()) return;
  applicable(r);
  Verdict v{r};
  const auto& ss = c.ss();
  const std::size_t zeta = ss.zeta;
  v.check(zeta >= 1 && zeta <= n - 1 && zeta + 2 != n, [&] { return std::string("(i) zeta = " + std::to_string(zeta)); });
  for (std::size_t m = 1; m < zeta; ++m) {
    auto clique = set_of(n, ss.residual[m - 1]);
    clique.subtract(set_of(n, ss.layers[m - 1]));
    v.check(c.graph(m) == SimpleGraph::clique_on(n, clique), [&] { return std::string("(ii) C^" + std::to_string(m) + " = " + edges_text(c.graph(m))); });
  }
  const auto core = SimpleGraph::clique_on(n, set_of(n, ss.residual[zeta]));
  std::size_t bad = 0;
  v.check(c.all_m_from(std::max<std::size_t>(zeta, 1), [&](const SimpleGraph& g) { return g == core; }, &bad), [&] { return std::string("(iii) C^" + std::to_string(bad) + " is not the clique on V(D_zeta) " + list_text(ss.residual[zeta])); });
  const auto& prof = c.profile();
  v.check(prof.cperiod_literal == 1, [&] { return std::string("(iv) cperiod " + std::to_string(prof.cperiod_literal)); });
  v.check(prof.cindex == zeta, [&] { return std::string("(v) cindex " + std::to_string(prof.cindex) + " != zeta " + std::to_string(zeta)); });
}

using Checker = void (*)(Context&, ClaimResult&);

constexpr std::array<Checker, 23> kCheckers = {
    check_p2_1, check_l2_2, check_t2_3, check_t2_4, check_c2_5, check_c2_6, check_l2_7, check_t2_8,
    check_p3_1, check_l3_3, check_l3_4, check_l3_5, check_l3_6, check_l3_7, check_t3_8, check_t3_9,
    check_p4_1, check_t4_2, check_p4_3, check_t5_1, check_p5_2, check_c5_3, check_t5_4,
};

}  // namespace

std::string_view claim_name(ClaimId id) noexcept { return kNames[static_cast<std::size_t>(id)]; }

std::optional<ClaimId> parse_claim(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return static_cast<ClaimId>(i);
  return std::nullopt;
}

std::vector<ClaimResult> check_instance(const Digraph& d, const Caps& caps) {
  return check_instance(d, caps, std::vector<ClaimId>(kAllClaims.begin(), kAllClaims.end()));
}

std::vector<ClaimResult> check_instance(const Digraph& d, const Caps& caps, const std::vector<ClaimId>& only) {
  Context context(d, caps);
  std::vector<ClaimId> ids = only;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<ClaimResult> results;
  results.reserve(ids.size());
  for (auto id : ids) {
    ClaimResult r;
    r.claim_id = id;
    kCheckers[static_cast<std::size_t>(id)](context, r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace compidx
