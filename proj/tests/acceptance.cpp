// Acceptance harness: `acceptance N` runs criterion N, `acceptance` runs all.
// Prints one PASS/FAIL line per criterion and exits nonzero if any failed.
// All checks are exact; the only tolerance is the runtime budget.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

#include "compidx/checks.hpp"
#include "compidx/competition.hpp"
#include "compidx/connectivity.hpp"
#include "compidx/generators.hpp"
#include "compidx/sink_analysis.hpp"
#include "compidx/structure.hpp"
#include "compidx/suite.hpp"
#include "oracles.hpp"

using namespace compidx;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

std::string tally_text(const SuiteReport& report) {
  std::ostringstream out;
  for (const auto& [id, t] : report.claims) out << claim_name(id) << ' ' << t.passed << '/' << t.applicable << ' ';
  return out.str();
}

// Every applicable verdict passed, and each listed claim applied at least once.
void require_suite(Outcome& o, const SuiteReport& report) {
  for (const auto& [id, t] : report.claims) {
    o.require(t.applicable > 0, std::string(claim_name(id)) + " never applicable");
    o.require(t.failed == 0, std::string(claim_name(id)) + " failed " + std::to_string(t.failed) + "x" +
                                 (report.failures.empty() ? "" : ": " + report.failures.front().result.witness.value_or("")));
  }
}

SuiteReport suite(json corpus, std::vector<ClaimId> claims) {
  SuiteConfig config;
  config.corpus = std::move(corpus);
  config.claims = std::move(claims);
  return run_suite(config);
}

json all_tournaments(std::size_t n) { return {{"kind", "enumerate"}, {"parts", std::vector<std::size_t>(n, 1)}}; }

void criterion_1(Outcome& o) {
  auto report = suite(json::array({all_tournaments(5), all_tournaments(6)}), {ClaimId::T5_4, ClaimId::P5_2});
  require_suite(o, report);
  // 5 * 2^6 + 6 * 2^10 labeled tournaments have a sink.
  o.require(report.claims.at(ClaimId::T5_4).applicable == 320 + 6144, "sink count");
  o.detail << tally_text(report);
}

void criterion_2(Outcome& o) {
  auto report = suite(json::array({all_tournaments(5), all_tournaments(6)}), {ClaimId::T5_1});
  const auto& t = report.claims.at(ClaimId::T5_1);
  o.require(t.applicable == 1024 + 32768, "coverage");
  o.require(t.failed == 0, std::to_string(t.failed) + " tournaments violate the score-sequence table");
  std::map<std::string, std::size_t> kinds;
  for (const auto& f : report.failures) {
    const auto& w = *f.result.witness;
    ++kinds[w.substr(0, w.find(" has shape")) + " = " + w.substr(w.find("shape ") + 6)];
  }
  for (const auto& [k, c] : kinds) o.detail << '[' << k << "] x" << c << ' ';
  o.detail << tally_text(report);
}

void criterion_3(Outcome& o) {
  CoinStream coins(Seed{2023});
  std::size_t checked = 0;
  std::map<std::size_t, std::size_t> per_k;
  std::map<ClaimId, std::size_t> passed;
  const std::vector<ClaimId> claims = {ClaimId::T2_8, ClaimId::T2_4, ClaimId::C2_5, ClaimId::C2_6, ClaimId::L2_7};
  for (int i = 0; i < 500; ++i) {
    const std::size_t k = coins.uniform(3, 5);
    const auto spec = random_layer_spec(k, 12, coins);
    const auto d = gen_acyclic_kpartite(spec.sizes, spec.parts);
    o.require(d.vertex_count() <= 12 && d.part_count() == k, "instance shape");
    // Layers come back exactly as constructed.
    const auto ss = sink_sequence(d);
    std::size_t next = 0;
    bool same = ss.layers.size() == spec.sizes.size();
    for (std::size_t l = 0; same && l < ss.layers.size(); ++l) {
      std::vector<std::size_t> want(spec.sizes[l]);
      std::iota(want.begin(), want.end(), next);
      next += spec.sizes[l];
      same = ss.layers[l] == want;
    }
    o.require(same, "layer round trip on instance " + std::to_string(i));
    for (const auto& r : check_instance(d, {}, claims)) {
      o.require(r.applicable && r.passed, std::string(claim_name(r.claim_id)) + " on instance " + std::to_string(i) + ": " +
                                               r.witness.value_or("not applicable"));
      passed[r.claim_id] += r.applicable && r.passed ? 1 : 0;
    }
    ++per_k[k];
    ++checked;
  }
  o.detail << checked << " instances (";
  for (auto [k, c] : per_k) o.detail << "k=" << k << ":" << c << ' ';
  o.detail << ") ";
  for (auto [id, c] : passed) o.detail << claim_name(id) << ' ' << c << "/500 ";
}

void criterion_4(Outcome& o) {
  auto report = suite(json::array({{{"kind", "sink_cycle"}, {"count", 500}, {"k", {2, 4}}, {"n_max", 10}, {"seed", 2024}}}),
                      {ClaimId::T3_9, ClaimId::P3_1, ClaimId::T3_8});
  require_suite(o, report);
  o.require(report.claims.at(ClaimId::T3_9).applicable == 500, "every instance is sink+cycle multipartite");

  // Independent of the checker: recompute the literal period per instance.
  auto source = expand_corpus_entry(report.corpus[0]);
  std::map<std::size_t, std::size_t> periods, bip_periods;
  for (std::uint64_t i = 0; i < source.count; ++i) {
    const auto d = source.make(i);
    o.require(d.vertex_count() <= 10, "n <= 10");
    const auto p = competition_profile(d).cperiod_literal;
    ++periods[p];
    if (d.part_count() == 2) ++bip_periods[p];
    o.require(p >= 1 && p <= 3, "cperiod " + std::to_string(p));
    o.require(d.part_count() != 2 || p <= 2, "bipartite cperiod " + std::to_string(p));
  }
  o.detail << "cperiod counts ";
  for (auto [p, c] : periods) o.detail << p << ':' << c << ' ';
  o.detail << "(bipartite ";
  for (auto [p, c] : bip_periods) o.detail << p << ':' << c << ' ';
  o.detail << ") " << tally_text(report);
}

void criterion_5(Outcome& o) {
  // 100 strongly connected tournaments on 4..8 vertices (all primitive) and 100 mixed-cycle digraphs.
  std::vector<Digraph> corpus;
  for (std::uint64_t i = 0; i < 100; ++i) corpus.push_back(gen_strong_kpartite(std::vector<std::size_t>(4 + i % 5, 1), Seed{500 + i}));
  auto mixed = expand_corpus_entry({{"kind", "mixed_cycle"}, {"count", 100}, {"n", {4, 10}}, {"chords", {1, 6}}, {"seed", 6}});
  for (std::uint64_t i = 0; i < mixed.count; ++i) corpus.push_back(mixed.make(i));

  std::size_t instances = 0, max_exp = 0;
  for (const auto& d : corpus) {
    const std::size_t n = d.vertex_count();
    const auto rep = primitivity(d);
    o.require(rep.primitive && rep.exponent.has_value(), "primitive instance");
    if (!rep.exponent) continue;
    const std::size_t e = *rep.exponent;
    max_exp = std::max(max_exp, e);
    o.require(e == oracle::exponent(d, wielandt_bound(n)), "exponent matches oracle");
    o.require(e <= wielandt_bound(n), "Wielandt bound");
    PowerSequence powers(d);
    for (std::size_t m = e; m <= e + 5; ++m) o.require(powers.graph(m).is_complete(), "C^m complete at m=" + std::to_string(m));
    const auto prof = competition_profile(powers);
    o.require(prof.cindex <= e, "cindex <= exp");
    o.require(prof.cperiod_literal == 1, "cperiod = 1");
    for (const auto& r : check_instance(d, {}, {ClaimId::T4_2, ClaimId::P4_1}))
      o.require(r.applicable && r.passed, std::string(claim_name(r.claim_id)) + ": " + r.witness.value_or("n/a"));
    ++instances;
  }
  o.require(instances == 200, "200 primitive instances");

  // Longest cycle exactly k is rare under random sampling, so enumerate small shapes exhaustively.
  auto bound = suite(json::array({
                         {{"kind", "enumerate"}, {"parts", {2, 1, 1, 1}}},
                         {{"kind", "enumerate"}, {"parts", {3, 1, 1, 1}}},
                         {{"kind", "enumerate"}, {"parts", {2, 2, 1, 1}}},
                         {{"kind", "enumerate"}, {"parts", {2, 1, 1, 1, 1}}},
                         {{"kind", "strong_kpartite"}, {"count", 300}, {"k", {4, 6}}, {"n_max", 12}, {"seed", 7}},
                     }),
                     {ClaimId::P4_3});
  require_suite(o, bound);
  o.detail << instances << " primitive instances, max exp " << max_exp << "; " << tally_text(bound);
  for (const auto& [tag, c] : bound.claims.at(ClaimId::P4_3).observations) o.detail << tag << ':' << c << ' ';
}

void criterion_6(Outcome& o) {
  std::vector<Digraph> corpus;
  for (std::uint64_t bits = 0; bits < 64; ++bits) corpus.push_back(oracle::tournament(4, bits));
  for (std::uint64_t bits = 0; bits < 1024; bits += 9) corpus.push_back(oracle::tournament(5, bits));
  for (std::uint64_t s = 0; s < 60; ++s) {
    corpus.push_back(gen_random_kpartite({2, 2, 2}, Seed{s}));
    corpus.push_back(gen_random_kpartite({3, 3}, Seed{s}));
    corpus.push_back(gen_sink_cycle_kpartite({2, 2, 1}, Seed{s}));
    corpus.push_back(gen_mixed_cycle(6, 1 + s % 4, Seed{s}));
  }
  // Sparse arbitrary digraphs: each ordered pair kept with probability ~1/3, digons dropped.
  CoinStream coins(Seed{66});
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = coins.uniform(1, 6);
    std::vector<Arc> arcs;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) {
        const auto pick = coins.uniform(0, 2);
        if (pick == 1) arcs.emplace_back(u, v);
        if (pick == 2) arcs.emplace_back(v, u);
      }
    corpus.push_back(Digraph::build(n, arcs));
  }
  for (std::size_t n = 1; n <= 6; ++n) corpus.push_back(gen_transitive_tournament(n));

  std::size_t comparisons = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t m = 1; m <= 6; ++m) {
      o.require(oracle::edge_set(m_step_competition_graph(corpus[i], m)) == oracle::competition_edges(corpus[i], m),
                "instance " + std::to_string(i) + " m=" + std::to_string(m));
      ++comparisons;
    }
  o.detail << corpus.size() << " digraphs, " << comparisons << " graph comparisons";
}

void criterion_7(Outcome& o) {
  auto acyclic = suite(json::array({
                           {{"kind", "random_acyclic_kpartite"}, {"count", 300}, {"k", {2, 5}}, {"n_max", 12}, {"seed", 71}},
                           {{"kind", "transitive"}, {"n", {1, 9}}},
                           {{"kind", "zeta"}, {"n", {2, 8}}},
                       }),
                       {ClaimId::L2_2});
  require_suite(o, acyclic);

  // The spectrum claim again, straight from walk_length_spectrum on the acyclic instances.
  std::size_t vertices = 0;
  auto src = expand_corpus_entry(acyclic.corpus[0]);
  for (std::uint64_t i = 0; i < src.count; ++i) {
    const auto d = src.make(i);
    const auto ss = sink_sequence(d);
    for (std::size_t l = 0; l < ss.layers.size(); ++l)
      for (auto v : ss.layers[l]) {
        const auto spec = walk_length_spectrum(d, v, d.vertex_count());
        std::vector<std::size_t> want(l + 1);
        std::iota(want.begin(), want.end(), 0);
        o.require(!spec.unbounded && spec.lengths == want, "spectrum at layer " + std::to_string(l));
        ++vertices;
      }
  }

  auto pumping = suite(json::array({
                          {{"kind", "sink_cycle"}, {"count", 400}, {"k", {2, 4}}, {"n_max", 6}, {"seed", 72}},
                          {{"kind", "sink_cycle"}, {"count", 200}, {"k", {2, 5}}, {"n_max", 9}, {"seed", 73}},
                          {{"kind", "enumerate"}, {"parts", {2, 2, 1}}},
                          {{"kind", "enumerate"}, {"parts", {2, 1, 1, 1}}},
                      }),
                      {ClaimId::L3_3, ClaimId::L3_4, ClaimId::L3_5, ClaimId::L3_6, ClaimId::L3_7});
  require_suite(o, pumping);
  o.detail << vertices << " spectra; " << tally_text(acyclic) << tally_text(pumping);
}

void criterion_8(Outcome& o) {
  o.require(frobenius({3, 4}) == 5, "F(3,4)");
  o.require(frobenius({2, 3}) == 1, "F(2,3)");
  o.require(frobenius({3, 4, 5}) == 2, "F(3,4,5)");
  CoinStream coins(Seed{88});
  std::size_t sets = 0;
  while (sets < 50) {
    std::vector<std::int64_t> ps(coins.uniform(2, 4));
    for (auto& p : ps) p = static_cast<std::int64_t>(coins.uniform(2, 40));
    std::int64_t g = 0;
    for (auto p : ps) g = std::gcd(g, p);
    if (g != 1) continue;
    o.require(frobenius(ps) == oracle::frobenius(ps, 40 * 40), "random set " + std::to_string(sets));
    ++sets;
  }
  o.detail << "3 fixed values, " << sets << " random coprime sets";
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<void(Outcome&)> run;
};

const std::map<int, Criterion> kCriteria = {
    {1, {"tournaments with sinks", 60, criterion_1}},
    {2, {"score-sequence table", 120, criterion_2}},
    {3, {"acyclic k-partite tournaments", 60, criterion_3}},
    {4, {"sink+cycle multipartite periods", 180, criterion_4}},
    {5, {"primitive digraphs and cindex bounds", 120, criterion_5}},
    {6, {"m-step graphs vs walk enumeration", 60, criterion_6}},
    {7, {"walk-length and pumping checks", 180, criterion_7}},
    {8, {"Frobenius numbers", 5, criterion_8}},
};

bool run_one(int number) {
  const auto& c = kCriteria.at(number);
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.run(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < c.budget_seconds, "over the runtime budget");
  std::cout << "criterion " << number << " (" << c.name << "): " << (o.pass ? "PASS" : "FAIL") << " [" << secs << " s of "
            << c.budget_seconds << " s] " << o.detail.str() << std::endl;
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  bool ok = true;
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) {
      const int n = std::atoi(argv[i]);
      if (!kCriteria.count(n)) {
        std::cerr << "unknown criterion " << argv[i] << '\n';
        return 2;
      }
      ok = run_one(n) && ok;
    }
  } else {
    for (const auto& [n, c] : kCriteria) ok = run_one(n) && ok;
  }
  return ok ? 0 : 1;
}
