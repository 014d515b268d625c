#include "compidx/suite.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <exception>
#include <fstream>
#include <sstream>

#include "compidx/digraph_io.hpp"
#include "compidx/error.hpp"
#include "compidx/generators.hpp"

namespace compidx {

namespace {

using nlohmann::json;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream per instance so any index can be regenerated alone.
Seed instance_seed(std::uint64_t base, std::uint64_t index) { return Seed{splitmix64(base ^ splitmix64(index))}; }

[[noreturn]] void bad_spec(const json& spec, const std::string& why) {
  throw Error(ErrorCode::ParseError, "corpus entry " + spec.dump() + ": " + why);
}

template <typename T>
T field(const json& spec, const char* key) {
  if (!spec.contains(key)) bad_spec(spec, std::string("missing \"") + key + "\"");
  try {
    return spec.at(key).get<T>();
  } catch (const json::exception&) {
    bad_spec(spec, std::string("bad \"") + key + "\"");
  }
}

template <typename T>
T field_or(const json& spec, const char* key, T fallback) {
  return spec.contains(key) ? field<T>(spec, key) : fallback;
}

// "key": 5 or "key": [lo, hi] (inclusive).
std::pair<std::size_t, std::size_t> range_field(const json& spec, const char* key) {
  if (!spec.contains(key)) bad_spec(spec, std::string("missing \"") + key + "\"");
  const json& v = spec.at(key);
  std::pair<std::size_t, std::size_t> r;
  auto count = [](const json& x) { return x.is_number_integer() && x.get<std::int64_t>() >= 0; };
  if (count(v)) {
    r = {v.get<std::size_t>(), v.get<std::size_t>()};
  } else if (v.is_array() && v.size() == 2 && count(v[0]) && count(v[1])) {
    r = {v[0].get<std::size_t>(), v[1].get<std::size_t>()};
  } else {
    bad_spec(spec, std::string("\"") + key + "\" must be a count or [lo, hi]");
  }
  if (r.first > r.second) bad_spec(spec, std::string("empty range for \"") + key + "\"");
  return r;
}

// k parts, total between max(k, min_total) and n_max, every part nonempty.
std::vector<std::size_t> random_sizes(CoinStream& coins, std::pair<std::size_t, std::size_t> k_range, std::size_t n_max,
                                      std::size_t min_total) {
  const std::size_t k = coins.uniform(k_range.first, k_range.second);
  const std::size_t lo = std::max(k, min_total);
  const std::size_t n = coins.uniform(lo, std::max(lo, n_max));
  std::vector<std::size_t> sizes(k, 1);
  for (std::size_t e = k; e < n; ++e) ++sizes[coins.uniform(0, k - 1)];
  return sizes;
}

struct SizeSpec {
  std::optional<std::vector<std::size_t>> fixed;
  std::pair<std::size_t, std::size_t> k{2, 2};
  std::size_t n_max = 0;
};

SizeSpec size_spec(const json& spec) {
  SizeSpec s;
  if (spec.contains("sizes")) {
    s.fixed = field<std::vector<std::size_t>>(spec, "sizes");
    return s;
  }
  s.k = range_field(spec, "k");
  s.n_max = field<std::size_t>(spec, "n_max");
  if (s.k.first < 2 || s.n_max < s.k.second) bad_spec(spec, "need 2 <= k and k <= n_max");
  return s;
}

}  // namespace

CorpusSource expand_corpus_entry(const json& spec, const std::filesystem::path& base_dir) {
  if (!spec.is_object()) throw Error(ErrorCode::ParseError, "corpus entries must be objects");
  const auto kind = field<std::string>(spec, "kind");
  CorpusSource src;
  src.descriptor = spec;

  if (kind == "enumerate") {
    auto parts = field<std::vector<std::size_t>>(spec, "parts");
    auto e = std::make_shared<OrientationEnumerator>(parts);
    src.count = e->count();
    src.make = [e](std::uint64_t i) { return e->at(i); };
  } else if (kind == "transitive") {
    auto [lo, hi] = range_field(spec, "n");
    if (lo == 0) bad_spec(spec, "n must be positive");
    src.count = hi - lo + 1;
    src.make = [lo = lo](std::uint64_t i) { return gen_transitive_tournament(lo + i); };
  } else if (kind == "zeta") {
    auto [lo, hi] = range_field(spec, "n");
    std::vector<std::pair<std::size_t, std::size_t>> cases;
    for (std::size_t n = std::max<std::size_t>(lo, 2); n <= hi; ++n)
      for (std::size_t z = 1; z < n; ++z)
        if (z + 2 != n) cases.emplace_back(n, z);
    src.count = cases.size();
    src.make = [cases](std::uint64_t i) { return gen_zeta_tournament(cases[i].first, cases[i].second); };
  } else if (kind == "acyclic_kpartite") {
    auto sizes = field<std::vector<std::size_t>>(spec, "layers");
    auto parts = field<std::vector<int>>(spec, "parts");
    gen_acyclic_kpartite(sizes, parts);
    src.count = 1;
    src.make = [sizes, parts](std::uint64_t) { return gen_acyclic_kpartite(sizes, parts); };
  } else if (kind == "random_acyclic_kpartite") {
    const auto k = range_field(spec, "k");
    const auto n_max = field<std::size_t>(spec, "n_max");
    const auto seed = field_or<std::uint64_t>(spec, "seed", 0);
    if (k.first < 2 || n_max < k.second) bad_spec(spec, "need 2 <= k and k <= n_max");
    src.count = field<std::uint64_t>(spec, "count");
    src.make = [k, n_max, seed](std::uint64_t i) {
      CoinStream coins(instance_seed(seed, i));
      const auto layer_spec = random_layer_spec(coins.uniform(k.first, k.second), n_max, coins);
      return gen_acyclic_kpartite(layer_spec.sizes, layer_spec.parts);
    };
  } else if (kind == "random_kpartite" || kind == "sink_cycle" || kind == "strong_kpartite") {
    const auto sizes = size_spec(spec);
    const auto seed = field_or<std::uint64_t>(spec, "seed", 0);
    const auto max_tries = field_or<std::size_t>(spec, "max_tries", 10000);
    src.count = field<std::uint64_t>(spec, "count");
    src.make = [sizes, seed, max_tries, kind](std::uint64_t i) {
      CoinStream coins(instance_seed(seed, i));
      // Random size draws that admit no qualifying orientation are redrawn.
      for (int draw = 0;; ++draw) {
        const auto part_sizes = sizes.fixed ? *sizes.fixed : random_sizes(coins, sizes.k, sizes.n_max, kind == "sink_cycle" ? 4 : 0);
        const Seed s{coins.uniform(0, ~std::uint64_t{0})};
        try {
          if (kind == "random_kpartite") return gen_random_kpartite(part_sizes, s);
          if (kind == "sink_cycle") return gen_sink_cycle_kpartite(part_sizes, s, max_tries);
          return gen_strong_kpartite(part_sizes, s, max_tries);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::ExhaustedTries || sizes.fixed || draw >= 63) throw;
        }
      }
    };
  } else if (kind == "mixed_cycle") {
    const auto n = range_field(spec, "n");
    const auto chords = range_field(spec, "chords");
    const auto seed = field_or<std::uint64_t>(spec, "seed", 0);
    const auto max_tries = field_or<std::size_t>(spec, "max_tries", 10000);
    if (n.first < 4 || chords.first < 1) bad_spec(spec, "mixed cycles need n >= 4 and at least one chord");
    src.count = field<std::uint64_t>(spec, "count");
    src.make = [n, chords, seed, max_tries](std::uint64_t i) {
      CoinStream coins(instance_seed(seed, i));
      const std::size_t size = coins.uniform(n.first, n.second);
      const std::size_t free_pairs = size * (size - 1) / 2 - size;
      const std::size_t c = std::min<std::size_t>(coins.uniform(chords.first, chords.second), free_pairs);
      return gen_mixed_cycle(size, c, Seed{coins.uniform(0, ~std::uint64_t{0})}, max_tries);
    };
  } else if (kind == "file") {
    std::vector<std::filesystem::path> paths;
    if (spec.contains("path")) paths.push_back(field<std::string>(spec, "path"));
    if (spec.contains("paths"))
      for (const auto& p : field<std::vector<std::string>>(spec, "paths")) paths.emplace_back(p);
    if (paths.empty()) bad_spec(spec, "needs \"path\" or \"paths\"");
    for (auto& p : paths)
      if (p.is_relative()) p = base_dir / p;
    src.count = paths.size();
    src.make = [paths](std::uint64_t i) { return read_digraph(paths[i]); };
  } else {
    bad_spec(spec, "unknown kind \"" + kind + "\"");
  }
  return src;
}

SuiteConfig parse_suite_config(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "suite config must be a JSON object");
  SuiteConfig config;
  config.base_dir = base_dir;
  if (!j.contains("corpus") || !j.at("corpus").is_array())
    throw Error(ErrorCode::ParseError, "suite config needs a \"corpus\" array");
  config.corpus = j.at("corpus");
  for (const auto& entry : config.corpus) expand_corpus_entry(entry, base_dir);

  if (j.contains("caps")) {
    const json& caps = j.at("caps");
    if (!caps.is_object()) throw Error(ErrorCode::ParseError, "\"caps\" must be an object");
    config.caps.pump_cap = field_or<std::size_t>(caps, "pump_cap", config.caps.pump_cap);
    config.caps.walk_enum_n_max = field_or<std::size_t>(caps, "walk_enum_n_max", config.caps.walk_enum_n_max);
    config.caps.longest_cycle_n_max = field_or<std::size_t>(caps, "longest_cycle_n_max", config.caps.longest_cycle_n_max);
    config.caps.witness_slack = field_or<std::size_t>(caps, "witness_slack", config.caps.witness_slack);
  }
  if (j.contains("report")) {
    std::filesystem::path p = field<std::string>(j, "report");
    config.report = p.is_relative() ? base_dir / p : p;
  }
  auto claim_list = [&](const char* key) {
    std::vector<ClaimId> out;
    for (const auto& name : field_or<std::vector<std::string>>(j, key, {})) {
      auto id = parse_claim(name);
      if (!id) throw Error(ErrorCode::ParseError, "unknown claim \"" + name + "\" in \"" + key + "\"");
      out.push_back(*id);
    }
    return out;
  };
  config.claims = claim_list("claims");
  config.inject_fault = claim_list("inject_fault");
  return config;
}

SuiteConfig read_suite_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
  return parse_suite_config(j, path.parent_path());
}

SuiteReport run_suite(const SuiteConfig& config, int jobs) {
  const auto started = std::chrono::steady_clock::now();
  std::vector<CorpusSource> sources;
  std::vector<std::uint64_t> offsets{0};
  for (const auto& entry : config.corpus) {
    sources.push_back(expand_corpus_entry(entry, config.base_dir));
    offsets.push_back(offsets.back() + sources.back().count);
  }
  const std::uint64_t total = offsets.back();
  const std::vector<ClaimId> claims =
      config.claims.empty() ? std::vector<ClaimId>(kAllClaims.begin(), kAllClaims.end()) : config.claims;

  SuiteReport report;
  report.corpus = config.corpus;
  report.caps = config.caps;
  report.instances = total;
  for (auto id : claims) report.claims[id];

  std::exception_ptr error;
  const auto count = static_cast<std::int64_t>(total);
  const int threads = std::max(1, jobs);

#pragma omp parallel num_threads(threads) if (threads > 1)
  {
    std::map<ClaimId, ClaimTally> tallies;
    std::vector<SuiteFailure> failures;
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t gi = 0; gi < count; ++gi) {
      try {
        const auto id = static_cast<std::uint64_t>(gi);
        const auto s = static_cast<std::size_t>(std::upper_bound(offsets.begin(), offsets.end(), id) - offsets.begin() - 1);
        const Digraph d = sources[s].make(id - offsets[s]);
        for (auto& r : check_instance(d, config.caps, claims)) {
          if (!r.applicable) continue;
          if (r.passed && std::find(config.inject_fault.begin(), config.inject_fault.end(), r.claim_id) != config.inject_fault.end()) {
            r.passed = false;
            r.witness = "injected fault";
          }
          auto& t = tallies[r.claim_id];
          ++t.applicable;
          if (r.passed) {
            ++t.passed;
          } else {
            ++t.failed;
          }
          for (const auto& o : r.observations) ++t.observations[o];
          if (!r.passed) {
            std::ostringstream label;
            label << sources[s].descriptor.value("kind", "?") << '#' << (id - offsets[s]);
            failures.push_back({id, label.str(), to_text(d), std::move(r)});
          }
        }
      } catch (...) {
#pragma omp critical(compidx_suite_error)
        if (!error) error = std::current_exception();
      }
    }
#pragma omp critical(compidx_suite_merge)
    {
      for (auto& [id, t] : tallies) {
        auto& dst = report.claims[id];
        dst.applicable += t.applicable;
        dst.passed += t.passed;
        dst.failed += t.failed;
        for (const auto& [o, c] : t.observations) dst.observations[o] += c;
      }
      for (auto& f : failures) report.failures.push_back(std::move(f));
    }
  }
  if (error) std::rethrow_exception(error);

  std::sort(report.failures.begin(), report.failures.end(), [](const SuiteFailure& a, const SuiteFailure& b) {
    return std::tie(a.instance_id, a.result.claim_id) < std::tie(b.instance_id, b.result.claim_id);
  });
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

json to_json(const Caps& caps) {
  return {
      {"pump_cap", caps.pump_cap},
      {"walk_enum_n_max", caps.walk_enum_n_max},
      {"longest_cycle_n_max", caps.longest_cycle_n_max},
      {"witness_slack", caps.witness_slack},
  };
}

json to_json(const ClaimResult& result) {
  json j = {
      {"claim", claim_name(result.claim_id)},
      {"applicable", result.applicable},
      {"passed", result.passed},
  };
  if (result.witness) j["witness"] = *result.witness;
  if (!result.observations.empty()) j["observations"] = result.observations;
  return j;
}

json to_json(const SuiteReport& report) {
  json claims = json::object();
  for (const auto& [id, t] : report.claims)
    claims[std::string(claim_name(id))] = {
        {"applicable", t.applicable},
        {"passed", t.passed},
        {"failed", t.failed},
        {"observations", t.observations},
    };
  json failures = json::array();
  for (const auto& f : report.failures)
    failures.push_back({
        {"instance", f.instance_id},
        {"source", f.source},
        {"claim", claim_name(f.result.claim_id)},
        {"witness", f.result.witness.value_or("")},
        {"digraph", f.digraph},
    });
  return {
      {"schema", kReportSchema},
      {"corpus", report.corpus},
      {"caps", to_json(report.caps)},
      {"instances", report.instances},
      {"claims", claims},
      {"failures", failures},
      {"all_passed", report.all_passed()},
      {"wall_seconds", report.wall_seconds},
  };
}

void write_report(const std::filesystem::path& path, const SuiteReport& report) {
  write_text_file(path, to_json(report).dump(2) + "\n");
}

}  // namespace compidx
