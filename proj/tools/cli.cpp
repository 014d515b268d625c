#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "compidx/competition.hpp"
#include "compidx/connectivity.hpp"
#include "compidx/digraph_io.hpp"
#include "compidx/error.hpp"
#include "compidx/generators.hpp"
#include "compidx/serialize.hpp"
#include "compidx/sink_analysis.hpp"
#include "compidx/structure.hpp"
#include "compidx/suite.hpp"

namespace compidx::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

void emit(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path == "-") {
    out << contents;
  } else {
    write_text_file(path, contents);
  }
}

bool is_dot_path(const std::string& path) { return fs::path(path).extension() == ".dot"; }

json edges_json(const SimpleGraph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return edges;
}

// "2:0,1:1,3:2" -> sizes {2,1,3}, parts {0,1,2}.
void parse_layer_spec(const std::string& text, std::vector<std::size_t>& sizes, std::vector<int>& parts) {
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "layer \"" + item + "\" is not size:part");
    try {
      std::size_t used = 0;
      sizes.push_back(std::stoul(item.substr(0, colon), &used));
      if (used != colon) throw std::invalid_argument(item);
      const std::string part = item.substr(colon + 1);
      parts.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "layer \"" + item + "\" is not size:part");
    }
  }
  if (sizes.empty()) throw Error(ErrorCode::ParseError, "empty layer spec");
}

std::uint64_t default_seed() {
  const char* env = std::getenv("COMPIDX_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const auto seed = std::stoull(env, &used, 0);
    if (env[used] != '\0') throw std::invalid_argument(env);
    return seed;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, std::string("COMPIDX_SEED is not an integer: ") + env);
  }
}

json analyze_json(const Digraph& d, std::size_t mmax) {
  const std::size_t n = d.vertex_count();
  const auto ss = sink_sequence(d);
  const PowerSequence powers(d);
  const auto profile = competition_profile(powers);

  json j = {{"n", n}, {"arcs", d.arc_count()}};
  j.update(to_json(ss));
  j.update(to_json(profile));
  j["primitivity"] = to_json(primitivity(d));

  // Vertex types exist only for multipartite tournaments with a directed cycle.
  j["vertex_types"] = nullptr;
  if ((d.is_multipartite_tournament() || infer_multipartite(d)) && !is_acyclic(d) && n > 0) {
    const TypedWalkIndex index(d);
    json types = json::array();
    ss.eliminated(n).for_each([&](std::size_t w) { types.push_back(vertex_type_json(w, vertex_type(d, ss, index, w))); });
    j["vertex_types"] = types;
  }

  json graphs = json::array();
  for (std::size_t m = 1; m <= mmax; ++m) graphs.push_back({{"m", m}, {"edges", edges_json(powers.graph(m))}});
  j["graphs"] = graphs;
  return j;
}

std::string analyze_text(const json& j) {
  std::ostringstream out;
  out << "n " << j["n"] << ", arcs " << j["arcs"] << '\n';
  out << "zeta " << j["zeta"] << " (" << j["terminal"].get<std::string>() << ")\n";
  for (std::size_t i = 0; i < j["layers"].size(); ++i) out << "  W" << i << ' ' << j["layers"][i].dump() << '\n';
  out << "cindex " << j["cindex"] << ", cperiod " << j["cperiod"] << ", eventual period " << j["eventual_period"] << '\n';
  out << "matrix index " << j["matrix_index"] << ", matrix period " << j["matrix_period"] << '\n';
  const auto& p = j["primitivity"];
  out << "strongly connected " << p["strongly_connected"] << ", cycle gcd " << p["cycle_gcd"] << ", exponent "
      << (p["exponent"].is_null() ? std::string("-") : p["exponent"].dump()) << '\n';
  if (!j["vertex_types"].is_null())
    for (const auto& t : j["vertex_types"]) out << "  vertex " << t["vertex"] << ": " << t["type"].get<std::string>() << '\n';
  for (const auto& g : j["graphs"]) out << "C^" << g["m"] << ' ' << g["edges"].dump() << '\n';
  return out.str();
}

void print_summary(const SuiteReport& report, std::ostream& out) {
  out << report.instances << " instances\n";
  for (const auto& [id, t] : report.claims) {
    out << "  " << claim_name(id) << ": " << t.passed << '/' << t.applicable << " passed";
    if (t.failed != 0) out << ", " << t.failed << " FAILED";
    out << '\n';
  }
  constexpr std::size_t kShown = 20;
  for (std::size_t i = 0; i < std::min(kShown, report.failures.size()); ++i) {
    const auto& f = report.failures[i];
    out << "FAIL " << claim_name(f.result.claim_id) << " on " << f.source << ": " << f.result.witness.value_or("") << '\n'
        << f.digraph;
  }
  if (report.failures.size() > kShown) out << "... " << report.failures.size() - kShown << " more failures\n";
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"m-step competition graphs, sink sequences and claim checks for digraphs", "compidx"};
  app.require_subcommand(1);

  // analyze
  std::string analyze_file, analyze_json_out, analyze_dot_dir;
  std::optional<std::size_t> analyze_mmax;
  auto* analyze = app.add_subcommand("analyze", "sink sequence, competition profile, vertex types, primitivity");
  analyze->add_option("file", analyze_file, "digraph file")->required();
  analyze->add_option("--mmax", analyze_mmax, "list C^1..C^M (default: cindex + eventual period)");
  analyze->add_option("--json", analyze_json_out, "write JSON here ('-' for stdout)");
  analyze->add_option("--dot", analyze_dot_dir, "write C1.dot .. CM.dot into this directory");

  // gen
  std::string gen_kind, gen_out = "-", gen_spec, gen_parts;
  std::size_t gen_n = 0, gen_i = 0, gen_max_tries = 10000;
  std::optional<std::uint64_t> gen_seed;
  auto* gen = app.add_subcommand("gen", "generate a digraph");
  gen->add_option("kind", gen_kind, "transitive | zeta | acyclic-kpartite | random-kpartite | sink-cycle")
      ->required()
      ->check(CLI::IsMember({"transitive", "zeta", "acyclic-kpartite", "random-kpartite", "sink-cycle"}));
  gen->add_option("--n", gen_n, "vertex count (transitive, zeta)");
  gen->add_option("--i", gen_i, "sink elimination index (zeta)");
  gen->add_option("--spec", gen_spec, "layers as size:part,... (acyclic-kpartite)");
  gen->add_option("--parts", gen_parts, "part sizes as a,b,... (random-kpartite, sink-cycle)");
  gen->add_option("--seed", gen_seed, "PRNG seed (default $COMPIDX_SEED or 0)");
  gen->add_option("--max-tries", gen_max_tries, "rejection sampling budget (sink-cycle)");
  gen->add_option("-o,--output", gen_out, "output file; .dot writes DOT ('-' for stdout)");

  // verify
  std::string verify_config, verify_report, verify_replay;
  int verify_jobs = 1;
  auto* verify = app.add_subcommand("verify", "run a verification suite, or replay one digraph");
  verify->add_option("config", verify_config, "suite config JSON");
  verify->add_option("--report", verify_report, "report path (overrides the config's)");
  verify->add_option("--jobs", verify_jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--replay", verify_replay, "check every claim on one digraph file");

  // power
  std::string power_file, power_dot;
  std::size_t power_m = 0;
  auto* power = app.add_subcommand("power", "export C^M(D)");
  power->add_option("file", power_file, "digraph file")->required();
  power->add_option("-m", power_m, "step count")->required()->check(CLI::PositiveNumber);
  power->add_option("--dot", power_dot, "DOT output file ('-' for stdout, the default)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (analyze->parsed()) {
      const Digraph d = read_digraph(analyze_file);
      std::size_t mmax = 0;
      if (analyze_mmax) {
        mmax = *analyze_mmax;
      } else {
        const auto profile = competition_profile(d);
        mmax = profile.cindex + profile.eventual_graph_period;
      }
      const json j = analyze_json(d, mmax);
      if (!analyze_dot_dir.empty()) {
        fs::create_directories(analyze_dot_dir);
        const PowerSequence powers(d);
        for (std::size_t m = 1; m <= mmax; ++m)
          write_text_file(fs::path(analyze_dot_dir) / ("C" + std::to_string(m) + ".dot"),
                          to_dot(powers.graph(m), "C" + std::to_string(m)));
      }
      if (!analyze_json_out.empty()) {
        emit(analyze_json_out, j.dump(2) + "\n", out);
      } else {
        out << analyze_text(j);
      }
      return kOk;
    }

    if (gen->parsed()) {
      const Seed seed{gen_seed ? *gen_seed : default_seed()};
      auto sizes_from = [&](const std::string& text) {
        std::vector<std::size_t> sizes;
        std::istringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
          try {
            std::size_t used = 0;
            sizes.push_back(std::stoul(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
          } catch (const std::logic_error&) {
            throw Error(ErrorCode::ParseError, "bad part size \"" + item + "\"");
          }
        }
        return sizes;
      };
      auto need = [&](bool ok, const char* what) {
        if (!ok) throw CLI::RequiredError(std::string(what) + " is required for gen " + gen_kind);
      };
      Digraph d;
      if (gen_kind == "transitive") {
        need(gen_n > 0, "--n");
        d = gen_transitive_tournament(gen_n);
      } else if (gen_kind == "zeta") {
        need(gen_n > 0, "--n");
        need(gen->count("--i") > 0, "--i");
        d = gen_zeta_tournament(gen_n, gen_i);
      } else if (gen_kind == "acyclic-kpartite") {
        need(!gen_spec.empty(), "--spec");
        std::vector<std::size_t> sizes;
        std::vector<int> parts;
        parse_layer_spec(gen_spec, sizes, parts);
        d = gen_acyclic_kpartite(sizes, parts);
      } else if (gen_kind == "random-kpartite") {
        need(!gen_parts.empty(), "--parts");
        d = gen_random_kpartite(sizes_from(gen_parts), seed);
      } else {
        need(!gen_parts.empty(), "--parts");
        d = gen_sink_cycle_kpartite(sizes_from(gen_parts), seed, gen_max_tries);
      }
      emit(gen_out, is_dot_path(gen_out) ? to_dot(d) : to_text(d), out);
      return kOk;
    }

    if (verify->parsed()) {
      if (!verify_replay.empty()) {
        const Digraph d = read_digraph(verify_replay);
        bool ok = true;
        json results = json::array();
        for (const auto& r : check_instance(d)) {
          ok = ok && (!r.applicable || r.passed);
          results.push_back(to_json(r));
        }
        out << results.dump(2) << '\n';
        return ok ? kOk : kClaimFailed;
      }
      if (verify_config.empty()) throw CLI::RequiredError("verify needs a suite config or --replay");
      SuiteConfig config = read_suite_config(verify_config);
      if (!verify_report.empty()) config.report = verify_report;
      const SuiteReport report = run_suite(config, verify_jobs);
      if (config.report) {
        if (*config.report == "-") {
          out << to_json(report).dump(2) << '\n';
        } else {
          write_report(*config.report, report);
        }
      }
      print_summary(report, config.report && *config.report == "-" ? err : out);
      return report.all_passed() ? kOk : kClaimFailed;
    }

    const Digraph d = read_digraph(power_file);
    const auto g = m_step_competition_graph(d, power_m);
    emit(power_dot.empty() ? "-" : power_dot, to_dot(g, "C" + std::to_string(power_m)), out);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_internal(e.code()) ? kInternal : kUsage;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace compidx::cli
