#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "compidx/checks.hpp"
#include "compidx/digraph.hpp"

namespace compidx {

inline constexpr int kReportSchema = 1;

/// One corpus entry expanded into an indexable family of digraphs.
struct CorpusSource {
  nlohmann::json descriptor;
  std::uint64_t count = 0;
  std::function<Digraph(std::uint64_t)> make;
};

/// Expands a generator spec object (see README for the accepted "kind"s).
/// Throws ParseError on malformed specs.
CorpusSource expand_corpus_entry(const nlohmann::json& spec, const std::filesystem::path& base_dir = {});

struct SuiteConfig {
  nlohmann::json corpus = nlohmann::json::array();
  Caps caps;
  std::optional<std::filesystem::path> report;
  /// Restricts evaluation to these claims (all when empty).
  std::vector<ClaimId> claims;
  /// Claims whose verdict is forced to "failed" wherever applicable; exercises
  /// the failure-reporting path end to end.
  std::vector<ClaimId> inject_fault;
  /// Directory used to resolve relative "file" corpus entries.
  std::filesystem::path base_dir;
};

SuiteConfig parse_suite_config(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
SuiteConfig read_suite_config(const std::filesystem::path& path);

struct ClaimTally {
  std::size_t applicable = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::map<std::string, std::size_t> observations;
};

struct SuiteFailure {
  std::uint64_t instance_id = 0;
  std::string source;
  std::string digraph;  // text format, replayable
  ClaimResult result;
};

struct SuiteReport {
  nlohmann::json corpus;
  Caps caps;
  std::uint64_t instances = 0;
  std::map<ClaimId, ClaimTally> claims;
  /// Sorted by instance id, then claim.
  std::vector<SuiteFailure> failures;
  double wall_seconds = 0.0;

  bool all_passed() const noexcept { return failures.empty(); }
};

/// Evaluates check_instance over the whole corpus with `jobs` OpenMP threads
/// (1 runs the serial loop). Everything except wall_seconds is independent of
/// `jobs`.
SuiteReport run_suite(const SuiteConfig& config, int jobs = 1);

nlohmann::json to_json(const SuiteReport& report);
/// Throws IoError.
void write_report(const std::filesystem::path& path, const SuiteReport& report);

nlohmann::json to_json(const Caps& caps);
nlohmann::json to_json(const ClaimResult& result);

}  // namespace compidx
