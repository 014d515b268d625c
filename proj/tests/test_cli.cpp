#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "compidx/digraph_io.hpp"
#include "compidx/generators.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = compidx::cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("compidx_cli_" + std::to_string(std::rand()))) { fs::create_directories(path); }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen zeta then analyze") {
  TempDir tmp;
  REQUIRE(run({"gen", "zeta", "--n", "5", "--i", "2", "-o", tmp / "d.txt"}).code == 0);
  auto r = run({"analyze", tmp / "d.txt", "--json", "-"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["zeta"] == 2);
  CHECK(j["cindex"] == 2);
  CHECK(j["cperiod"] == 1);
  CHECK(j.contains("eventual_period"));
  CHECK(j["vertex_types"].size() == 2);
  CHECK(j["graphs"].size() == 3);
}

TEST_CASE("analyze is byte-identical across runs and writes DOT files") {
  TempDir tmp;
  compidx::write_digraph(tmp / "d.txt", compidx::gen_sink_cycle_kpartite({2, 2, 2}, compidx::Seed{8}));
  auto a = run({"analyze", tmp / "d.txt", "--json", "-", "--dot", tmp / "dots"});
  auto b = run({"analyze", tmp / "d.txt", "--json", "-"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto j = json::parse(a.out);
  CHECK(j["vertex_types"].is_array());
  CHECK(fs::exists(tmp / "dots/C1.dot"));
  CHECK(run({"analyze", tmp / "d.txt"}).out.find("cindex") != std::string::npos);
}

TEST_CASE("power on the (0,2,2,2) tournament is K3 plus an isolated vertex") {
  TempDir tmp;
  std::ofstream(tmp / "t.txt") << "digraph 4\n1 0\n2 0\n3 0\n1 2\n2 3\n3 1\n";
  auto r = run({"power", tmp / "t.txt", "-m", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "graph C2 {\n  v0;\n  v1;\n  v2;\n  v3;\n  v1 -- v2;\n  v1 -- v3;\n  v2 -- v3;\n}\n");
}

TEST_CASE("gen kinds and round trips") {
  TempDir tmp;
  CHECK(run({"gen", "transitive", "--n", "4", "-o", tmp / "t.dot"}).code == 0);
  CHECK(compidx::read_digraph(tmp / "t.dot") == compidx::gen_transitive_tournament(4));
  CHECK(run({"gen", "acyclic-kpartite", "--spec", "2:0,1:1,1:0", "-o", tmp / "a.txt"}).code == 0);
  CHECK(compidx::read_digraph(tmp / "a.txt").vertex_count() == 4);
  auto r1 = run({"gen", "random-kpartite", "--parts", "2,2,1", "--seed", "4"});
  auto r2 = run({"gen", "random-kpartite", "--parts", "2,2,1", "--seed", "4"});
  CHECK(r1.out == r2.out);
  CHECK(compidx::parse_digraph(r1.out) == compidx::gen_random_kpartite({2, 2, 1}, compidx::Seed{4}));
  CHECK(run({"gen", "sink-cycle", "--parts", "2,3", "--seed", "1"}).code == 0);
}

TEST_CASE("COMPIDX_SEED supplies the default seed") {
  setenv("COMPIDX_SEED", "4", 1);
  auto env = run({"gen", "random-kpartite", "--parts", "2,2,1"});
  unsetenv("COMPIDX_SEED");
  CHECK(env.out == run({"gen", "random-kpartite", "--parts", "2,2,1", "--seed", "4"}).out);
  CHECK(run({"gen", "random-kpartite", "--parts", "2,2,1"}).out ==
        run({"gen", "random-kpartite", "--parts", "2,2,1", "--seed", "0"}).out);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"gen", "zeta", "--n", "4", "--i", "2"}).code == 2);
  CHECK(run({"gen", "zeta", "--n", "5"}).code == 2);
  CHECK(run({"gen", "acyclic-kpartite", "--spec", "2:0,x"}).code == 2);
  CHECK(run({"analyze", "/nonexistent"}).code == 2);
  CHECK(run({"power", "/nonexistent", "-m", "0"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify passes, then exits 1 on an injected fault") {
  TempDir tmp;
  std::ofstream(tmp / "ok.json") << R"({"corpus": [{"kind": "zeta", "n": [2, 6]}], "report": "ok_report.json"})";
  auto ok = run({"verify", tmp / "ok.json", "--jobs", "2"});
  CHECK(ok.code == 0);
  auto report = json::parse(std::ifstream(tmp / "ok_report.json"));
  CHECK(report["all_passed"] == true);

  std::ofstream(tmp / "bad.json") << R"({"corpus": [{"kind": "transitive", "n": 4}], "inject_fault": ["T5.4"]})";
  auto bad = run({"verify", tmp / "bad.json", "--report", tmp / "bad_report.json"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL T5.4") != std::string::npos);
  auto bad_report = json::parse(std::ifstream(tmp / "bad_report.json"));
  REQUIRE(bad_report["failures"].size() == 1);

  // The serialized failure replays through the CLI.
  std::ofstream(tmp / "replay.txt") << bad_report["failures"][0]["digraph"].get<std::string>();
  auto replay = run({"verify", "--replay", tmp / "replay.txt"});
  CHECK(replay.code == 0);
  CHECK(json::parse(replay.out).size() == 23);
}
