#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tetra/cli/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tetracomp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = tetra::cli::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "tetracomp_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

nlohmann::json read(const fs::path& p) { return nlohmann::json::parse(std::ifstream(p)); }

}  // namespace

TEST_CASE("laws lists every id") {
  const auto r = run({"laws"});
  CHECK(r.code == 0);
  int lines = 0;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) lines += line.rfind("L", 0) == 0 ? 1 : 0;
  CHECK(lines >= 18);
  CHECK(r.out.find("L08-main-theorem") != std::string::npos);
}

TEST_CASE("verify writes a report") {
  const auto path = scratch("all.json");
  const auto r = run({"verify", "--law", "all", "--backend", "endo", "--prime", "97", "--dim", "1", "--trials", "200",
                      "--seed", "42", "--report", path.string()});
  CHECK(r.code == 0);
  const auto j = read(path);
  REQUIRE(j.contains("reports"));
  for (const auto& rep : j["reports"]) {
    for (const char* key : {"law_id", "status", "trials", "vacuous", "failures", "millis"}) CHECK(rep.contains(key));
  }
  CHECK(j["summary"]["fail"] == 0);
}

TEST_CASE("verify on the free backend") {
  CHECK(run({"verify", "--law", "L08-main-theorem", "--backend", "free", "--trials", "50"}).code == 0);
}

TEST_CASE("verify is deterministic") {
  const auto a = scratch("a.json"), b = scratch("b.json");
  for (const auto& p : {a, b}) {
    run({"verify", "--law", "L07-tribrace-deviation", "--dim", "2", "--trials", "20", "--seed", "9", "--report",
         p.string()});
  }
  auto ja = read(a), jb = read(b);
  for (auto* j : {&ja, &jb})
    for (auto& rep : (*j)["reports"]) rep.erase("millis");
  CHECK(ja == jb);
}

TEST_CASE("canary run fails and its witness replays") {
  const auto report = scratch("canary.json"), shrunk = scratch("shrunk.json");
  const auto r = run({"verify", "--law", "L01-cuppro", "--dim", "2", "--trials", "50", "--canary", "cup-sign",
                      "--report", report.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL L01-cuppro") != std::string::npos);
  const auto replay = run({"replay", report.string(), "--shrink", "--out", shrunk.string()});
  CHECK(replay.code == 1);
  CHECK(replay.out.find("still fails") != std::string::npos);
  const auto again = run({"replay", "--witness", shrunk.string()});
  CHECK(again.code == 1);
}

TEST_CASE("config file fills unset flags") {
  const auto cfg = scratch("cfg.json"), report = scratch("cfg_report.json");
  write(cfg, R"({"law": "L16-unit-laws", "trials": 7, "dim": 3, "seed": 1})");
  CHECK(run({"verify", "--config", cfg.string(), "--trials", "4", "--report", report.string()}).code == 0);
  const auto j = read(report);
  CHECK(j["config"]["trials"] == 4);
  CHECK(j["config"]["dim"] == 3);
  CHECK(j["reports"].size() == 1);
  write(cfg, R"({"colour": "red"})");
  CHECK(run({"verify", "--config", cfg.string()}).code == 2);
}

TEST_CASE("eval") {
  const auto script = scratch("cup.tc");
  write(script, "let mu: deg 2 = 1;\nlet f: deg 1 = 2;\nlet g: deg 1 = 3;\ncup(f, g)\n");
  const auto r = run({"eval", "--script", script.string()});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["payload"] == nlohmann::json::array({91}));

  write(script, "let h: deg 2; let f: deg 1; comp(h, f, 0)");
  const auto f = run({"eval", script.string(), "--backend", "free"});
  CHECK(f.code == 0);
  CHECK(f.out.find("(h (f _) _)") != std::string::npos);

  write(script, "comp(f,g,)");
  const auto bad = run({"eval", script.string()});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 1, col 10") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"verify", "--bogus"}).code == 2);
  CHECK(run({"verify", "--law", "L99"}).code == 2);
  CHECK(run({"verify", "--backend", "matrix"}).code == 2);
  CHECK(run({"eval"}).code == 2);
  CHECK(run({"replay", scratch("missing.json").string()}).code == 2);
}
