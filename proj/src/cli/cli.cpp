#include "tetra/cli/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tetra/dsl/eval.hpp"
#include "tetra/laws/laws.hpp"

namespace tetra::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string law = "all";
  std::string backend = "endo";
  std::uint32_t prime = 97;
  int dim = 1;
  int trials = 200;
  std::uint64_t seed = 42;
  int max_degree = 5;
  int budget = 0;
  std::string canary = "none";
  std::string report;
  std::string script;
  std::string witness;
  std::string out;
  std::string config;
  bool shrink = false;
};

ordered_json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kBadConfig, "cannot open '" + path + "'");
  try {
    return ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::kBadConfig, "cannot write '" + path + "'");
  file << text;
}

// Fills options the command line left unset from a JSON config whose keys
// match the long flag names (with '-' or '_').
void apply_config(const CLI::App& cmd, Options& o) {
  if (o.config.empty()) return;
  const auto j = read_json(o.config);
  if (!j.is_object()) throw Error(ErrorCode::kBadConfig, "config must be a JSON object");
  static const std::set<std::string, std::less<>> known{
      "law", "backend", "prime", "dim", "trials", "seed", "max-degree", "degree-budget", "canary", "report",
      "script", "shrink"};
  // Keys for another subcommand are ignored so one file can serve both.
  auto unset = [&](const std::string& flag) {
    if (!known.contains(flag)) throw Error(ErrorCode::kBadConfig, "unknown config key '" + flag + "'");
    const CLI::Option* opt = cmd.get_option_no_throw("--" + flag);
    return opt != nullptr && opt->count() == 0;
  };
  for (const auto& [key, value] : j.items()) {
    std::string flag = key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    try {
      if (!unset(flag)) continue;
      if (flag == "law") o.law = value.get<std::string>();
      else if (flag == "backend") o.backend = value.get<std::string>();
      else if (flag == "prime") o.prime = value.get<std::uint32_t>();
      else if (flag == "dim") o.dim = value.get<int>();
      else if (flag == "trials") o.trials = value.get<int>();
      else if (flag == "seed") o.seed = value.get<std::uint64_t>();
      else if (flag == "max-degree") o.max_degree = value.get<int>();
      else if (flag == "degree-budget") o.budget = value.get<int>();
      else if (flag == "canary") o.canary = value.get<std::string>();
      else if (flag == "report") o.report = value.get<std::string>();
      else if (flag == "script") o.script = value.get<std::string>();
      else if (flag == "shrink") o.shrink = value.get<bool>();
    } catch (const nlohmann::json::exception&) {
      throw Error(ErrorCode::kBadConfig, "config key '" + key + "' has the wrong type");
    }
  }
}

laws::TrialConfig trial_config(const Options& o) {
  laws::TrialConfig cfg;
  cfg.backend = parse_backend(o.backend);
  cfg.prime = o.prime;
  cfg.dim = o.dim;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.max_degree = o.max_degree;
  cfg.degree_budget = o.budget;
  cfg.canary = parse_canary(o.canary);
  cfg.validate();
  return cfg;
}

void add_run_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--backend", o.backend, "endo or free")->check(CLI::IsMember({"endo", "free"}));
  cmd->add_option("--prime", o.prime, "odd prime p of the field F_p");
  cmd->add_option("--dim", o.dim, "dimension d of A = F_p^d (endo backend)");
  cmd->add_option("--seed", o.seed, "master seed");
  cmd->add_option("--config", o.config, "JSON file with defaults for these flags");
}

int run_verify(const Options& o, std::ostream& out) {
  const auto cfg = trial_config(o);
  std::vector<laws::Report> reports;
  if (o.law == "all") {
    reports = laws::run_all(cfg);
  } else {
    reports.push_back(laws::run_law(o.law, cfg));
  }
  bool ok = true;
  for (auto& r : reports) {
    if (o.shrink) {
      for (auto& w : r.failures) w = laws::shrink(w);
    }
    ok = ok && (r.status == laws::Status::kPass || r.status == laws::Status::kSkipped);
    std::string status = laws::to_string(r.status);
    std::transform(status.begin(), status.end(), status.begin(), ::toupper);
    out << status << ' ' << r.law_id << " trials=" << r.trials << " vacuous=" << r.vacuous;
    if (!r.failures.empty()) out << " first-failure=\"" << r.failures.front().identity << "\"";
    if (!r.note.empty()) out << " (" << r.note << ")";
    out << '\n';
  }
  const auto json = laws::to_json(reports, cfg);
  if (!o.report.empty()) write_text(o.report, json.dump(2) + "\n");
  out << (ok ? "all laws hold" : "some laws failed") << '\n';
  return ok ? 0 : 1;
}

int run_eval(const Options& o, std::ostream& out) {
  if (o.script.empty()) throw Error(ErrorCode::kBadConfig, "eval needs --script");
  std::ifstream in(o.script);
  if (!in) throw Error(ErrorCode::kBadConfig, "cannot open '" + o.script + "'");
  std::stringstream text;
  text << in.rdbuf();
  dsl::EvalConfig cfg;
  cfg.backend = parse_backend(o.backend);
  cfg.prime = o.prime;
  cfg.dim = o.dim;
  cfg.seed = o.seed;
  out << dsl::eval_script(dsl::parse(text.str()), cfg).dump() << '\n';
  return 0;
}

int run_replay(const Options& o, std::ostream& out) {
  auto j = read_json(o.witness);
  // Accept a bare witness, a single law report or a whole suite report.
  if (j.contains("reports")) {
    ordered_json found;
    for (const auto& r : j.at("reports")) {
      if (!r.at("failures").empty()) {
        found = r.at("failures").at(0);
        break;
      }
    }
    if (found.is_null()) throw Error(ErrorCode::kBadConfig, "report contains no failures");
    j = found;
  } else if (j.contains("failures")) {
    if (j.at("failures").empty()) throw Error(ErrorCode::kBadConfig, "report contains no failures");
    j = ordered_json(j.at("failures").at(0));
  }
  auto w = laws::witness_from_json(j);
  const bool fails = laws::reproduces(w);
  out << w.law_id << (fails ? " still fails" : " no longer fails") << " (degrees";
  for (int d : w.degrees) out << ' ' << d;
  out << ")\n";
  if (fails && o.shrink) {
    w = laws::shrink(w);
    out << "shrunk to degrees";
    for (int d : w.degrees) out << ' ' << d;
    out << '\n';
  }
  if (!o.out.empty()) write_text(o.out, laws::to_json(w).dump(2) + "\n");
  return fails ? 1 : 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pre-operad calculus: evaluate expressions and verify identities"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "run identity checks and write a JSON report");
  add_run_flags(verify, o);
  verify->add_option("--law", o.law, "law id or 'all'");
  verify->add_option("--trials", o.trials, "random trials per law");
  verify->add_option("--max-degree", o.max_degree, "largest sampled degree");
  verify->add_option("--degree-budget", o.budget, "bound on the degree sum of a trial (0: default)");
  verify->add_option("--canary", o.canary, "deliberate defect: none, cup-sign, drop-koszul, g-range");
  verify->add_option("--report", o.report, "where to write the JSON report");
  verify->add_flag("--shrink", o.shrink, "shrink failing witnesses before reporting");

  auto* eval = app.add_subcommand("eval", "evaluate an expression script");
  add_run_flags(eval, o);
  eval->add_option("--script,script", o.script, "script file");

  auto* list = app.add_subcommand("laws", "list the law ids");

  auto* replay = app.add_subcommand("replay", "re-check a witness from a report or witness file");
  replay->add_option("--witness,witness", o.witness, "witness or report JSON")->required();
  replay->add_flag("--shrink", o.shrink, "shrink the witness");
  replay->add_option("--out", o.out, "where to write the (shrunk) witness");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list->parsed()) {
      for (const auto& law : laws::list_laws()) out << law.id << "  " << law.description << '\n';
      return 0;
    }
    if (verify->parsed()) {
      apply_config(*verify, o);
      return run_verify(o, out);
    }
    if (eval->parsed()) {
      apply_config(*eval, o);
      return run_eval(o, out);
    }
    if (replay->parsed()) return run_replay(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace tetra::cli
