#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "tetra/laws/laws.hpp"

using namespace tetra;
using namespace tetra::laws;

namespace {

nlohmann::ordered_json without_timing(nlohmann::ordered_json j) {
  if (j.contains("millis")) j.erase("millis");
  if (j.contains("reports")) {
    for (auto& r : j["reports"]) r.erase("millis");
  }
  return j;
}

TrialConfig small(int trials = 30) {
  TrialConfig cfg;
  cfg.trials = trials;
  cfg.seed = 7;
  return cfg;
}

}  // namespace

TEST_CASE("law list") {
  const auto& laws = list_laws();
  CHECK(laws.size() >= 18);
  std::set<std::string> ids;
  for (const auto& law : laws) {
    ids.insert(law.id);
    CHECK_FALSE(law.anchor.empty());
    CHECK_FALSE(law.roles.empty());
  }
  CHECK(ids.size() == laws.size());
  CHECK(ids.count("L08-main-theorem") == 1);
  CHECK(find_law("L12-delta-squared").applicability == Applicability::kEndoOnly);
  CHECK_ERROR_CODE(find_law("L99-nothing"), ErrorCode::kUnknownLaw);
  CHECK_ERROR_CODE(run_law("nope", small()), ErrorCode::kUnknownLaw);
}

TEST_CASE("bad configs") {
  auto cfg = small();
  cfg.trials = 0;
  CHECK_ERROR_CODE(run_law("L01-cuppro", cfg), ErrorCode::kBadConfig);
  cfg = small();
  cfg.prime = 91;
  CHECK_ERROR_CODE(run_law("L01-cuppro", cfg), ErrorCode::kBadConfig);
  cfg = small();
  cfg.dim = 0;
  CHECK_ERROR_CODE(run_law("L01-cuppro", cfg), ErrorCode::kBadConfig);
  CHECK_ERROR_CODE(parse_canary("sign"), ErrorCode::kBadConfig);
  CHECK_ERROR_CODE(parse_backend("matrix"), ErrorCode::kBadConfig);
}

TEST_CASE("every law passes on both backends") {
  for (const auto& law : list_laws()) {
    for (auto backend : {BackendKind::kEndo, BackendKind::kFree}) {
      auto cfg = small(20);
      cfg.backend = backend;
      const auto r = run_law(law.id, cfg);
      INFO(law.id << " on " << to_string(backend) << ": " << r.note);
      CHECK(r.trials == (r.status == Status::kSkipped ? 0 : 20));
      CHECK(r.failures.empty());
      if (law.applicability == Applicability::kEndoOnly && backend == BackendKind::kFree) {
        CHECK(r.status == Status::kSkipped);
      } else {
        CHECK(r.status == Status::kPass);
      }
    }
  }
}

TEST_CASE("main theorem at the reference configuration") {
  TrialConfig cfg;
  cfg.trials = 200;
  const auto r = run_law("L08-main-theorem", cfg);
  CHECK(r.status == Status::kPass);
  CHECK(r.failures.empty());
  CHECK(2 * r.vacuous <= r.trials);
}

TEST_CASE("delta squared with associative fixtures") {
  for (int dim = 1; dim <= 4; ++dim) {
    auto cfg = small(40);
    cfg.dim = dim;
    cfg.max_degree = 4;
    const auto r = run_law("L12-delta-squared", cfg);
    INFO("dim " << dim << " " << r.note);
    CHECK(r.status == Status::kPass);
  }
}

TEST_CASE("reports are deterministic apart from timing") {
  for (const char* id : {"L06-getzler-gerstenhaber", "L14-cross-backend-morphism"}) {
    const auto a = to_json(run_law(id, small(25)));
    const auto b = to_json(run_law(id, small(25)));
    CHECK(without_timing(a).dump() == without_timing(b).dump());
  }
  auto cfg = small(10);
  cfg.canary = Canary::kCupSignFlip;
  const auto a = to_json(run_all(cfg), cfg), b = to_json(run_all(cfg), cfg);
  CHECK(without_timing(a).dump() == without_timing(b).dump());
}

TEST_CASE("report schema") {
  const auto j = to_json(run_law("L04-delta-expansion", small(5)));
  for (const char* key : {"law_id", "status", "trials", "vacuous", "failures", "millis"}) CHECK(j.contains(key));
  CHECK(j["failures"].is_array());
}

TEST_CASE("each canary is caught") {
  for (auto canary : {Canary::kCupSignFlip, Canary::kDropKoszulSign, Canary::kGRangeOffByOne}) {
    auto cfg = small(50);
    cfg.canary = canary;
    int failing = 0;
    for (const auto& r : run_all(cfg)) {
      if (r.status != Status::kFail) continue;
      ++failing;
      REQUIRE_FALSE(r.failures.empty());
      CHECK(r.failures.size() <= 3);
      for (const auto& w : r.failures) CHECK(reproduces(w));
    }
    INFO(to_string(canary));
    CHECK(failing >= 1);
  }
}

TEST_CASE("witness round trip and replay") {
  for (auto backend : {BackendKind::kEndo, BackendKind::kFree}) {
    auto cfg = small(20);
    cfg.backend = backend;
    cfg.dim = 2;
    cfg.canary = Canary::kDropKoszulSign;
    const auto r = run_law("L15-composition-relations", cfg);
    REQUIRE(r.status == Status::kFail);
    const auto& w = r.failures.front();
    CHECK(w.lhs.has_value());
    CHECK(w.rhs.has_value());
    const auto back = witness_from_json(to_json(w));
    CHECK(to_json(back).dump() == to_json(w).dump());
    CHECK(reproduces(back));
    auto fixed = back;
    fixed.canary = Canary::kNone;
    CHECK_FALSE(reproduces(fixed));
  }
  CHECK_ERROR_CODE(witness_from_json(nlohmann::ordered_json::object()), ErrorCode::kParseError);
}

TEST_CASE("shrink") {
  TrialConfig cfg;
  cfg.dim = 2;
  cfg.canary = Canary::kCupSignFlip;
  std::optional<Witness> found;
  for (std::uint64_t seed = 1; seed < 20 && !found; ++seed) found = probe_instance("L01-cuppro", cfg, seed, {5, 5});
  REQUIRE(found.has_value());
  CHECK(found->degree_sum() == 10);
  const auto small_w = shrink(*found);
  CHECK(small_w.degree_sum() < 10);
  CHECK(reproduces(small_w));
  const auto again = shrink(small_w);
  CHECK(to_json(again).dump() == to_json(small_w).dump());

  // A witness that no longer fails comes back unchanged.
  auto passing = small_w;
  passing.canary = Canary::kNone;
  CHECK(to_json(shrink(passing)).dump() == to_json(passing).dump());
}

TEST_CASE("probe_instance") {
  TrialConfig cfg;
  CHECK_FALSE(probe_instance("L15-composition-relations", cfg, 3, {3, 2, 2}).has_value());
  CHECK_ERROR_CODE(probe_instance("L15-composition-relations", cfg, 3, {3, 2}), ErrorCode::kBadConfig);
}
