#include <algorithm>
#include <chrono>
#include <cmath>

#include "checkers.hpp"
#include "tetra/error.hpp"
#include "tetra/laws/laws.hpp"

namespace tetra::laws {

namespace {

using detail::CheckContext;
using detail::Checkers;
using detail::Outcome;
using endo::EndoBackend;
using endo::MultilinearMap;
using free::FreeBackend;
using free::FreeElement;

constexpr int kMaxAttempts = 8;
constexpr std::size_t kMaxWitnesses = 3;

enum : std::uint64_t { kDegreeStream = 0, kElementStream = 1, kCheckStream = 2 };

std::size_t law_index(std::string_view id) {
  const auto& laws = list_laws();
  const auto& info = find_law(id);
  return static_cast<std::size_t>(&info - laws.data());
}

bool uses_free(const LawInfo& info, BackendKind backend) {
  return info.applicability == Applicability::kCross ||
         (info.applicability == Applicability::kBoth && backend == BackendKind::kFree);
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Coefficient nonzero(const CoefficientRing& ring, Rng& rng) {
  return {ring, static_cast<long long>(1 + sample_residue(ring.modulus() - 1, rng))};
}

std::vector<int> sample_degrees(const LawInfo& info, const TrialConfig& cfg, bool force_tetra, Rng& rng) {
  const int n = static_cast<int>(info.roles.size());
  const int top = info.applicability == Applicability::kCross ? std::min(cfg.max_degree, 3) : cfg.max_degree;
  const int budget = std::max(cfg.effective_budget(), n + (force_tetra ? 2 : 0));
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int attempt = 0; attempt < 64; ++attempt) {
    for (int p = 0; p < n; ++p) deg[p] = uniform(rng, (p == 0 && force_tetra) ? std::min(3, top) : 1, top);
    int sum = 0;
    for (int x : deg) sum += x;
    if (sum <= budget) return deg;
  }
  // Shave the largest entries until the budget fits.
  for (int sum = [&] { int s = 0; for (int x : deg) s += x; return s; }(); sum > budget; --sum) {
    auto it = std::max_element(deg.begin() + (force_tetra ? 1 : 0), deg.end());
    if (it == deg.end() || *it == 1) it = deg.begin();
    --*it;
  }
  return deg;
}

// A random binary tree of μ vertices with n leaves; the bare leaf for n = 1.
std::vector<std::int32_t> mu_tree_code(int mu_id, int n, Rng& rng) {
  if (n == 1) return {free::PlanarTree::kLeaf};
  const int left = uniform(rng, 1, n - 1);
  std::vector<std::int32_t> code{mu_id};
  for (int part : {left, n - left}) {
    auto sub = mu_tree_code(mu_id, part, rng);
    code.insert(code.end(), sub.begin(), sub.end());
  }
  return code;
}

FreeElement random_free(const CoefficientRing& ring, const free::SignaturePtr& sig, const std::string& role,
                        Rng& rng) {
  auto x = FreeElement::generator(ring, sig, role).scaled(nonzero(ring, rng));
  if (uniform(rng, 0, 1) == 1) {
    const int mu = sig->id_of("mu");
    x.add_term(free::PlanarTree::from_code(*sig, mu_tree_code(mu, x.degree(), rng)), nonzero(ring, rng));
  }
  return x;
}

MultilinearMap associative_fixture(const CoefficientRing& ring, int dim, std::uint64_t seed) {
  if (dim == 4 && (seed & 1U) != 0) return endo::matrix_product(ring);
  return endo::componentwise_product(ring, dim);
}

std::vector<GradedElement> make_elements(const LawInfo& info, const TrialConfig& cfg, std::uint64_t seed,
                                         const std::vector<int>& degrees) {
  const auto ring = CoefficientRing::prime_field(cfg.prime);
  Rng rng(derive_seed(seed, kElementStream));
  std::vector<GradedElement> out;
  if (uses_free(info, cfg.backend)) {
    std::vector<free::GeneratorSpec> gens{{"mu", 2}};
    for (std::size_t p = 0; p < degrees.size(); ++p) gens.push_back({info.roles[p], degrees[p]});
    auto sig = free::make_signature(std::move(gens));
    out.emplace_back(FreeElement::generator(ring, sig, "mu"));
    for (const auto& role : info.roles) out.emplace_back(random_free(ring, sig, role, rng));
    return out;
  }
  if (info.applicability == Applicability::kEndoOnly) {
    out.emplace_back(associative_fixture(ring, cfg.dim, seed));
  } else {
    out.emplace_back(endo::random_map(ring, cfg.dim, 2, rng));
  }
  for (int d : degrees) out.emplace_back(endo::random_map(ring, cfg.dim, d, rng));
  return out;
}

Outcome cross_morphism(const Calculus<FreeBackend>& fc, const std::vector<FreeElement>& x, CheckContext& ctx) {
  const auto& ring = fc.backend().ring;
  const auto& sig = fc.backend().signature;
  free::Assignment assign;
  for (const auto& g : sig->generators()) assign.emplace(g.name, endo::random_map(ring, ctx.dim, g.degree, ctx.rng));
  const Calculus<EndoBackend> ec(EndoBackend{ring, ctx.dim}, assign.at("mu"), fc.canary());
  auto ev = [&](const FreeElement& e) { return free::evaluate_hom(e, assign, ctx.dim); };
  detail::Probe<MultilinearMap> p;

  // Random composition words of one to four vertices, built on both sides.
  for (int word = 0; word < 3; ++word) {
    const int vertices = uniform(ctx.rng, 1, 4);
    auto pick = [&] { return static_cast<int>(uniform(ctx.rng, 0, static_cast<int>(sig->size()) - 1)); };
    int id = pick();
    FreeElement fw = FreeElement::generator(ring, sig, sig->name(id));
    MultilinearMap ew = assign.at(sig->name(id));
    for (int v = 1; v < vertices; ++v) {
      id = pick();
      const auto gf = FreeElement::generator(ring, sig, sig->name(id));
      const auto& ge = assign.at(sig->name(id));
      if (uniform(ctx.rng, 0, 1) == 0) {
        const int i = uniform(ctx.rng, 0, fw.degree() - 1);
        fw = fc.compose(fw, gf, i);
        ew = ec.compose(ew, ge, i);
      } else {
        const int i = uniform(ctx.rng, 0, gf.degree() - 1);
        fw = fc.compose(gf, fw, i);
        ew = ec.compose(ge, ew, i);
      }
    }
    if (!p.eq(ev(fw), ew, "ev(word) = word in End(A)")) return p.done();
  }

  const int i = uniform(ctx.rng, 0, x[0].degree() - 1);
  const auto e0 = ev(x[0]), e1 = ev(x[1]), e2 = ev(x[2]), e3 = ev(x[3]);
  p.eq(ev(fc.compose(x[0], x[1], i)), ec.compose(e0, e1, i), "ev(x o_i y)") &&
      p.eq(ev(fc.cup(x[0], x[1])), ec.cup(e0, e1), "ev(x cup y)") &&
      p.eq(ev(fc.bullet(x[0], x[1])), ec.bullet(e0, e1), "ev(x.y)") &&
      p.eq(ev(fc.bracket(x[0], x[1])), ec.bracket(e0, e1), "ev([x,y])") &&
      p.eq(ev(fc.delta(x[0])), ec.delta(e0), "ev(delta x)") &&
      p.eq(ev(fc.tribraces(x[0], x[1], x[2])), ec.tribraces(e0, e1, e2), "ev({x,y,z})") &&
      p.eq(ev(fc.tetrabraces(x[0], x[1], x[2], x[3])), ec.tetrabraces(e0, e1, e2, e3), "ev({x,y,z,w})");
  return p.done();
}

template <class B>
Outcome dispatch(std::size_t index, const Calculus<B>& c, const std::vector<typename B::Element>& a,
                 CheckContext& ctx) {
  using K = Checkers<B>;
  switch (index) {
    case 0: return K::cuppro(c, a);
    case 1: return K::lemma_cup(c, a);
    case 2: return K::right_derivation(c, a);
    case 3: return K::delta_expansion(c, a);
    case 4: return K::bullet_deviation(c, a);
    case 5: return K::getzler_gerstenhaber(c, a);
    case 6: return K::tribrace_deviation(c, a);
    case 7: return K::main_theorem(c, a);
    case 8: return K::lemma_first(c, a);
    case 9: return K::lemma_second(c, a);
    case 10: return K::boundary_lemma(c, a);
    case 11: return K::delta_squared(c, a);
    case 12: return K::degree_bookkeeping(c, a);
    case 13:
      if constexpr (std::is_same_v<B, FreeBackend>) return cross_morphism(c, a, ctx);
      throw Error(ErrorCode::kBackendMismatch, "cross-backend law runs on free instances");
    case 14: return K::composition_relations(c, a);
    case 15: return K::unit_laws(c, a);
    case 16: return K::bg_equivalence(c, a);
    case 17: return K::scope_partition(c, a);
    case 18: return K::bracket_antisymmetry(c, a);
    case 19: return K::recap_vs_shifted(c, a);
    case 20: return K::envelope_partition(c, a);
    default: throw Error(ErrorCode::kUnknownLaw, "law index " + std::to_string(index));
  }
}

Outcome check(std::size_t index, const TrialConfig& cfg, std::uint64_t seed,
              const std::vector<GradedElement>& elements) {
  const auto ring = CoefficientRing::prime_field(cfg.prime);
  const bool signs = cfg.canary != Canary::kDropKoszulSign;
  CheckContext ctx{Rng(derive_seed(seed, kCheckStream)), cfg.dim};
  if (elements.front().backend() == BackendKind::kFree) {
    const auto& mu = elements.front().as_free();
    Calculus<FreeBackend> calc(FreeBackend{ring, mu.signature(), {signs}}, mu, cfg.canary);
    std::vector<FreeElement> args;
    for (std::size_t k = 1; k < elements.size(); ++k) args.push_back(elements[k].as_free());
    return dispatch(index, calc, args, ctx);
  }
  endo::ComposeOptions options;
  options.insertion_sign = signs;
  Calculus<EndoBackend> calc(EndoBackend{ring, cfg.dim, options}, elements.front().as_endo(), cfg.canary);
  std::vector<MultilinearMap> args;
  for (std::size_t k = 1; k < elements.size(); ++k) args.push_back(elements[k].as_endo());
  return dispatch(index, calc, args, ctx);
}

TrialConfig config_of(const Witness& w) {
  TrialConfig cfg;
  cfg.backend = w.backend;
  cfg.prime = w.prime;
  cfg.dim = w.dim;
  cfg.canary = w.canary;
  return cfg;
}

Witness make_witness(const LawInfo& info, const TrialConfig& cfg, std::uint64_t seed, std::vector<int> degrees,
                     std::vector<GradedElement> elements, Outcome outcome) {
  Witness w;
  w.law_id = info.id;
  w.backend = cfg.backend;
  w.prime = cfg.prime;
  w.dim = cfg.dim;
  w.canary = cfg.canary;
  w.seed = seed;
  w.degrees = std::move(degrees);
  w.elements = std::move(elements);
  w.identity = std::move(outcome.identity);
  w.lhs = std::move(outcome.lhs);
  w.rhs = std::move(outcome.rhs);
  w.domain_point = outcome.point;
  return w;
}

// Runs a check, turning library errors into failures so that a broken
// instance still yields a witness.
Outcome guarded_check(std::size_t index, const TrialConfig& cfg, std::uint64_t seed,
                      const std::vector<GradedElement>& elements) {
  try {
    return check(index, cfg, seed, elements);
  } catch (const Error& e) {
    return Outcome{Outcome::Kind::kFail, std::string("error: ") + e.what(), {}, {}, {}};
  }
}

struct TrialResult {
  bool vacuous = false;
  int redraws = 0;
  int lead_degree = 0;
  std::optional<Witness> failure;
};

TrialResult run_trial(const LawInfo& info, std::size_t index, const TrialConfig& cfg, int trial) {
  TrialResult result;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::uint64_t seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(trial), attempt);
    Rng rng(derive_seed(seed, kDegreeStream));
    auto degrees = sample_degrees(info, cfg, info.tetra && trial % 2 == 0, rng);
    auto elements = make_elements(info, cfg, seed, degrees);
    auto outcome = guarded_check(index, cfg, seed, elements);
    if (outcome.kind == Outcome::Kind::kVacuous) {
      ++result.redraws;
      continue;
    }
    result.lead_degree = degrees.front();
    if (outcome.kind == Outcome::Kind::kFail) {
      result.failure = make_witness(info, cfg, seed, std::move(degrees), std::move(elements), std::move(outcome));
    }
    return result;
  }
  result.vacuous = true;
  return result;
}

// One-step reductions of an element: zero a single table entry or drop a
// single term.
std::vector<GradedElement> reductions(const GradedElement& x) {
  std::vector<GradedElement> out;
  if (x.backend() == BackendKind::kEndo) {
    const auto& m = x.as_endo();
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m.entry(k).is_zero()) continue;
      auto copy = m;
      copy.set_entry(k, Coefficient::zero(m.ring()));
      out.emplace_back(std::move(copy));
    }
  } else {
    const auto& e = x.as_free();
    for (const auto& [tree, coeff] : e.terms()) {
      auto copy = e;
      copy.add_term(tree, -coeff);
      out.emplace_back(std::move(copy));
    }
  }
  return out;
}

nlohmann::ordered_json element_json(const GradedElement& x) {
  return x.backend() == BackendKind::kEndo ? endo::to_json(x.as_endo()) : free::to_json(x.as_free());
}

GradedElement element_from_json(const nlohmann::ordered_json& j, const free::SignaturePtr& sig) {
  if (sig) return free::free_from_json(j, sig);
  return endo::map_from_json(j);
}

nlohmann::ordered_json side_json(const std::optional<GradedElement>& x) {
  return x ? element_json(*x) : nlohmann::ordered_json(nullptr);
}

}  // namespace

void TrialConfig::validate() const {
  if (trials < 1) throw Error(ErrorCode::kBadConfig, "trials must be >= 1");
  if (dim < 1 || dim > 8) throw Error(ErrorCode::kBadConfig, "dim must be in [1, 8]");
  if (max_degree < 1 || max_degree > 8) throw Error(ErrorCode::kBadConfig, "max degree must be in [1, 8]");
  if (degree_budget < 0) throw Error(ErrorCode::kBadConfig, "degree budget must be >= 0");
  if (!is_prime(prime) || prime < 3) throw Error(ErrorCode::kBadConfig, "prime must be an odd prime");
}

int TrialConfig::effective_budget() const {
  if (degree_budget > 0) return degree_budget;
  if (backend == BackendKind::kFree) return 9;
  if (dim <= 2) return 12;
  if (dim == 3) return 9;
  return 7;
}

int Witness::degree_sum() const {
  int s = 0;
  for (int d : degrees) s += d;
  return s;
}

std::string to_string(Status status) {
  switch (status) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kUnderpowered: return "underpowered";
    case Status::kSkipped: return "skipped";
  }
  return "?";
}

Report run_law(std::string_view law_id, const TrialConfig& cfg) {
  const auto& info = find_law(law_id);
  const std::size_t index = law_index(law_id);
  cfg.validate();
  Report report;
  report.law_id = info.id;
  if (info.applicability == Applicability::kEndoOnly && cfg.backend == BackendKind::kFree) {
    report.status = Status::kSkipped;
    report.note = "needs an associative mu, which the free backend does not have";
    return report;
  }
  const auto start = std::chrono::steady_clock::now();
  std::vector<TrialResult> results(static_cast<std::size_t>(cfg.trials));
#pragma omp parallel for schedule(dynamic, 1)
  for (int t = 0; t < cfg.trials; ++t) {
    try {
      results[static_cast<std::size_t>(t)] = run_trial(info, index, cfg, t);
    } catch (const std::exception& e) {
      // Sampling itself failed; record it against the trial.
      Witness w;
      w.law_id = info.id;
      w.identity = std::string("error: ") + e.what();
      results[static_cast<std::size_t>(t)].failure = std::move(w);
    }
  }
  report.trials = cfg.trials;
  int failed = 0;
  for (auto& r : results) {
    report.vacuous += r.vacuous ? 1 : 0;
    report.redraws += r.redraws;
    if (!r.vacuous && r.lead_degree > 0) ++report.lead_degrees[r.lead_degree];
    if (r.failure) {
      ++failed;
      if (report.failures.size() < kMaxWitnesses) report.failures.push_back(std::move(*r.failure));
    }
  }
  if (failed > 0) {
    report.status = Status::kFail;
    report.note = std::to_string(failed) + " failing trials";
  } else if (2 * report.vacuous > report.trials) {
    report.status = Status::kUnderpowered;
    report.note = "more than half of the trials had empty index domains";
  }
  report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<Report> run_all(const TrialConfig& cfg) {
  std::vector<Report> out;
  for (const auto& law : list_laws()) out.push_back(run_law(law.id, cfg));
  return out;
}

std::optional<Witness> probe_instance(std::string_view law_id, const TrialConfig& cfg, std::uint64_t seed,
                                      const std::vector<int>& degrees) {
  const auto& info = find_law(law_id);
  if (degrees.size() != info.roles.size()) throw Error(ErrorCode::kBadConfig, "wrong number of degrees");
  auto elements = make_elements(info, cfg, seed, degrees);
  auto outcome = guarded_check(law_index(law_id), cfg, seed, elements);
  if (outcome.kind != Outcome::Kind::kFail) return std::nullopt;
  return make_witness(info, cfg, seed, degrees, std::move(elements), std::move(outcome));
}

bool reproduces(const Witness& w) {
  if (w.elements.empty()) return false;
  return guarded_check(law_index(w.law_id), config_of(w), w.seed, w.elements).kind == Outcome::Kind::kFail;
}

Witness shrink(const Witness& w) {
  if (!reproduces(w)) return w;
  const auto& info = find_law(w.law_id);
  const std::size_t index = law_index(w.law_id);
  const TrialConfig cfg = config_of(w);
  Witness cur = w;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t p = 0; p < cur.degrees.size(); ++p) {
      while (cur.degrees[p] > 1) {
        auto degrees = cur.degrees;
        --degrees[p];
        auto found = probe_instance(w.law_id, cfg, cur.seed, degrees);
        if (!found) break;
        cur = std::move(*found);
        changed = true;
      }
    }
    for (std::size_t e = 0; e < cur.elements.size(); ++e) {
      for (bool progress = true; progress;) {
        progress = false;
        for (auto& candidate : reductions(cur.elements[e])) {
          auto elements = cur.elements;
          elements[e] = std::move(candidate);
          auto outcome = guarded_check(index, cfg, cur.seed, elements);
          if (outcome.kind != Outcome::Kind::kFail) continue;
          cur = make_witness(info, cfg, cur.seed, cur.degrees, std::move(elements), std::move(outcome));
          progress = changed = true;
          break;
        }
      }
    }
  }
  return cur;
}

nlohmann::ordered_json to_json(const Witness& w) {
  nlohmann::ordered_json j;
  j["law_id"] = w.law_id;
  j["backend"] = to_string(w.backend);
  j["prime"] = w.prime;
  j["dim"] = w.dim;
  j["canary"] = to_string(w.canary);
  j["seed"] = w.seed;
  j["degrees"] = w.degrees;
  if (!w.elements.empty() && w.elements.front().backend() == BackendKind::kFree) {
    j["signature"] = free::to_json(*w.elements.front().as_free().signature());
  }
  auto elements = nlohmann::ordered_json::array();
  for (const auto& x : w.elements) elements.push_back(element_json(x));
  j["elements"] = std::move(elements);
  j["identity"] = w.identity;
  j["lhs"] = side_json(w.lhs);
  j["rhs"] = side_json(w.rhs);
  if (w.domain_point) j["domain_point"] = *w.domain_point;
  return j;
}

Witness witness_from_json(const nlohmann::ordered_json& j) {
  try {
    Witness w;
    w.law_id = j.at("law_id").get<std::string>();
    w.backend = parse_backend(j.at("backend").get<std::string>());
    w.prime = j.at("prime").get<std::uint32_t>();
    w.dim = j.at("dim").get<int>();
    w.canary = parse_canary(j.at("canary").get<std::string>());
    w.seed = j.at("seed").get<std::uint64_t>();
    w.degrees = j.at("degrees").get<std::vector<int>>();
    free::SignaturePtr sig;
    if (j.contains("signature")) sig = free::signature_from_json(j.at("signature"));
    for (const auto& e : j.at("elements")) w.elements.push_back(element_from_json(e, sig));
    w.identity = j.value("identity", "");
    if (j.contains("lhs") && !j.at("lhs").is_null()) w.lhs = element_from_json(j.at("lhs"), sig);
    if (j.contains("rhs") && !j.at("rhs").is_null()) w.rhs = element_from_json(j.at("rhs"), sig);
    if (j.contains("domain_point")) w.domain_point = j.at("domain_point").get<Point>();
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("witness JSON: ") + e.what());
  }
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["law_id"] = r.law_id;
  j["status"] = to_string(r.status);
  j["trials"] = r.trials;
  j["vacuous"] = r.vacuous;
  j["redraws"] = r.redraws;
  auto failures = nlohmann::ordered_json::array();
  for (const auto& w : r.failures) failures.push_back(to_json(w));
  j["failures"] = std::move(failures);
  auto lead = nlohmann::ordered_json::object();
  for (const auto& [degree, count] : r.lead_degrees) lead[std::to_string(degree)] = count;
  j["lead_degrees"] = std::move(lead);
  if (!r.note.empty()) j["note"] = r.note;
  j["millis"] = std::round(r.millis * 1000.0) / 1000.0;
  return j;
}

nlohmann::ordered_json to_json(const std::vector<Report>& reports, const TrialConfig& cfg) {
  nlohmann::ordered_json j;
  j["config"] = {{"backend", to_string(cfg.backend)}, {"prime", cfg.prime},
                 {"dim", cfg.dim},                    {"trials", cfg.trials},
                 {"seed", cfg.seed},                  {"max_degree", cfg.max_degree},
                 {"degree_budget", cfg.effective_budget()}, {"canary", to_string(cfg.canary)}};
  auto list = nlohmann::ordered_json::array();
  int counts[4] = {0, 0, 0, 0};
  for (const auto& r : reports) {
    list.push_back(to_json(r));
    ++counts[static_cast<int>(r.status)];
  }
  j["reports"] = std::move(list);
  j["summary"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"underpowered", counts[2]}, {"skipped", counts[3]}};
  return j;
}

}  // namespace tetra::laws
