#include "tetra/dsl/eval.hpp"

namespace tetra::dsl {

namespace {

class Evaluator {
 public:
  Evaluator(const Script& script, const EvalConfig& cfg, const Bindings& bindings)
      : script_(script), cfg_(cfg), ring_(CoefficientRing::prime_field(cfg.prime)), ctx_(make_context(bindings)) {}

  GradedElement run() { return eval(*script_.body); }

 private:
  PreOperadContext make_context(const Bindings& bindings) {
    if (cfg_.backend == BackendKind::kFree) {
      std::vector<free::GeneratorSpec> gens{{"mu", 2}};
      for (const auto& d : script_.declarations) {
        if (d.literal) {
          throw DslError(ErrorCode::kBackendMismatch, d.span, "no literal on the free backend", "'" + d.name + "'");
        }
        if (d.degree < 1) {
          throw DslError(ErrorCode::kDegreeError, d.span, "generator degree >= 1", std::to_string(d.degree));
        }
        if (d.name != "mu") gens.push_back({d.name, d.degree});
      }
      auto sig = free::make_signature(std::move(gens));
      for (const auto& g : sig->generators()) {
        values_.emplace(g.name, free::FreeElement::generator(ring_, sig, g.name));
      }
      return PreOperadContext(
          Calculus<free::FreeBackend>(free::FreeBackend{ring_, sig}, values_.at("mu").as_free()));
    }
    for (std::size_t k = 0; k < script_.declarations.size(); ++k) {
      const auto& d = script_.declarations[k];
      values_.emplace(d.name, endo_value(d.name, d.degree, d.literal, k + 1, bindings, d.span));
    }
    if (!values_.count("mu")) values_.emplace("mu", endo_value("mu", 2, std::nullopt, 0, bindings, {}));
    return PreOperadContext(
        Calculus<endo::EndoBackend>(endo::EndoBackend{ring_, cfg_.dim}, values_.at("mu").as_endo()));
  }

  GradedElement endo_value(const std::string& name, int degree, const std::optional<std::vector<long long>>& literal,
                           std::size_t stream, const Bindings& bindings, SourceSpan span) {
    if (auto it = bindings.find(name); it != bindings.end()) {
      const auto& v = it->second.as_endo();
      if (v.degree() != degree || v.dim() != cfg_.dim || !(v.ring() == ring_)) {
        throw DslError(ErrorCode::kBackendMismatch, span, "a binding matching '" + name + "'",
                       "degree " + std::to_string(v.degree()) + ", dim " + std::to_string(v.dim()));
      }
      return v;
    }
    if (literal) return endo::make_map(ring_, cfg_.dim, degree, std::span<const long long>(*literal));
    if (!cfg_.random_unbound) throw DslError(ErrorCode::kUnboundSymbol, span, "a value for '" + name + "'", "none");
    Rng rng(derive_seed(cfg_.seed, stream));
    return endo::random_map(ring_, cfg_.dim, degree, rng);
  }

  GradedElement eval(const Expr& e) {
    auto arg = [&](std::size_t k) { return eval(*e.args[k]); };
    switch (e.kind) {
      case NodeKind::kSymbol: {
        auto it = values_.find(e.name);
        if (it == values_.end()) throw DslError(ErrorCode::kUnboundSymbol, e.span, "a bound symbol", e.name);
        return it->second;
      }
      case NodeKind::kUnit: return ctx_.unit();
      case NodeKind::kMu: return ctx_.mu();
      case NodeKind::kScale: return arg(0).scaled(Coefficient(ring_, e.scalar));
      case NodeKind::kSum: return arg(0) + arg(1);
      case NodeKind::kDifference: return arg(0) - arg(1);
      case NodeKind::kComp: return ctx_.compose(arg(0), arg(1), e.index);
      case NodeKind::kCup: return ctx_.cup(arg(0), arg(1));
      case NodeKind::kBul: return ctx_.bullet(arg(0), arg(1));
      case NodeKind::kBracket: return ctx_.bracket(arg(0), arg(1));
      case NodeKind::kDelta: return ctx_.delta(arg(0));
      case NodeKind::kTri: return ctx_.tribraces(arg(0), arg(1), arg(2));
      case NodeKind::kTetra: return ctx_.tetrabraces(arg(0), arg(1), arg(2), arg(3));
    }
    throw std::logic_error("unhandled node kind");
  }

  const Script& script_;
  const EvalConfig& cfg_;
  CoefficientRing ring_;
  std::map<std::string, GradedElement, std::less<>> values_;
  PreOperadContext ctx_;
};

}  // namespace

GradedElement evaluate(const Script& script, const EvalConfig& cfg, const Bindings& bindings) {
  const Script checked = typecheck(script);
  auto result = Evaluator(checked, cfg, bindings).run();
  if (result.degree() != *checked.body->degree) {
    throw Error(ErrorCode::kDegreeMismatch, "evaluated degree " + std::to_string(result.degree()) +
                                                " differs from the checked degree " +
                                                std::to_string(*checked.body->degree));
  }
  return result;
}

nlohmann::ordered_json eval_script(const Script& script, const EvalConfig& cfg, const Bindings& bindings) {
  return evaluate(script, cfg, bindings).to_json();
}

}  // namespace tetra::dsl
