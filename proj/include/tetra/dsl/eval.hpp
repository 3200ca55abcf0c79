#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "tetra/calculus/graded.hpp"
#include "tetra/dsl/ast.hpp"

namespace tetra::dsl {

struct EvalConfig {
  BackendKind backend = BackendKind::kEndo;
  std::uint32_t prime = 97;
  int dim = 1;
  std::uint64_t seed = 0;
  /// Draw symbols without a literal or binding at random from the seed.
  /// When false they raise kUnboundSymbol.
  bool random_unbound = true;
};

/// Explicit values for declared symbols (and "mu"), overriding literals.
using Bindings = std::map<std::string, GradedElement, std::less<>>;

/// Evaluates a script (typechecking it first). Endo symbols come from
/// bindings, literals or the seed; on the free backend every declared
/// symbol is a generator and mu is the generator "mu".
GradedElement evaluate(const Script& script, const EvalConfig& cfg, const Bindings& bindings = {});

/// {degree, backend, payload}
nlohmann::ordered_json eval_script(const Script& script, const EvalConfig& cfg, const Bindings& bindings = {});

}  // namespace tetra::dsl
