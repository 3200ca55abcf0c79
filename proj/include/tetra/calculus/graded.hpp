#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "tetra/calculus/calculus.hpp"
#include "tetra/endo/backend.hpp"
#include "tetra/free/backend.hpp"

namespace tetra {

enum class BackendKind { kEndo, kFree };

std::string to_string(BackendKind kind);
/// "endo" or "free"; kBadConfig otherwise.
BackendKind parse_backend(std::string_view name);

/// A homogeneous element of either backend, tagged with its degree.
class GradedElement {
 public:
  using Payload = std::variant<endo::MultilinearMap, free::FreeElement>;

  GradedElement(endo::MultilinearMap x) : payload_(std::move(x)) {}  // NOLINT(google-explicit-constructor)
  GradedElement(free::FreeElement x) : payload_(std::move(x)) {}     // NOLINT(google-explicit-constructor)

  BackendKind backend() const noexcept {
    return std::holds_alternative<endo::MultilinearMap>(payload_) ? BackendKind::kEndo : BackendKind::kFree;
  }
  int degree() const {
    return std::visit([](const auto& x) { return x.degree(); }, payload_);
  }
  int shifted_degree() const { return degree() - 1; }
  bool is_zero() const {
    return std::visit([](const auto& x) { return x.is_zero(); }, payload_);
  }
  const Payload& payload() const noexcept { return payload_; }

  /// kBackendMismatch when the payload is of the other kind.
  const endo::MultilinearMap& as_endo() const;
  const free::FreeElement& as_free() const;

  GradedElement operator+(const GradedElement& other) const;
  GradedElement operator-(const GradedElement& other) const;
  GradedElement operator-() const;
  GradedElement scaled(const Coefficient& c) const;
  bool operator==(const GradedElement& other) const = default;

  /// {degree, backend, payload}: payload is the entry array (endo) or a list
  /// of {tree, coeff} terms (free).
  nlohmann::ordered_json to_json() const;

 private:
  Payload payload_;
};

/// A backend together with μ, dispatching the calculus at run time.
class PreOperadContext {
 public:
  using Engine = std::variant<Calculus<endo::EndoBackend>, Calculus<free::FreeBackend>>;

  explicit PreOperadContext(Calculus<endo::EndoBackend> calc) : engine_(std::move(calc)) {}
  explicit PreOperadContext(Calculus<free::FreeBackend> calc) : engine_(std::move(calc)) {}

  BackendKind backend() const noexcept {
    return engine_.index() == 0 ? BackendKind::kEndo : BackendKind::kFree;
  }
  const CoefficientRing& ring() const;
  const Engine& engine() const noexcept { return engine_; }

  GradedElement mu() const;
  GradedElement unit() const;
  GradedElement zero(int degree) const;

  GradedElement compose(const GradedElement& f, const GradedElement& g, int i) const;
  GradedElement cup(const GradedElement& f, const GradedElement& g) const;
  GradedElement bullet(const GradedElement& f, const GradedElement& g) const;
  GradedElement bracket(const GradedElement& f, const GradedElement& g) const;
  GradedElement delta(const GradedElement& f) const;
  GradedElement tribraces(const GradedElement& h, const GradedElement& f, const GradedElement& g) const;
  GradedElement tetrabraces(const GradedElement& h, const GradedElement& f, const GradedElement& g,
                            const GradedElement& b) const;

 private:
  Engine engine_;
};

}  // namespace tetra
