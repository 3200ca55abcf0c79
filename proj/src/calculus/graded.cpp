#include "tetra/calculus/graded.hpp"

namespace tetra {

namespace {

template <class T>
const T& payload_as(const GradedElement::Payload& p) {
  if (const T* x = std::get_if<T>(&p)) return *x;
  throw Error(ErrorCode::kBackendMismatch, "element belongs to the other backend");
}

// Applies op to the payloads of the arguments after checking they all
// belong to the calculus' backend.
template <class Op, class... Args>
GradedElement dispatch(const PreOperadContext::Engine& engine, Op op, const Args&... args) {
  return std::visit(
      [&](const auto& calc) -> GradedElement {
        using Element = typename std::decay_t<decltype(calc)>::Element;
        return op(calc, payload_as<Element>(args.payload())...);
      },
      engine);
}

}  // namespace

std::string to_string(BackendKind kind) { return kind == BackendKind::kEndo ? "endo" : "free"; }

BackendKind parse_backend(std::string_view name) {
  if (name == "endo") return BackendKind::kEndo;
  if (name == "free") return BackendKind::kFree;
  throw Error(ErrorCode::kBadConfig, "unknown backend '" + std::string(name) + "'");
}

const endo::MultilinearMap& GradedElement::as_endo() const { return payload_as<endo::MultilinearMap>(payload_); }
const free::FreeElement& GradedElement::as_free() const { return payload_as<free::FreeElement>(payload_); }

GradedElement GradedElement::operator+(const GradedElement& other) const {
  return std::visit(
      [&](const auto& x) -> GradedElement { return x + payload_as<std::decay_t<decltype(x)>>(other.payload_); },
      payload_);
}

GradedElement GradedElement::operator-(const GradedElement& other) const { return *this + (-other); }

GradedElement GradedElement::operator-() const {
  return std::visit([](const auto& x) -> GradedElement { return -x; }, payload_);
}

GradedElement GradedElement::scaled(const Coefficient& c) const {
  return std::visit([&](const auto& x) -> GradedElement { return x.scaled(c); }, payload_);
}

nlohmann::ordered_json GradedElement::to_json() const {
  nlohmann::ordered_json j;
  j["degree"] = degree();
  j["backend"] = to_string(backend());
  if (backend() == BackendKind::kEndo) {
    j["payload"] = endo::to_json(as_endo())["entries"];
  } else {
    j["payload"] = free::to_json(as_free())["terms"];
  }
  return j;
}

const CoefficientRing& PreOperadContext::ring() const {
  return std::visit([](const auto& calc) -> const CoefficientRing& { return calc.backend().ring; }, engine_);
}

GradedElement PreOperadContext::mu() const {
  return std::visit([](const auto& calc) -> GradedElement { return calc.mu(); }, engine_);
}

GradedElement PreOperadContext::unit() const {
  return std::visit([](const auto& calc) -> GradedElement { return calc.unit(); }, engine_);
}

GradedElement PreOperadContext::zero(int degree) const {
  return std::visit([&](const auto& calc) -> GradedElement { return calc.zero(degree); }, engine_);
}

GradedElement PreOperadContext::compose(const GradedElement& f, const GradedElement& g, int i) const {
  return dispatch(engine_, [i](const auto& c, const auto& x, const auto& y) { return c.compose(x, y, i); }, f, g);
}

GradedElement PreOperadContext::cup(const GradedElement& f, const GradedElement& g) const {
  return dispatch(engine_, [](const auto& c, const auto& x, const auto& y) { return c.cup(x, y); }, f, g);
}

GradedElement PreOperadContext::bullet(const GradedElement& f, const GradedElement& g) const {
  return dispatch(engine_, [](const auto& c, const auto& x, const auto& y) { return c.bullet(x, y); }, f, g);
}

GradedElement PreOperadContext::bracket(const GradedElement& f, const GradedElement& g) const {
  return dispatch(engine_, [](const auto& c, const auto& x, const auto& y) { return c.bracket(x, y); }, f, g);
}

GradedElement PreOperadContext::delta(const GradedElement& f) const {
  return dispatch(engine_, [](const auto& c, const auto& x) { return c.delta(x); }, f);
}

GradedElement PreOperadContext::tribraces(const GradedElement& h, const GradedElement& f,
                                          const GradedElement& g) const {
  return dispatch(
      engine_, [](const auto& c, const auto& x, const auto& y, const auto& z) { return c.tribraces(x, y, z); }, h, f,
      g);
}

GradedElement PreOperadContext::tetrabraces(const GradedElement& h, const GradedElement& f, const GradedElement& g,
                                            const GradedElement& b) const {
  return dispatch(
      engine_,
      [](const auto& c, const auto& x, const auto& y, const auto& z, const auto& w) {
        return c.tetrabraces(x, y, z, w);
      },
      h, f, g, b);
}

}  // namespace tetra
