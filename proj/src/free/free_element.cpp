#include "tetra/free/free_element.hpp"

#include "tetra/error.hpp"

namespace tetra::free {

namespace {

bool same_signature(const SignaturePtr& a, const SignaturePtr& b) { return a == b || *a == *b; }

}  // namespace

FreeElement::FreeElement(const CoefficientRing& ring, SignaturePtr signature, int degree)
    : ring_(ring), signature_(std::move(signature)), degree_(degree) {
  if (!signature_) throw Error(ErrorCode::kInvalidSignature, "null signature");
  if (degree < 1) throw Error(ErrorCode::kInvalidDegree, "free elements have degree >= 1");
}

FreeElement FreeElement::generator(const CoefficientRing& ring, SignaturePtr signature, std::string_view name) {
  const int id = signature->id_of(name);
  auto tree = PlanarTree::corolla(*signature, id);
  return from_tree(ring, std::move(signature), tree, Coefficient::one(ring));
}

FreeElement FreeElement::unit(const CoefficientRing& ring, SignaturePtr signature) {
  return from_tree(ring, std::move(signature), PlanarTree::leaf(), Coefficient::one(ring));
}

FreeElement FreeElement::from_tree(const CoefficientRing& ring, SignaturePtr signature, const PlanarTree& tree,
                                   const Coefficient& coeff) {
  FreeElement x(ring, std::move(signature), tree.degree());
  x.add_term(tree, coeff);
  return x;
}

Coefficient FreeElement::coefficient(const PlanarTree& tree) const {
  auto it = terms_.find(tree);
  return it == terms_.end() ? Coefficient::zero(ring_) : it->second;
}

void FreeElement::add_term(const PlanarTree& tree, const Coefficient& coeff) {
  if (!(coeff.ring() == ring_)) throw Error(ErrorCode::kRingMismatch, "term coefficient");
  if (tree.degree() != degree_) {
    throw Error(ErrorCode::kDegreeMismatch,
                "tree of degree " + std::to_string(tree.degree()) + " in element of degree " + std::to_string(degree_));
  }
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(tree, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void FreeElement::require_compatible(const FreeElement& other) const {
  if (!(ring_ == other.ring_)) throw Error(ErrorCode::kRingMismatch, ring_.name() + " vs " + other.ring_.name());
  if (!same_signature(signature_, other.signature_)) {
    throw Error(ErrorCode::kBackendMismatch, "elements over different signatures");
  }
}

FreeElement FreeElement::operator+(const FreeElement& other) const {
  require_compatible(other);
  if (degree_ != other.degree_) {
    throw Error(ErrorCode::kDegreeMismatch,
                "degree " + std::to_string(degree_) + " vs " + std::to_string(other.degree_));
  }
  FreeElement out = *this;
  for (const auto& [tree, coeff] : other.terms_) out.add_term(tree, coeff);
  return out;
}

FreeElement FreeElement::operator-(const FreeElement& other) const { return *this + (-other); }

FreeElement FreeElement::operator-() const {
  FreeElement out = *this;
  for (auto& [tree, coeff] : out.terms_) coeff = -coeff;
  return out;
}

FreeElement FreeElement::scaled(const Coefficient& factor) const {
  FreeElement out(ring_, signature_, degree_);
  for (const auto& [tree, coeff] : terms_) out.add_term(tree, coeff * factor);
  return out;
}

bool FreeElement::operator==(const FreeElement& other) const {
  return ring_ == other.ring_ && degree_ == other.degree_ && same_signature(signature_, other.signature_) &&
         terms_ == other.terms_;
}

std::string FreeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [tree, coeff] : terms_) {
    if (!out.empty()) out += " + ";
    out += coeff.to_string() + "*" + tree.to_sexpr(*signature_);
  }
  return out;
}

FreeElement free_partial_compose(const FreeElement& a, const FreeElement& b, int i, const FreeComposeOptions& options) {
  if (!(a.ring() == b.ring()) || !same_signature(a.signature(), b.signature())) {
    throw Error(ErrorCode::kBackendMismatch, "composition across rings or signatures");
  }
  if (i < 0 || i > a.shifted_degree()) {
    throw Error(ErrorCode::kIndexOutOfScope,
                "∘_" + std::to_string(i) + " on an element of degree " + std::to_string(a.degree()));
  }
  FreeElement out(a.ring(), a.signature(), a.degree() + b.degree() - 1);
  const Signature& sig = *a.signature();
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) {
      auto grafted = graft(sig, x, y, i);
      Coefficient coeff = cx * cy;
      if (options.koszul_sign && sign_of(grafted.sign_exponent) < 0) coeff = -coeff;
      out.add_term(grafted.tree, coeff);
    }
  }
  return out;
}

FreeElement free_linear_combine(std::span<const Coefficient> coeffs, std::span<const FreeElement> elements) {
  if (elements.empty()) throw Error(ErrorCode::kDegreeMismatch, "empty combination has no degree");
  if (coeffs.size() != elements.size()) throw Error(ErrorCode::kShapeMismatch, "coefficient and element counts differ");
  FreeElement out(elements.front().ring(), elements.front().signature(), elements.front().degree());
  for (std::size_t k = 0; k < elements.size(); ++k) out = out + elements[k].scaled(coeffs[k]);
  return out;
}

FreeElement canonicalize(const FreeElement& x) {
  FreeElement out(x.ring(), x.signature(), x.degree());
  for (const auto& [tree, coeff] : x.terms()) {
    out.add_term(PlanarTree::from_code(*x.signature(), {tree.code().begin(), tree.code().end()}), coeff);
  }
  return out;
}

endo::MultilinearMap evaluate_hom(const FreeElement& x, const Assignment& assignment, int dim,
                                  const endo::ComposeOptions& options) {
  const Signature& sig = *x.signature();
  std::vector<const endo::MultilinearMap*> images(sig.size(), nullptr);
  auto image_of = [&](std::int32_t id) -> const endo::MultilinearMap& {
    auto& slot = images[static_cast<std::size_t>(id)];
    if (slot == nullptr) {
      auto it = assignment.find(sig.name(id));
      if (it == assignment.end()) throw Error(ErrorCode::kMissingAssignment, "'" + sig.name(id) + "'");
      const auto& map = it->second;
      if (!(map.ring() == x.ring()) || map.dim() != dim) {
        throw Error(ErrorCode::kBackendMismatch, "assignment for '" + sig.name(id) + "' has the wrong ring or dim");
      }
      if (map.degree() != sig.degree(id)) {
        throw Error(ErrorCode::kDegreeMismatch, "assignment for '" + sig.name(id) + "' has degree " +
                                                    std::to_string(map.degree()));
      }
      slot = &map;
    }
    return *slot;
  };

  auto result = endo::MultilinearMap::zero(x.ring(), dim, x.degree());
  for (const auto& [tree, coeff] : x.terms()) {
    const auto code = tree.code();
    endo::MultilinearMap value = tree.is_leaf() ? endo::MultilinearMap::identity(x.ring(), dim) : image_of(code[0]);
    int leaves_before = 0;
    for (std::size_t k = 1; k < code.size(); ++k) {
      if (code[k] == PlanarTree::kLeaf) {
        ++leaves_before;
      } else {
        value = endo::partial_compose(value, image_of(code[k]), leaves_before, options);
      }
    }
    result = result + value.scaled(coeff);
  }
  return result;
}

nlohmann::ordered_json to_json(const FreeElement& x) {
  nlohmann::ordered_json j;
  j["ring"] = x.ring().name();
  j["degree"] = x.degree();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [tree, coeff] : x.terms()) {
    terms.push_back({{"tree", tree.to_sexpr(*x.signature())}, {"coeff", coeff.to_string()}});
  }
  j["terms"] = std::move(terms);
  return j;
}

FreeElement free_from_json(const nlohmann::ordered_json& j, SignaturePtr signature) {
  try {
    const auto ring = CoefficientRing::parse(j.at("ring").get<std::string>());
    FreeElement x(ring, signature, j.at("degree").get<int>());
    for (const auto& term : j.at("terms")) {
      x.add_term(PlanarTree::parse(*signature, term.at("tree").get<std::string>()),
                 Coefficient(ring, BigInt(term.at("coeff").get<std::string>())));
    }
    return x;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("free element JSON: ") + e.what());
  }
}

nlohmann::ordered_json to_json(const Signature& sig) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& g : sig.generators()) j.push_back({g.name, g.degree});
  return j;
}

SignaturePtr signature_from_json(const nlohmann::ordered_json& j) {
  try {
    std::vector<GeneratorSpec> gens;
    for (const auto& g : j) gens.push_back({g.at(0).get<std::string>(), g.at(1).get<int>()});
    return make_signature(std::move(gens));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("signature JSON: ") + e.what());
  }
}

}  // namespace tetra::free
