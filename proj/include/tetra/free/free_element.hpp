#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>

#include <json.hpp>

#include "tetra/coeff_ring.hpp"
#include "tetra/endo/multilinear_map.hpp"
#include "tetra/free/tree.hpp"

namespace tetra::free {

/// A homogeneous element of the free pre-operad: a finite sum of planar
/// trees with nonzero coefficients. Each tree stands for the composite of its
/// vertices taken in preorder, ((v_1 ∘ v_2) ∘ v_3) ..., so the map of terms
/// is a canonical form and equality is term-map identity.
class FreeElement {
 public:
  using Terms = std::map<PlanarTree, Coefficient>;

  /// The zero element of the given degree (>= 1).
  FreeElement(const CoefficientRing& ring, SignaturePtr signature, int degree);

  static FreeElement generator(const CoefficientRing& ring, SignaturePtr signature, std::string_view name);
  static FreeElement unit(const CoefficientRing& ring, SignaturePtr signature);
  static FreeElement from_tree(const CoefficientRing& ring, SignaturePtr signature, const PlanarTree& tree,
                               const Coefficient& coeff);

  const CoefficientRing& ring() const noexcept { return ring_; }
  const SignaturePtr& signature() const noexcept { return signature_; }
  int degree() const noexcept { return degree_; }
  int shifted_degree() const noexcept { return degree_ - 1; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Coefficient coefficient(const PlanarTree& tree) const;
  /// Adds coeff·tree, dropping the term if it cancels.
  void add_term(const PlanarTree& tree, const Coefficient& coeff);

  FreeElement operator+(const FreeElement& other) const;
  FreeElement operator-(const FreeElement& other) const;
  FreeElement operator-() const;
  FreeElement scaled(const Coefficient& factor) const;

  bool operator==(const FreeElement& other) const;

  /// "3*(h _ _) + 1*(mu _ _)", or "0".
  std::string to_string() const;

 private:
  void require_compatible(const FreeElement& other) const;

  CoefficientRing ring_;
  SignaturePtr signature_;
  int degree_;
  Terms terms_;
};

struct FreeComposeOptions {
  /// When false the reordering sign is dropped (mutation canary only).
  bool koszul_sign = true;
};

/// Bilinear grafting of b onto leaf i of a, 0 <= i <= |a|.
FreeElement free_partial_compose(const FreeElement& a, const FreeElement& b, int i,
                                 const FreeComposeOptions& options = {});

FreeElement free_linear_combine(std::span<const Coefficient> coeffs, std::span<const FreeElement> elements);

/// Rebuilds the term map from scratch. The identity on well-formed elements.
FreeElement canonicalize(const FreeElement& x);

using Assignment = std::map<std::string, endo::MultilinearMap, std::less<>>;

/// The pre-operad morphism into End(K^dim) fixed by a generator assignment:
/// each tree is evaluated by inserting its vertices in preorder.
endo::MultilinearMap evaluate_hom(const FreeElement& x, const Assignment& assignment, int dim,
                                  const endo::ComposeOptions& options = {});

nlohmann::ordered_json to_json(const FreeElement& x);
FreeElement free_from_json(const nlohmann::ordered_json& j, SignaturePtr signature);
nlohmann::ordered_json to_json(const Signature& sig);
SignaturePtr signature_from_json(const nlohmann::ordered_json& j);

}  // namespace tetra::free
