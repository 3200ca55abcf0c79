#pragma once

#include "tetra/free/free_element.hpp"

namespace tetra::free {

/// The free pre-operad on a signature as a calculus backend.
struct FreeBackend {
  using Element = FreeElement;

  CoefficientRing ring;
  SignaturePtr signature;
  FreeComposeOptions options{};

  Element compose(const Element& a, const Element& b, int i) const { return free_partial_compose(a, b, i, options); }
  Element zero(int degree) const { return FreeElement(ring, signature, degree); }
  Element unit() const { return FreeElement::unit(ring, signature); }
};

}  // namespace tetra::free
