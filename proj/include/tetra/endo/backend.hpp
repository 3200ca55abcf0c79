#pragma once

#include "tetra/endo/multilinear_map.hpp"

namespace tetra::endo {

/// The endomorphism pre-operad of A = K^d as a calculus backend.
struct EndoBackend {
  using Element = MultilinearMap;

  CoefficientRing ring;
  int dim = 1;
  ComposeOptions options{};

  Element compose(const Element& f, const Element& g, int i) const { return partial_compose(f, g, i, options); }
  Element zero(int degree) const { return MultilinearMap::zero(ring, dim, degree); }
  Element unit() const { return MultilinearMap::identity(ring, dim); }
};

}  // namespace tetra::endo
