#pragma once

#include <cstdint>

#include "tetra/calculus/calculus.hpp"
#include "tetra/endo/backend.hpp"
#include "tetra/endo/multilinear_map.hpp"
#include "tetra/error.hpp"

namespace testing {

using tetra::CoefficientRing;
using tetra::endo::MultilinearMap;

inline CoefficientRing f97() { return CoefficientRing::prime_field(97); }

/// Scalar map c in C^n over K = F_p (d = 1).
inline MultilinearMap scalar(const CoefficientRing& ring, int degree, long long c) {
  return tetra::endo::make_map(ring, 1, degree, {c});
}

inline long long as_scalar(const MultilinearMap& m) { return static_cast<long long>(m.entry(0).residue()); }

inline tetra::Calculus<tetra::endo::EndoBackend> endo_calculus(const CoefficientRing& ring, int dim,
                                                                const MultilinearMap& mu,
                                                                tetra::Canary canary = tetra::Canary::kNone) {
  tetra::endo::EndoBackend backend{ring, dim, {}};
  if (canary == tetra::Canary::kDropKoszulSign) backend.options.insertion_sign = false;
  return {backend, mu, canary};
}

}  // namespace testing

/// Checks that `expr` throws tetra::Error (or a subclass) with code `ec`.
#define CHECK_ERROR_CODE(expr, ec)                                          \
  do {                                                                      \
    bool thrown_ = false;                                                   \
    try {                                                                   \
      (void)(expr);                                                         \
    } catch (const tetra::Error& e_) {                                      \
      thrown_ = true;                                                       \
      CHECK_MESSAGE(e_.code() == (ec), "got " << tetra::to_string(e_.code())); \
    }                                                                       \
    CHECK_MESSAGE(thrown_, "no tetra::Error from " #expr);                  \
  } while (0)
