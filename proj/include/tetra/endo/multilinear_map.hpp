#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include <json.hpp>

#include "tetra/coeff_ring.hpp"

namespace tetra::endo {

enum class Kernel { kSerial, kParallel };

/// An element of Hom(A^{⊗n}, A) for A = K^d, stored densely.
///
/// Entry (o, x_1, ..., x_n) lives at o*d^n + x_1*d^(n-1) + ... + x_n. Degree 0
/// elements are vectors of A. Prime-field tables hold machine residues; the
/// integers use arbitrary precision.
class MultilinearMap {
 public:
  using ResidueTable = std::vector<std::uint32_t>;
  using IntegerTable = std::vector<BigInt>;
  using Table = std::variant<ResidueTable, IntegerTable>;

  static MultilinearMap zero(const CoefficientRing& ring, int dim, int degree);
  /// Adopts a table whose entries are already canonical for `ring`.
  static MultilinearMap from_table(const CoefficientRing& ring, int dim, int degree, Table table);
  static MultilinearMap identity(const CoefficientRing& ring, int dim);

  /// d^(n+1); throws kShapeMismatch when the table would not be addressable.
  static std::size_t table_size(int dim, int degree);

  const CoefficientRing& ring() const noexcept { return ring_; }
  int dim() const noexcept { return dim_; }
  int degree() const noexcept { return degree_; }
  /// |f| = deg f - 1; may be -1.
  int shifted_degree() const noexcept { return degree_ - 1; }
  std::size_t size() const;

  Coefficient entry(std::size_t index) const;
  void set_entry(std::size_t index, const Coefficient& value);
  const Table& table() const noexcept { return table_; }

  bool is_zero() const;

  MultilinearMap operator+(const MultilinearMap& other) const;
  MultilinearMap operator-(const MultilinearMap& other) const;
  MultilinearMap operator-() const;
  MultilinearMap scaled(const Coefficient& factor) const;

  bool operator==(const MultilinearMap& other) const = default;

 private:
  MultilinearMap(const CoefficientRing& ring, int dim, int degree, Table table)
      : ring_(ring), dim_(dim), degree_(degree), table_(std::move(table)) {}

  CoefficientRing ring_;
  int dim_;
  int degree_;
  Table table_;
};

MultilinearMap make_map(const CoefficientRing& ring, int dim, int degree, std::span<const Coefficient> entries);
MultilinearMap make_map(const CoefficientRing& ring, int dim, int degree, std::span<const long long> entries);
MultilinearMap make_map(const CoefficientRing& ring, int dim, int degree, std::initializer_list<long long> entries);

struct ComposeOptions {
  Kernel kernel = Kernel::kParallel;
  /// When false the insertion sign (-1)^{i|g|} is dropped. Only the mutation
  /// canaries turn this off.
  bool insertion_sign = true;
};

/// f ∘_i g = (-1)^{i|g|} f ∘ (1^{⊗i} ⊗ g ⊗ 1^{⊗(|f|-i)}), 0 <= i <= |f|.
MultilinearMap partial_compose(const MultilinearMap& f, const MultilinearMap& g, int i,
                               const ComposeOptions& options = {});

MultilinearMap linear_combine(std::span<const Coefficient> coeffs, std::span<const MultilinearMap> maps);

/// I.i.d. uniform entries; kUnsupportedRing over the integers.
MultilinearMap random_map(const CoefficientRing& ring, int dim, int degree, Rng& rng);

/// f(u_1, ..., u_n) for degree-0 inputs, by direct multilinear expansion.
MultilinearMap evaluate(const MultilinearMap& f, std::span<const MultilinearMap> inputs);

/// e_k as a degree-0 element.
MultilinearMap basis_vector(const CoefficientRing& ring, int dim, int k);

/// Componentwise product on K^d: e_k · e_k = e_k.
MultilinearMap componentwise_product(const CoefficientRing& ring, int dim);
/// Multiplication of 2x2 matrices on the basis e11, e12, e21, e22 (d = 4).
MultilinearMap matrix_product(const CoefficientRing& ring);

nlohmann::ordered_json to_json(const MultilinearMap& f);
MultilinearMap map_from_json(const nlohmann::ordered_json& j);

}  // namespace tetra::endo
