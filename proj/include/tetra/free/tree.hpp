#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tetra::free {

struct GeneratorSpec {
  std::string name;
  int degree = 1;

  bool operator==(const GeneratorSpec&) const = default;
};

/// Named generators with their degrees (arities), kept sorted by name so
/// that generator ids order trees lexicographically by name.
class Signature {
 public:
  /// kInvalidSignature on duplicate or malformed names and degrees < 1.
  explicit Signature(std::vector<GeneratorSpec> generators);

  std::size_t size() const noexcept { return generators_.size(); }
  const std::string& name(int id) const { return generators_.at(static_cast<std::size_t>(id)).name; }
  int degree(int id) const { return generators_.at(static_cast<std::size_t>(id)).degree; }
  const std::vector<GeneratorSpec>& generators() const noexcept { return generators_; }

  std::optional<int> find(std::string_view name) const;
  /// kUnknownGenerator when absent.
  int id_of(std::string_view name) const;

  bool operator==(const Signature&) const = default;

 private:
  std::vector<GeneratorSpec> generators_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

SignaturePtr make_signature(std::vector<GeneratorSpec> generators);

/// A planar tree with generator-labeled vertices, stored as its preorder
/// code: a generator id per vertex and kLeaf per leaf. The code of a
/// complete tree is prefix-free, so lexicographic order on codes is the
/// recursive (root, children...) order.
class PlanarTree {
 public:
  static constexpr std::int32_t kLeaf = -1;

  /// The bare leaf, i.e. the unit.
  static PlanarTree leaf();
  static PlanarTree corolla(const Signature& sig, int generator);
  /// Checks that every vertex has exactly its generator's arity.
  static PlanarTree from_code(const Signature& sig, std::vector<std::int32_t> code);
  /// S-expression such as "(mu (f _ _) _)"; "_" alone is the bare leaf.
  static PlanarTree parse(const Signature& sig, std::string_view text);

  std::span<const std::int32_t> code() const noexcept { return code_; }
  int degree() const noexcept { return leaves_; }
  int vertex_count() const noexcept { return static_cast<int>(code_.size()) - leaves_; }
  bool is_leaf() const noexcept { return code_.size() == 1; }

  std::string to_sexpr(const Signature& sig) const;

  auto operator<=>(const PlanarTree&) const = default;

 private:
  PlanarTree(std::vector<std::int32_t> code, int leaves) : code_(std::move(code)), leaves_(leaves) {}

  std::vector<std::int32_t> code_;
  int leaves_ = 1;
};

struct Grafting {
  PlanarTree tree;
  /// Parity of the reordering that brings the concatenated vertex word
  /// (vertices of x, then vertices of y) into preorder.
  long long sign_exponent = 0;
};

/// Replaces leaf `leaf` (0-based, left to right) of x by y.
Grafting graft(const Signature& sig, const PlanarTree& x, const PlanarTree& y, int leaf);

}  // namespace tetra::free
