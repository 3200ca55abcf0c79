#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tetra {

using BigInt = boost::multiprecision::cpp_int;

/// Seedable generator used throughout. One stream per task; never shared.
using Rng = std::mt19937_64;

/// Derives an independent stream seed from a master seed and a path of
/// indices (trial index, attempt, purpose). SplitMix64 finalizer per step.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b);

bool is_prime(std::uint64_t n);

/// Either a prime field F_p (p < 2^32) or the integers Z.
class CoefficientRing {
 public:
  enum class Kind { kPrimeField, kIntegers };

  /// Throws kInvalidPrime for composites, 0, 1 and p >= 2^32.
  static CoefficientRing prime_field(std::uint64_t p);
  static CoefficientRing integers();

  /// Inverse of name(): "F_97" or "Z".
  static CoefficientRing parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_prime_field() const noexcept { return kind_ == Kind::kPrimeField; }
  /// Zero for the integers.
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::string name() const;

  bool operator==(const CoefficientRing&) const = default;

 private:
  CoefficientRing(Kind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint32_t modulus_;
};

/// An element of a CoefficientRing in canonical form: 0 <= v < p for prime
/// fields, an arbitrary-precision signed integer otherwise.
class Coefficient {
 public:
  Coefficient(const CoefficientRing& ring, const BigInt& value);
  Coefficient(const CoefficientRing& ring, long long value);

  static Coefficient zero(const CoefficientRing& ring) { return {ring, 0}; }
  static Coefficient one(const CoefficientRing& ring) { return {ring, 1}; }

  const CoefficientRing& ring() const noexcept { return ring_; }
  const BigInt& value() const noexcept { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  /// Residue as machine word; only valid for prime fields.
  std::uint32_t residue() const;

  /// Signed representative in (-p/2, p/2] for prime fields, value otherwise.
  BigInt balanced() const;

  Coefficient operator+(const Coefficient& other) const;
  Coefficient operator-(const Coefficient& other) const;
  Coefficient operator*(const Coefficient& other) const;
  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& other) { return *this = *this + other; }

  /// Multiplicative inverse. kInverseUnavailable in Z, kDivisionByZero for 0.
  Coefficient inverse() const;

  std::string to_string() const { return value_.str(); }

  bool operator==(const Coefficient& other) const {
    return ring_ == other.ring_ && value_ == other.value_;
  }

 private:
  CoefficientRing ring_;
  BigInt value_;
};

enum class RingOp { kAdd, kSub, kMul, kNeg, kInv };

/// Binary/unary dispatch over RingOp. Unary ops ignore `b`.
Coefficient ring_op(const Coefficient& a, const Coefficient& b, RingOp op);

/// Uniform over {0, ..., p-1}. kUnsupportedRing for the integers.
Coefficient sample(const CoefficientRing& ring, Rng& rng);
std::uint32_t sample_residue(std::uint32_t modulus, Rng& rng);

/// (-1)^e for a signed exponent; only the parity matters, so e = -1 is odd.
constexpr int sign_of(long long exponent) noexcept { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace tetra
