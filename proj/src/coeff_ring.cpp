#include "tetra/coeff_ring.hpp"

#include <charconv>

#include "tetra/error.hpp"

namespace tetra {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void require_same_ring(const Coefficient& a, const Coefficient& b) {
  if (!(a.ring() == b.ring())) {
    throw Error(ErrorCode::kRingMismatch, a.ring().name() + " vs " + b.ring().name());
  }
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
  return derive_seed(derive_seed(master, a), b);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

CoefficientRing CoefficientRing::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
    throw Error(ErrorCode::kInvalidPrime, std::to_string(p) + " is not a prime below 2^32");
  }
  return {Kind::kPrimeField, static_cast<std::uint32_t>(p)};
}

CoefficientRing CoefficientRing::integers() { return {Kind::kIntegers, 0}; }

CoefficientRing CoefficientRing::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text.size() > 2 && text.substr(0, 2) == "F_") {
    std::uint64_t p = 0;
    auto digits = text.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime_field(p);
  }
  throw Error(ErrorCode::kParseError, "unrecognized ring '" + std::string(text) + "'");
}

std::string CoefficientRing::name() const {
  return is_prime_field() ? "F_" + std::to_string(modulus_) : "Z";
}

Coefficient::Coefficient(const CoefficientRing& ring, const BigInt& value) : ring_(ring), value_(value) {
  if (ring_.is_prime_field()) {
    const BigInt p = ring_.modulus();
    value_ %= p;
    if (value_ < 0) value_ += p;
  }
}

Coefficient::Coefficient(const CoefficientRing& ring, long long value) : Coefficient(ring, BigInt(value)) {}

std::uint32_t Coefficient::residue() const {
  if (!ring_.is_prime_field()) {
    throw Error(ErrorCode::kUnsupportedRing, "residue() needs a prime field");
  }
  return value_.convert_to<std::uint32_t>();
}

BigInt Coefficient::balanced() const {
  if (!ring_.is_prime_field()) return value_;
  const BigInt p = ring_.modulus();
  return value_ * 2 > p ? value_ - p : value_;
}

Coefficient Coefficient::operator+(const Coefficient& other) const {
  require_same_ring(*this, other);
  return {ring_, value_ + other.value_};
}

Coefficient Coefficient::operator-(const Coefficient& other) const {
  require_same_ring(*this, other);
  return {ring_, value_ - other.value_};
}

Coefficient Coefficient::operator*(const Coefficient& other) const {
  require_same_ring(*this, other);
  return {ring_, value_ * other.value_};
}

Coefficient Coefficient::operator-() const { return {ring_, -value_}; }

Coefficient Coefficient::inverse() const {
  if (!ring_.is_prime_field()) {
    throw Error(ErrorCode::kInverseUnavailable, "no inverses in Z");
  }
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of 0");
  // Fermat: a^(p-2).
  const std::uint64_t p = ring_.modulus();
  std::uint64_t base = residue();
  std::uint64_t result = 1;
  for (std::uint64_t e = p - 2; e != 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return {ring_, static_cast<long long>(result)};
}

Coefficient ring_op(const Coefficient& a, const Coefficient& b, RingOp op) {
  switch (op) {
    case RingOp::kAdd: return a + b;
    case RingOp::kSub: return a - b;
    case RingOp::kMul: return a * b;
    case RingOp::kNeg: return -a;
    case RingOp::kInv: return a.inverse();
  }
  return a;
}

std::uint32_t sample_residue(std::uint32_t modulus, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, modulus - 1);
  return dist(rng);
}

Coefficient sample(const CoefficientRing& ring, Rng& rng) {
  if (!ring.is_prime_field()) {
    throw Error(ErrorCode::kUnsupportedRing, "uniform sampling needs a finite ring");
  }
  return {ring, static_cast<long long>(sample_residue(ring.modulus(), rng))};
}

}  // namespace tetra
