#pragma once

// Dense insertion kernels for the endomorphism backend.
//
// A map of degree m over A = K^d is a table of d^(m+1) entries, row-major,
// output index slowest. Inserting g (degree n) into input slot i of f gives
//
//   out[x, c, e] = sum_t f[x, t, e] * g[t, c]
//
// where x ranges over (output, inputs before the slot), t over the slot, c
// over the n inputs of g and e over the inputs after the slot.

#include <cstddef>
#include <cstdint>
#include <span>

#include "tetra/coeff_ring.hpp"

namespace tetra::endo::kernels {

struct ComposeLayout {
  std::size_t outer = 1;    // d^(i+1)
  std::size_t dim = 1;      // d
  std::size_t g_inputs = 1; // d^n
  std::size_t tail = 1;     // d^(m-1-i)

  std::size_t out_size() const { return outer * g_inputs * tail; }
  std::size_t work() const { return out_size() * dim; }
};

struct ModArith {
  using Value = std::uint32_t;
  std::uint32_t p;

  Value zero() const { return 0; }
  Value add(Value a, Value b) const { return static_cast<Value>((static_cast<std::uint64_t>(a) + b) % p); }
  Value mul(Value a, Value b) const { return static_cast<Value>(static_cast<std::uint64_t>(a) * b % p); }
  Value mul_add(Value acc, Value a, Value b) const {
    return static_cast<Value>((acc + static_cast<std::uint64_t>(a) * b) % p);
  }
  Value neg(Value a) const { return a == 0 ? 0 : p - a; }
};

struct IntArith {
  using Value = BigInt;

  Value zero() const { return 0; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value mul_add(const Value& acc, const Value& a, const Value& b) const { return acc + a * b; }
  Value neg(const Value& a) const { return -a; }
};

/// Below this many multiply-adds the parallel kernel runs on one thread.
inline constexpr std::size_t kParallelThreshold = 1 << 14;

/// Reference implementation: one output entry at a time, straight from the
/// defining sum. Kept for testing the parallel kernel.
template <class Arith>
void compose_serial(const Arith& arith, std::span<const typename Arith::Value> f,
                    std::span<const typename Arith::Value> g, std::span<typename Arith::Value> out,
                    const ComposeLayout& layout, bool negate) {
  for (std::size_t x = 0; x < layout.outer; ++x) {
    for (std::size_t c = 0; c < layout.g_inputs; ++c) {
      for (std::size_t e = 0; e < layout.tail; ++e) {
        auto acc = arith.zero();
        for (std::size_t t = 0; t < layout.dim; ++t) {
          acc = arith.mul_add(acc, f[(x * layout.dim + t) * layout.tail + e], g[t * layout.g_inputs + c]);
        }
        out[(x * layout.g_inputs + c) * layout.tail + e] = negate ? arith.neg(acc) : acc;
      }
    }
  }
}

/// Row-oriented kernel: each (x, c) row of the output is accumulated over the
/// contracted index with unit-stride reads of f. Rows are independent and are
/// distributed over OpenMP threads.
template <class Arith>
void compose_parallel(const Arith& arith, std::span<const typename Arith::Value> f,
                      std::span<const typename Arith::Value> g, std::span<typename Arith::Value> out,
                      const ComposeLayout& layout, bool negate) {
  const auto outer = static_cast<std::int64_t>(layout.outer);
  const auto g_inputs = static_cast<std::int64_t>(layout.g_inputs);
  const std::size_t tail = layout.tail;
  const std::size_t dim = layout.dim;

#pragma omp parallel for collapse(2) schedule(static) if (layout.work() >= kParallelThreshold)
  for (std::int64_t x = 0; x < outer; ++x) {
    for (std::int64_t c = 0; c < g_inputs; ++c) {
      auto* row = out.data() + (static_cast<std::size_t>(x) * layout.g_inputs + static_cast<std::size_t>(c)) * tail;
      for (std::size_t e = 0; e < tail; ++e) row[e] = arith.zero();
      for (std::size_t t = 0; t < dim; ++t) {
        const auto& gv = g[t * layout.g_inputs + static_cast<std::size_t>(c)];
        const auto* frow = f.data() + (static_cast<std::size_t>(x) * dim + t) * tail;
        for (std::size_t e = 0; e < tail; ++e) row[e] = arith.mul_add(row[e], frow[e], gv);
      }
      if (negate) {
        for (std::size_t e = 0; e < tail; ++e) row[e] = arith.neg(row[e]);
      }
    }
  }
}

}  // namespace tetra::endo::kernels
