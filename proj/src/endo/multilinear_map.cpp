#include "tetra/endo/multilinear_map.hpp"

#include <limits>
#include <string>

#include "tetra/endo/kernels.hpp"
#include "tetra/error.hpp"

namespace tetra::endo {

namespace {

using ResidueTable = MultilinearMap::ResidueTable;
using IntegerTable = MultilinearMap::IntegerTable;

constexpr std::size_t kMaxTableSize = std::size_t{1} << 28;

std::size_t checked_power(std::size_t base, int exponent) {
  std::size_t result = 1;
  for (int k = 0; k < exponent; ++k) {
    if (result > kMaxTableSize / base) {
      throw Error(ErrorCode::kShapeMismatch, "table exceeds " + std::to_string(kMaxTableSize) + " entries");
    }
    result *= base;
  }
  return result;
}

void require_compatible(const MultilinearMap& a, const MultilinearMap& b) {
  if (!(a.ring() == b.ring())) {
    throw Error(ErrorCode::kRingMismatch, a.ring().name() + " vs " + b.ring().name());
  }
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kBackendMismatch, "dimension " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

void require_same_shape(const MultilinearMap& a, const MultilinearMap& b) {
  require_compatible(a, b);
  if (a.degree() != b.degree()) {
    throw Error(ErrorCode::kDegreeMismatch, "degree " + std::to_string(a.degree()) + " vs " + std::to_string(b.degree()));
  }
}

MultilinearMap::Table empty_table(const CoefficientRing& ring, std::size_t size) {
  if (ring.is_prime_field()) return ResidueTable(size, 0);
  return IntegerTable(size, BigInt(0));
}

// Entrywise combination out = fa(a) (+) fb(b) over matching tables.
template <class Combine>
MultilinearMap::Table zip_tables(const MultilinearMap& a, const MultilinearMap& b, Combine&& combine) {
  if (a.ring().is_prime_field()) {
    const kernels::ModArith arith{a.ring().modulus()};
    const auto& x = std::get<ResidueTable>(a.table());
    const auto& y = std::get<ResidueTable>(b.table());
    ResidueTable out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) out[k] = combine(arith, x[k], y[k]);
    return out;
  }
  const kernels::IntArith arith;
  const auto& x = std::get<IntegerTable>(a.table());
  const auto& y = std::get<IntegerTable>(b.table());
  IntegerTable out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = combine(arith, x[k], y[k]);
  return out;
}

}  // namespace

std::size_t MultilinearMap::table_size(int dim, int degree) {
  if (dim < 1) throw Error(ErrorCode::kShapeMismatch, "dimension must be >= 1");
  if (degree < 0) throw Error(ErrorCode::kInvalidDegree, "degree must be >= 0");
  return checked_power(static_cast<std::size_t>(dim), degree + 1);
}

MultilinearMap MultilinearMap::zero(const CoefficientRing& ring, int dim, int degree) {
  return {ring, dim, degree, empty_table(ring, table_size(dim, degree))};
}

MultilinearMap MultilinearMap::from_table(const CoefficientRing& ring, int dim, int degree, Table table) {
  const std::size_t expected = table_size(dim, degree);
  const bool residues = std::holds_alternative<ResidueTable>(table);
  if (residues != ring.is_prime_field()) {
    throw Error(ErrorCode::kRingMismatch, "table representation does not match " + ring.name());
  }
  const std::size_t actual = std::visit([](const auto& t) { return t.size(); }, table);
  if (actual != expected) {
    throw Error(ErrorCode::kShapeMismatch,
                "expected " + std::to_string(expected) + " entries, got " + std::to_string(actual));
  }
  return {ring, dim, degree, std::move(table)};
}

MultilinearMap MultilinearMap::identity(const CoefficientRing& ring, int dim) {
  MultilinearMap unit = zero(ring, dim, 1);
  for (int k = 0; k < dim; ++k) unit.set_entry(static_cast<std::size_t>(k * dim + k), Coefficient::one(ring));
  return unit;
}

std::size_t MultilinearMap::size() const {
  return std::visit([](const auto& t) { return t.size(); }, table_);
}

Coefficient MultilinearMap::entry(std::size_t index) const {
  if (const auto* r = std::get_if<ResidueTable>(&table_)) {
    return {ring_, static_cast<long long>(r->at(index))};
  }
  return {ring_, std::get<IntegerTable>(table_).at(index)};
}

void MultilinearMap::set_entry(std::size_t index, const Coefficient& value) {
  if (!(value.ring() == ring_)) throw Error(ErrorCode::kRingMismatch, "entry ring");
  if (auto* r = std::get_if<ResidueTable>(&table_)) {
    r->at(index) = value.residue();
  } else {
    std::get<IntegerTable>(table_).at(index) = value.value();
  }
}

bool MultilinearMap::is_zero() const {
  return std::visit(
      [](const auto& t) {
        for (const auto& v : t) {
          if (v != 0) return false;
        }
        return true;
      },
      table_);
}

MultilinearMap MultilinearMap::operator+(const MultilinearMap& other) const {
  require_same_shape(*this, other);
  return {ring_, dim_, degree_, zip_tables(*this, other, [](const auto& ar, const auto& x, const auto& y) { return ar.add(x, y); })};
}

MultilinearMap MultilinearMap::operator-(const MultilinearMap& other) const {
  require_same_shape(*this, other);
  return {ring_, dim_, degree_,
          zip_tables(*this, other, [](const auto& ar, const auto& x, const auto& y) { return ar.add(x, ar.neg(y)); })};
}

MultilinearMap MultilinearMap::operator-() const {
  MultilinearMap out = *this;
  if (auto* r = std::get_if<ResidueTable>(&out.table_)) {
    const kernels::ModArith arith{ring_.modulus()};
    for (auto& v : *r) v = arith.neg(v);
  } else {
    for (auto& v : std::get<IntegerTable>(out.table_)) v = -v;
  }
  return out;
}

MultilinearMap MultilinearMap::scaled(const Coefficient& factor) const {
  if (!(factor.ring() == ring_)) throw Error(ErrorCode::kRingMismatch, "scalar ring");
  MultilinearMap out = *this;
  if (auto* r = std::get_if<ResidueTable>(&out.table_)) {
    const kernels::ModArith arith{ring_.modulus()};
    const auto c = factor.residue();
    for (auto& v : *r) v = arith.mul(v, c);
  } else {
    for (auto& v : std::get<IntegerTable>(out.table_)) v *= factor.value();
  }
  return out;
}

MultilinearMap make_map(const CoefficientRing& ring, int dim, int degree, std::span<const Coefficient> entries) {
  const std::size_t expected = MultilinearMap::table_size(dim, degree);
  if (entries.size() != expected) {
    throw Error(ErrorCode::kShapeMismatch,
                "expected " + std::to_string(expected) + " entries, got " + std::to_string(entries.size()));
  }
  MultilinearMap out = MultilinearMap::zero(ring, dim, degree);
  for (std::size_t k = 0; k < entries.size(); ++k) out.set_entry(k, entries[k]);
  return out;
}

MultilinearMap make_map(const CoefficientRing& ring, int dim, int degree, std::span<const long long> entries) {
  std::vector<Coefficient> coeffs;
  coeffs.reserve(entries.size());
  for (long long v : entries) coeffs.emplace_back(ring, v);
  return make_map(ring, dim, degree, std::span<const Coefficient>(coeffs));
}

MultilinearMap make_map(const CoefficientRing& ring, int dim, int degree, std::initializer_list<long long> entries) {
  return make_map(ring, dim, degree, std::span<const long long>(entries.begin(), entries.size()));
}

MultilinearMap partial_compose(const MultilinearMap& f, const MultilinearMap& g, int i, const ComposeOptions& options) {
  require_compatible(f, g);
  if (f.degree() < 1 || i < 0 || i > f.shifted_degree()) {
    throw Error(ErrorCode::kIndexOutOfScope, "∘_" + std::to_string(i) + " on an element of degree " +
                                                 std::to_string(f.degree()));
  }
  const int m = f.degree();
  const int n = g.degree();
  const auto d = static_cast<std::size_t>(f.dim());
  kernels::ComposeLayout layout;
  layout.outer = checked_power(d, i + 1);
  layout.dim = d;
  layout.g_inputs = checked_power(d, n);
  layout.tail = checked_power(d, m - 1 - i);
  const std::size_t out_size = MultilinearMap::table_size(f.dim(), m + n - 1);
  const bool negate = options.insertion_sign && sign_of(static_cast<long long>(i) * g.shifted_degree()) < 0;

  auto run = [&](const auto& arith, const auto& ft, const auto& gt, auto out) {
    using Value = typename std::decay_t<decltype(arith)>::Value;
    std::span<const Value> fs(ft), gs(gt);
    std::span<Value> os(out);
    if (options.kernel == Kernel::kSerial) {
      kernels::compose_serial(arith, fs, gs, os, layout, negate);
    } else {
      kernels::compose_parallel(arith, fs, gs, os, layout, negate);
    }
    return out;
  };

  if (f.ring().is_prime_field()) {
    auto out = run(kernels::ModArith{f.ring().modulus()}, std::get<ResidueTable>(f.table()),
                   std::get<ResidueTable>(g.table()), ResidueTable(out_size));
    return MultilinearMap::from_table(f.ring(), f.dim(), m + n - 1, std::move(out));
  }
  auto out = run(kernels::IntArith{}, std::get<IntegerTable>(f.table()), std::get<IntegerTable>(g.table()),
                 IntegerTable(out_size));
  return MultilinearMap::from_table(f.ring(), f.dim(), m + n - 1, std::move(out));
}

MultilinearMap linear_combine(std::span<const Coefficient> coeffs, std::span<const MultilinearMap> maps) {
  if (maps.empty()) throw Error(ErrorCode::kDegreeMismatch, "empty combination has no degree");
  if (coeffs.size() != maps.size()) {
    throw Error(ErrorCode::kShapeMismatch, "coefficient and map counts differ");
  }
  for (const auto& m : maps) require_same_shape(maps.front(), m);
  MultilinearMap out = maps.front().scaled(coeffs.front());
  for (std::size_t k = 1; k < maps.size(); ++k) out = out + maps[k].scaled(coeffs[k]);
  return out;
}

MultilinearMap random_map(const CoefficientRing& ring, int dim, int degree, Rng& rng) {
  if (!ring.is_prime_field()) {
    throw Error(ErrorCode::kUnsupportedRing, "random maps need a prime field");
  }
  ResidueTable table(MultilinearMap::table_size(dim, degree));
  for (auto& v : table) v = sample_residue(ring.modulus(), rng);
  return MultilinearMap::from_table(ring, dim, degree, std::move(table));
}

MultilinearMap evaluate(const MultilinearMap& f, std::span<const MultilinearMap> inputs) {
  if (static_cast<int>(inputs.size()) != f.degree()) {
    throw Error(ErrorCode::kArityMismatch, "expected " + std::to_string(f.degree()) + " inputs, got " +
                                               std::to_string(inputs.size()));
  }
  for (const auto& u : inputs) {
    require_compatible(f, u);
    if (u.degree() != 0) throw Error(ErrorCode::kArityMismatch, "inputs must be degree-0 vectors");
  }
  const auto d = static_cast<std::size_t>(f.dim());
  const std::size_t n = inputs.size();
  MultilinearMap out = MultilinearMap::zero(f.ring(), f.dim(), 0);
  std::vector<std::size_t> digits(n + 1, 0);  // (o, x_1, ..., x_n), last digit fastest
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    Coefficient term = f.entry(idx);
    for (std::size_t k = 0; k < n && !term.is_zero(); ++k) term = term * inputs[k].entry(digits[k + 1]);
    if (!term.is_zero()) out.set_entry(digits[0], out.entry(digits[0]) + term);
    for (std::size_t k = n + 1; k-- > 0;) {
      if (++digits[k] < d) break;
      digits[k] = 0;
    }
  }
  return out;
}

MultilinearMap basis_vector(const CoefficientRing& ring, int dim, int k) {
  MultilinearMap e = MultilinearMap::zero(ring, dim, 0);
  e.set_entry(static_cast<std::size_t>(k), Coefficient::one(ring));
  return e;
}

MultilinearMap componentwise_product(const CoefficientRing& ring, int dim) {
  MultilinearMap mu = MultilinearMap::zero(ring, dim, 2);
  const auto d = static_cast<std::size_t>(dim);
  for (std::size_t k = 0; k < d; ++k) mu.set_entry((k * d + k) * d + k, Coefficient::one(ring));
  return mu;
}

MultilinearMap matrix_product(const CoefficientRing& ring) {
  // e_ab * e_cd = [b == c] e_ad, basis index 2*row + col.
  MultilinearMap mu = MultilinearMap::zero(ring, 4, 2);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t c = 0; c < 2; ++c) {
        const std::size_t out = 2 * a + c;
        const std::size_t x = 2 * a + b;
        const std::size_t y = 2 * b + c;
        mu.set_entry((out * 4 + x) * 4 + y, Coefficient::one(ring));
      }
    }
  }
  return mu;
}

nlohmann::ordered_json to_json(const MultilinearMap& f) {
  nlohmann::ordered_json j;
  j["ring"] = f.ring().name();
  j["dim"] = f.dim();
  j["degree"] = f.degree();
  auto entries = nlohmann::ordered_json::array();
  if (const auto* r = std::get_if<ResidueTable>(&f.table())) {
    for (auto v : *r) entries.push_back(v);
  } else {
    for (const auto& v : std::get<IntegerTable>(f.table())) {
      if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
        entries.push_back(v.convert_to<long long>());
      } else {
        entries.push_back(v.str());
      }
    }
  }
  j["entries"] = std::move(entries);
  return j;
}

MultilinearMap map_from_json(const nlohmann::ordered_json& j) {
  try {
    const auto ring = CoefficientRing::parse(j.at("ring").get<std::string>());
    const int dim = j.at("dim").get<int>();
    const int degree = j.at("degree").get<int>();
    std::vector<Coefficient> entries;
    for (const auto& e : j.at("entries")) {
      if (e.is_string()) {
        entries.emplace_back(ring, BigInt(e.get<std::string>()));
      } else {
        entries.emplace_back(ring, e.get<long long>());
      }
    }
    return make_map(ring, dim, degree, std::span<const Coefficient>(entries));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("map JSON: ") + e.what());
  }
}

}  // namespace tetra::endo
