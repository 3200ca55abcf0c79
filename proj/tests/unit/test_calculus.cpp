#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "tetra/calculus/calculus.hpp"
#include "tetra/endo/backend.hpp"
#include "tetra/free/backend.hpp"

using namespace tetra;
using endo::MultilinearMap;
using testing::as_scalar;
using testing::scalar;

namespace {

using EndoCalc = Calculus<endo::EndoBackend>;

/// In dimension one every element is a scalar and f ∘_i g = (-1)^{i|g|} fg,
/// so each operation reduces to a signed count that is summed here directly
/// from the defining index inequalities.
struct ScalarOracle {
  long long p, mu;

  long long mod(long long v) const { return ((v % p) + p) % p; }

  long long bullet(long long f, int df, long long g, int dg) const {
    long long s = 0;
    for (int i = 0; i <= df - 1; ++i) s += sign_of(static_cast<long long>(i) * (dg - 1));
    return mod(s * f * g);
  }
  long long cup(long long f, int df, long long g, int dg) const {
    return mod(sign_of(static_cast<long long>(df) * dg) * mu * f * g);
  }
  long long delta(long long f, int df) const {
    return mod(sign_of(df - 1) * bullet(mu, 2, f, df) - bullet(f, df, mu, 2));
  }
  long long tri(long long h, int dh, long long f, int df, long long g, int dg) const {
    long long s = 0;
    for (int i = 0; i <= dh - 1; ++i)
      for (int j = i + df; j <= dh + df - 2; ++j)
        s += sign_of(static_cast<long long>(i) * (df - 1) + static_cast<long long>(j) * (dg - 1));
    return mod(s * h * f * g);
  }
  long long tetra(long long h, int dh, long long f, int df, long long g, int dg, long long b, int db) const {
    long long s = 0;
    for (int i = 0; i <= dh - 3; ++i)
      for (int j = i + df; j - df <= dh - 3; ++j)
        for (int k = j + dg; k - df - dg <= dh - 3; ++k)
          s += sign_of(static_cast<long long>(i) * (df - 1) + static_cast<long long>(j) * (dg - 1) +
                       static_cast<long long>(k) * (db - 1));
    return mod(s * h * f * g * b);
  }
};

EndoCalc d1(long long mu, std::uint32_t p = 97) {
  const auto ring = CoefficientRing::prime_field(p);
  return testing::endo_calculus(ring, 1, scalar(ring, 2, mu));
}

EndoCalc random_calc(int dim, Rng& rng) {
  const auto ring = testing::f97();
  return testing::endo_calculus(ring, dim, endo::random_map(ring, dim, 2, rng));
}

MultilinearMap sgn(long long e, const MultilinearMap& x) { return sign_of(e) < 0 ? -x : x; }

}  // namespace

TEST_CASE("d=1 examples") {
  const auto ring = testing::f97();
  const auto c = d1(1);
  CHECK(as_scalar(c.cup(scalar(ring, 1, 2), scalar(ring, 1, 3))) == 91);
  CHECK(as_scalar(c.cup(scalar(ring, 2, 3), scalar(ring, 2, 5))) == 15);
  CHECK(c.cup(MultilinearMap::zero(ring, 1, 2), scalar(ring, 3, 5)) == MultilinearMap::zero(ring, 1, 5));
  CHECK(as_scalar(c.bullet(scalar(ring, 3, 2), scalar(ring, 2, 3))) == 6);
  CHECK(as_scalar(c.bullet(scalar(ring, 2, 5), scalar(ring, 2, 7))) == 0);
  const auto c2 = d1(2);
  const auto d2 = c2.delta(scalar(ring, 2, 7));
  CHECK(d2.degree() == 3);
  CHECK(d2.is_zero());
  CHECK(as_scalar(c2.delta(scalar(ring, 3, 7))) == 14);
  CHECK(as_scalar(c.tribraces(scalar(ring, 2, 2), scalar(ring, 1, 3), scalar(ring, 1, 5))) == 30);
  CHECK(c.tribraces(scalar(ring, 1, 2), scalar(ring, 3, 3), scalar(ring, 1, 5)).is_zero());
  CHECK(as_scalar(c.tetrabraces(scalar(ring, 3, 2), scalar(ring, 1, 3), scalar(ring, 1, 5), scalar(ring, 1, 7))) ==
        210 % 97);
  CHECK(c.tetrabraces(scalar(ring, 2, 2), scalar(ring, 1, 3), scalar(ring, 1, 5), scalar(ring, 1, 7)).is_zero());
}

TEST_CASE("d=1 operations match the scalar oracle") {
  for (std::uint32_t p : {97u, 101u}) {
    const auto ring = CoefficientRing::prime_field(p);
    Rng rng(p);
    for (int t = 0; t < 200; ++t) {
      const long long mu = 1 + static_cast<long long>(rng() % (p - 1));
      const ScalarOracle o{p, mu};
      const auto c = d1(mu, p);
      int deg[4];
      long long val[4];
      std::vector<MultilinearMap> x;
      for (int s = 0; s < 4; ++s) {
        deg[s] = 1 + static_cast<int>(rng() % 5);
        val[s] = static_cast<long long>(rng() % p);
        x.push_back(scalar(ring, deg[s], val[s]));
      }
      CHECK(as_scalar(c.cup(x[0], x[1])) == o.cup(val[0], deg[0], val[1], deg[1]));
      CHECK(as_scalar(c.bullet(x[0], x[1])) == o.bullet(val[0], deg[0], val[1], deg[1]));
      CHECK(as_scalar(c.delta(x[0])) == o.delta(val[0], deg[0]));
      CHECK(as_scalar(c.tribraces(x[0], x[1], x[2])) == o.tri(val[0], deg[0], val[1], deg[1], val[2], deg[2]));
      CHECK(as_scalar(c.tetrabraces(x[0], x[1], x[2], x[3])) ==
            o.tetra(val[0], deg[0], val[1], deg[1], val[2], deg[2], val[3], deg[3]));
    }
  }
}

TEST_CASE("unit and bilinearity") {
  Rng rng(41);
  const auto c = random_calc(2, rng);
  const auto ring = testing::f97();
  for (int d = 1; d <= 4; ++d) {
    const auto f = endo::random_map(ring, 2, d, rng);
    CHECK(c.bullet(f, c.unit()) == f.scaled(Coefficient(ring, d)));
  }
  const auto h = endo::random_map(ring, 2, 3, rng), f = endo::random_map(ring, 2, 1, rng),
             g = endo::random_map(ring, 2, 2, rng), b = endo::random_map(ring, 2, 1, rng),
             b2 = endo::random_map(ring, 2, 1, rng);
  const Coefficient k(ring, 5);
  CHECK(c.tetrabraces(h, f, g, b + b2.scaled(k)) == c.tetrabraces(h, f, g, b) + c.tetrabraces(h, f, g, b2).scaled(k));
  CHECK(c.bracket(f, MultilinearMap::zero(ring, 2, 2)).is_zero());
  const auto z = MultilinearMap::zero(ring, 2, 2);
  CHECK(c.associator(z, z, z).is_zero());
  CHECK(c.dev_bullet(z, z).is_zero());
  CHECK(c.dev_tribraces(z, z, z).is_zero());
  CHECK(c.dev_tetrabraces(MultilinearMap::zero(ring, 2, 3), z, z, z).is_zero());
}

TEST_CASE("degree errors") {
  const auto ring = testing::f97();
  const auto c = d1(1);
  const auto v = MultilinearMap::zero(ring, 1, 0), f = scalar(ring, 2, 1);
  CHECK_ERROR_CODE(c.bullet(v, f), ErrorCode::kInvalidDegree);
  CHECK_ERROR_CODE(c.delta(v), ErrorCode::kInvalidDegree);
  CHECK_ERROR_CODE(c.bracket(f, v), ErrorCode::kInvalidDegree);
  CHECK_ERROR_CODE(EndoCalc(endo::EndoBackend{ring, 1, {}}, scalar(ring, 3, 1)), ErrorCode::kInvalidDegree);
}

TEST_CASE("identities on random d=2 instances") {
  Rng rng(43);
  const auto ring = testing::f97();
  auto draw = [&](int lo, int hi) {
    const int d = lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
    return endo::random_map(ring, 2, d, rng);
  };
  for (int t = 0; t < 20; ++t) {
    const auto c = random_calc(2, rng);
    const auto I = c.unit();
    const auto h = draw(1, 3), f = draw(1, 3), g = draw(1, 2);
    const long long sh = h.degree() - 1, sf = f.degree() - 1, sg = g.degree() - 1;
    const long long fd = f.degree(), gd = g.degree();

    CHECK(c.bracket(f, g) + sgn(sf * sg, c.bracket(g, f)) == MultilinearMap::zero(ring, 2, fd + gd - 1));
    CHECK(c.bracket(f, c.mu()) == -c.delta(f));
    CHECK(-c.delta(f) == c.cup(f, I) + c.bullet(f, c.mu()) + sgn(sf, c.cup(I, f)));
    CHECK(c.associator(h, f, g) == c.tribraces(h, f, g) + sgn(sf * sg, c.tribraces(h, g, f)));
    CHECK(c.associator(h, f, g) == sgn(sf * sg, c.associator(h, g, f)));
    CHECK(sgn(sg, c.dev_bullet(f, g)) == c.cup(f, g) - sgn(fd * gd, c.cup(g, f)));
    CHECK(sgn(sg, c.dev_tribraces(h, f, g)) ==
          c.cup(c.bullet(h, f), g) + sgn(sh * fd, c.cup(f, c.bullet(h, g))) - c.bullet(h, c.cup(f, g)));
    CHECK(sgn(sg, c.dev_tribraces(h, f, g)) ==
          c.cup(c.bracket(h, f), g) + sgn(sh * fd, c.cup(f, c.bracket(h, g))) - c.bracket(h, c.cup(f, g)));
  }
}

TEST_CASE("tetrabrace deviation on random instances") {
  Rng rng(47);
  const auto ring = testing::f97();
  for (int t = 0; t < 8; ++t) {
    const int dim = 1 + t % 2;
    const auto c = random_calc(dim, rng);
    const int dh = 3 + t % 2;
    const auto h = endo::random_map(ring, dim, dh, rng);
    const auto f = endo::random_map(ring, dim, 1 + static_cast<int>(rng() % 2), rng);
    const auto g = endo::random_map(ring, dim, 1 + static_cast<int>(rng() % 2), rng);
    const auto b = endo::random_map(ring, dim, 1 + static_cast<int>(rng() % 2), rng);
    const long long sh = dh - 1, sg = g.degree() - 1, sb = b.degree() - 1, fd = f.degree();
    const auto rhs = c.cup(c.tribraces(h, f, g), b) - c.tribraces(h, f, c.cup(g, b)) -
                     sgn(sg, c.tribraces(h, c.cup(f, g), b)) + sgn(sh * fd + sg, c.cup(f, c.tribraces(h, g, b)));
    CHECK(sgn(sb, c.dev_tetrabraces(h, f, g, b)) == rhs);
  }
}

TEST_CASE("auxiliary variables") {
  Rng rng(53);
  const auto ring = testing::f97();
  const auto c = random_calc(2, rng);
  const auto h = endo::random_map(ring, 2, 4, rng), f = endo::random_map(ring, 2, 2, rng),
             g = endo::random_map(ring, 2, 1, rng), b = endo::random_map(ring, 2, 2, rng);
  const int dh = 4, df = 2, dg = 1;
  for (const auto& p : ground_tetrahedron(dh, df, dg).points) {
    const Point q{p[0] + 1, p[1] + 1, p[2] + 1};
    for (GammaKind kind : kGammaKinds) {
      const auto value = c.aux_gamma(kind, h, f, g, b, q);
      CHECK(value.degree() == dh + df + dg + b.degree() - 2);
      CHECK(value == c.shifted_gamma(kind, h, f, g, b, p));
    }
  }
  for (GammaKind kind : kGammaKinds) {
    const auto face = boundary_face(kind, dh, df, dg);
    CHECK_FALSE(face.empty());
    for (const auto& p : face.points) CHECK(c.aux_gamma(kind, h, f, g, b, p) == c.boundary_closed_form(kind, h, f, g, b, p));
  }
  CHECK_ERROR_CODE(c.aux_gamma(GammaKind::kGamma1, h, f, g, b, {0, 2, 3}), ErrorCode::kIndexOutOfDomain);
  CHECK_ERROR_CODE(c.aux_gamma(GammaKind::kGamma, h, f, g, b, {-1, 0, 0}), ErrorCode::kIndexOutOfDomain);
  CHECK_ERROR_CODE(c.shifted_gamma(GammaKind::kGamma, h, f, g, b, {5, 5, 5}), ErrorCode::kIndexOutOfDomain);
  CHECK_ERROR_CODE(c.boundary_closed_form(GammaKind::kGamma3, h, f, g, b, {1, 2, 3}), ErrorCode::kIndexOutOfDomain);
}

TEST_CASE("free backend") {
  const auto ring = testing::f97();
  const auto sig = free::make_signature({{"mu", 2}, {"h", 2}, {"f", 1}, {"g", 1}});
  auto gen = [&](std::string_view n) { return free::FreeElement::generator(ring, sig, n); };
  const Calculus<free::FreeBackend> c(free::FreeBackend{ring, sig, {}}, gen("mu"));
  const auto tri = c.tribraces(gen("h"), gen("f"), gen("g"));
  REQUIRE(tri.terms().size() == 1);
  CHECK(tri.terms().begin()->first.to_sexpr(*sig) == "(h (f _) (g _))");
  CHECK(c.bullet(gen("h"), c.unit()) == gen("h").scaled(Coefficient(ring, 2)));
  CHECK(c.bracket(gen("h"), gen("mu")) == -c.delta(gen("h")));
}
