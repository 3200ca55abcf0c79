#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "tetra/calculus/domains.hpp"

using namespace tetra;

namespace {

std::set<Point> as_set(const LatticeDomain& d) { return {d.points.begin(), d.points.end()}; }

std::set<Point> pairs(std::initializer_list<std::pair<int, int>> ps) {
  std::set<Point> out;
  for (auto [i, j] : ps) out.insert({i, j, 0});
  return out;
}

/// (a, b', c) -> (i, j, k)
Point unshift(int a, int b, int c, int f, int g) { return {a, b + f - 1, c + f + g - 2}; }

int degeneracies(int a, int b, int c, int h) { return (a == 0) + (a == b) + (b == c) + (c == h + 1); }

}  // namespace

TEST_CASE("scope regions by enumeration") {
  for (int h = 1; h <= 6; ++h) {
    for (int f = 1; f <= 6; ++f) {
      std::set<Point> b, a, g;
      for (int i = 0; i <= h - 1; ++i) {
        for (int j = 0; j <= h + f - 2; ++j) {
          if (j < i) b.insert({i, j, 0});
          else if (j <= i + f - 1) a.insert({i, j, 0});
          else g.insert({i, j, 0});
        }
      }
      const auto r = scope_regions(h, f);
      CHECK(as_set(r.b) == b);
      CHECK(as_set(r.a) == a);
      CHECK(as_set(r.g) == g);
      CHECK(r.b.size() + r.a.size() + r.g.size() == static_cast<std::size_t>(h * (h + f - 1)));
    }
  }
}

TEST_CASE("scope region examples") {
  const auto r = scope_regions(2, 2);
  CHECK(as_set(r.b) == pairs({{1, 0}}));
  CHECK(as_set(r.a) == pairs({{0, 0}, {0, 1}, {1, 1}, {1, 2}}));
  CHECK(as_set(r.g) == pairs({{0, 2}}));
  for (int n = 1; n <= 4; ++n) {
    CHECK(scope_regions(1, n).b.empty());
    CHECK(scope_regions(1, n).g.empty());
  }
  CHECK(as_set(scope_regions(3, 1).g) == pairs({{0, 1}, {0, 2}, {1, 2}}));
  CHECK_ERROR_CODE(scope_regions(0, 1), ErrorCode::kInvalidDegree);
}

TEST_CASE("off-by-one canary moves the G region") {
  const auto good = scope_regions(3, 2), bad = scope_regions(3, 2, Canary::kGRangeOffByOne);
  CHECK(as_set(good.g) != as_set(bad.g));
}

TEST_CASE("ground tetrahedron") {
  CHECK(as_set(ground_tetrahedron(3, 1, 1)) == std::set<Point>{{0, 1, 2}});
  CHECK(ground_tetrahedron(2, 1, 1).empty());
  CHECK(ground_tetrahedron(2, 4, 3).empty());
  CHECK(as_set(ground_tetrahedron(4, 1, 1)) == std::set<Point>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  for (int h = 1; h <= 6; ++h) {
    for (int f = 1; f <= 3; ++f) {
      for (int g = 1; g <= 3; ++g) {
        std::set<Point> expected;
        for (int i = 0; i <= h; ++i)
          for (int j = 0; j <= h + f; ++j)
            for (int k = 0; k <= h + f + g; ++k)
              if (0 <= i && i <= j - f && j - f <= k - f - g && k - f - g <= h - 3) expected.insert({i, j, k});
        CHECK(as_set(ground_tetrahedron(h, f, g)) == expected);
      }
    }
  }
}

TEST_CASE("envelope domains by enumeration") {
  for (int h = 1; h <= 6; ++h) {
    for (int f = 1; f <= 3; ++f) {
      for (int g = 1; g <= 3; ++g) {
        std::set<Point> shifted, envelope, truncated, boundary;
        for (int a = 0; a <= h + 1; ++a) {
          for (int b = a; b <= h + 1; ++b) {
            for (int c = b; c <= h + 1; ++c) {
              const Point p = unshift(a, b, c, f, g);
              const int deg = degeneracies(a, b, c, h);
              envelope.insert(p);
              if (deg == 0) shifted.insert(p);
              if (deg <= 1) truncated.insert(p);
              if (deg == 1) boundary.insert(p);
            }
          }
        }
        const auto e = envelope_domains(h, f, g, 1);
        CHECK(as_set(e.shifted) == shifted);
        CHECK(as_set(e.envelope) == envelope);
        CHECK(as_set(e.truncated) == truncated);
        CHECK(as_set(e.boundary) == boundary);

        // T' is the ground tetrahedron moved by (1,1,1).
        std::set<Point> moved;
        for (const auto& p : ground_tetrahedron(h, f, g).points) moved.insert({p[0] + 1, p[1] + 1, p[2] + 1});
        CHECK(moved == shifted);

        // truncated = T' ⊔ boundary, and the envelope minus the edges is the truncated set.
        for (const auto& p : e.shifted.points) CHECK_FALSE(e.boundary.contains(p));
        CHECK(e.shifted.size() + e.boundary.size() == e.truncated.size());
        std::set<Point> edges;
        for (const auto& p : envelope_edges(h, f, g))
          if (e.envelope.contains(p)) edges.insert(p);
        for (const auto& p : e.envelope.points) CHECK(e.truncated.contains(p) != (edges.count(p) == 1));

        // The four faces tile the boundary.
        std::size_t face_total = 0;
        for (GammaKind kind : kGammaKinds) {
          const auto face = boundary_face(kind, h, f, g);
          face_total += face.size();
          for (const auto& p : face.points) {
            CHECK(e.boundary.contains(p));
            CHECK(in_gamma_domain(kind, h, f, g, p));
          }
        }
        CHECK(face_total == e.boundary.size());

        for (const auto& family : boundary_edge_values(h, f, g)) {
          const auto face = boundary_face(family.kind, h, f, g);
          for (const auto& p : family.points) CHECK(face.contains(p));
        }
      }
    }
  }
}

TEST_CASE("envelope examples") {
  const auto e = envelope_domains(4, 1, 1, 1);
  CHECK(e.shifted.size() + e.boundary.size() == e.truncated.size());
  CHECK(as_set(envelope_domains(3, 1, 1, 1).shifted) == std::set<Point>{{1, 2, 3}});
  CHECK(boundary_edge_values(4, 1, 1).size() == 6);
}

TEST_CASE("gamma domains") {
  // Γ' lives on T' and on j = i + |f|, not on i = 0.
  CHECK(in_gamma_domain(GammaKind::kGamma1, 3, 1, 1, {1, 2, 3}));
  CHECK(in_gamma_domain(GammaKind::kGamma, 3, 1, 1, {0, 1, 2}));
  CHECK_FALSE(in_gamma_domain(GammaKind::kGamma1, 3, 1, 1, {0, 1, 2}));
  CHECK_FALSE(in_gamma_domain(GammaKind::kGamma, 3, 1, 1, {0, 0, 0}));
}
