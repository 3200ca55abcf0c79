#pragma once

// Law bodies, written once against the Calculus interface and instantiated
// for both backends by the engine.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tetra/calculus/calculus.hpp"
#include "tetra/calculus/graded.hpp"

namespace tetra::laws::detail {

struct Outcome {
  enum class Kind { kPass, kFail, kVacuous };
  Kind kind = Kind::kVacuous;
  std::string identity;
  std::optional<GradedElement> lhs, rhs;
  std::optional<Point> point;
};

struct CheckContext {
  Rng rng;
  int dim = 1;
};

template <class E>
class Probe {
 public:
  /// Records the first mismatch; returns false once anything has failed.
  bool eq(const E& lhs, const E& rhs, std::string identity, std::optional<Point> point = std::nullopt) {
    checked_ = true;
    if (lhs == rhs) return true;
    fail_ = Outcome{Outcome::Kind::kFail, std::move(identity), GradedElement(lhs), GradedElement(rhs), point};
    return false;
  }

  /// For checks whose two sides are not elements.
  bool holds(bool ok, std::string identity, std::optional<Point> point = std::nullopt) {
    checked_ = true;
    if (ok) return true;
    fail_ = Outcome{Outcome::Kind::kFail, std::move(identity), std::nullopt, std::nullopt, point};
    return false;
  }

  /// Marks the trial as vacuous unless something fails.
  void vacuous() { vacuous_ = true; }

  Outcome done() const {
    if (fail_) return *fail_;
    if (vacuous_ || !checked_) return {};
    return Outcome{Outcome::Kind::kPass, {}, {}, {}, {}};
  }

 private:
  bool checked_ = false;
  bool vacuous_ = false;
  std::optional<Outcome> fail_;
};

inline std::string at(const std::string& what, int j) { return what + " at " + std::to_string(j); }

template <class B>
class Checkers {
 public:
  using C = Calculus<B>;
  using E = typename C::Element;
  using Args = std::vector<E>;

  static E sg(long long e, const E& x) { return C::signed_by(e, x); }
  static long long s(const E& x) { return x.degree() - 1; }
  static long long d(const E& x) { return x.degree(); }

  static Outcome cuppro(const C& c, const Args& a) {
    const E &f = a[0], &g = a[1];
    const E& mu = c.mu();
    const E I = c.unit();
    Probe<E> p;
    if (!p.eq(c.compose(mu, f, 0), sg(d(f), c.cup(f, I)), "mu o_0 f = (-1)^f f cup I")) return p.done();
    if (!p.eq(c.compose(mu, f, 1), -c.cup(I, f), "mu o_1 f = -I cup f")) return p.done();
    p.eq(c.cup(f, g), -sg(s(f) * d(g), c.compose(c.compose(mu, g, 1), f, 0)), "f cup g = -(-1)^{|f|g}(mu o_1 g) o_0 f");
    return p.done();
  }

  static Outcome lemma_cup(const C& c, const Args& a) {
    const E &f = a[0], &g = a[1], &h = a[2];
    const E fg = c.cup(f, g);
    Probe<E> p;
    for (int j = 0; j <= fg.degree() - 1; ++j) {
      const E rhs = j <= s(f) ? sg(d(g) * s(h), c.cup(c.compose(f, h, j), g))
                              : c.cup(f, c.compose(g, h, j - f.degree()));
      if (!p.eq(c.compose(fg, h, j), rhs, at("(f cup g) o_j h", j), Point{j, 0, 0})) break;
    }
    return p.done();
  }

  static Outcome right_derivation(const C& c, const Args& a) {
    const E &f = a[0], &g = a[1], &h = a[2];
    Probe<E> p;
    p.eq(c.bullet(c.cup(f, g), h), c.cup(f, c.bullet(g, h)) + sg(s(h) * d(g), c.cup(c.bullet(f, h), g)),
         "(f cup g).h = f cup (g.h) + (-1)^{|h|g}(f.h) cup g");
    return p.done();
  }

  static Outcome delta_expansion(const C& c, const Args& a) {
    const E& f = a[0];
    const E I = c.unit();
    Probe<E> p;
    p.eq(-c.delta(f), c.cup(f, I) + c.bullet(f, c.mu()) + sg(s(f), c.cup(I, f)),
         "-delta f = f cup I + f.mu + (-1)^{|f|} I cup f");
    return p.done();
  }

  static Outcome bullet_deviation(const C& c, const Args& a) {
    const E &f = a[0], &g = a[1];
    Probe<E> p;
    p.eq(sg(s(g), c.dev_bullet(f, g)), c.cup(f, g) - sg(d(f) * d(g), c.cup(g, f)),
         "(-1)^{|g|} dev_. delta(f,g) = f cup g - (-1)^{fg} g cup f");
    return p.done();
  }

  static Outcome getzler_gerstenhaber(const C& c, const Args& a) {
    const E &h = a[0], &f = a[1], &g = a[2];
    const E hfg = c.associator(h, f, g);
    Probe<E> p;
    if (!p.eq(hfg, c.tribraces(h, f, g) + sg(s(f) * s(g), c.tribraces(h, g, f)),
              "(h,f,g) = {h,f,g} + (-1)^{|f||g|}{h,g,f}")) {
      return p.done();
    }
    p.eq(hfg, sg(s(f) * s(g), c.associator(h, g, f)), "(h,f,g) = (-1)^{|f||g|}(h,g,f)");
    return p.done();
  }

  static Outcome tribrace_deviation(const C& c, const Args& a) {
    const E &h = a[0], &f = a[1], &g = a[2];
    const E lhs = sg(s(g), c.dev_tribraces(h, f, g));
    Probe<E> p;
    if (!p.eq(lhs, c.cup(c.bullet(h, f), g) + sg(s(h) * d(f), c.cup(f, c.bullet(h, g))) - c.bullet(h, c.cup(f, g)),
              "(-1)^{|g|} dev = (h.f) cup g + (-1)^{|h|f} f cup (h.g) - h.(f cup g)")) {
      return p.done();
    }
    p.eq(lhs, c.cup(c.bracket(h, f), g) + sg(s(h) * d(f), c.cup(f, c.bracket(h, g))) - c.bracket(h, c.cup(f, g)),
         "(-1)^{|g|} dev = [h,f] cup g + (-1)^{|h|f} f cup [h,g] - [h, f cup g]");
    return p.done();
  }

  static Outcome main_theorem(const C& c, const Args& a) {
    const E &h = a[0], &f = a[1], &g = a[2], &b = a[3];
    Probe<E> p;
    // Both sides sum over empty domains when deg h = 1.
    if (h.degree() < 2) p.vacuous();
    const E lhs = sg(s(b), c.dev_tetrabraces(h, f, g, b));
    const E rhs = c.cup(c.tribraces(h, f, g), b) - c.tribraces(h, f, c.cup(g, b)) -
                  sg(s(g), c.tribraces(h, c.cup(f, g), b)) + sg(s(h) * d(f) + s(g), c.cup(f, c.tribraces(h, g, b)));
    p.eq(lhs, rhs, "(-1)^{|b|} dev delta(h,f,g,b) = {h,f,g} cup b - {h,f,g cup b} - ... ");
    return p.done();
  }

  static Outcome lemma_first(const C& c, const Args& a) {
    const E &h = a[0], &f = a[1], &g = a[2], &b = a[3];
    Probe<E> p;
    const auto T = ground_tetrahedron(h.degree(), f.degree(), g.degree());
    if (T.empty()) return p.done();
    const E db = c.delta(b), dg = c.delta(g), df = c.delta(f);
    for (const auto& t : T.points) {
      const int i = t[0], j = t[1], k = t[2];
      const E lhs = c.delta(c.c3(h, f, g, b, i, j, k)) - c.c3(h, f, g, db, i, j, k) -
                    sg(s(b), c.c3(h, f, dg, b, i, j, k + 1)) - sg(s(b) + s(g), c.c3(h, df, g, b, i, j + 1, k + 1));
      const Point q{i + 1, j + 1, k + 1};
      E rhs = c.aux_gamma(GammaKind::kGamma, h, f, g, b, q);
      for (auto kind : {GammaKind::kGamma1, GammaKind::kGamma2, GammaKind::kGamma3}) {
        rhs = rhs + c.aux_gamma(kind, h, f, g, b, q);
      }
      if (!p.eq(lhs, rhs, "lemma first", t)) break;
    }
    return p.done();
  }

  static Outcome lemma_second(const C& c, const Args& a) {
    const E &h = a[0], &f = a[1], &g = a[2], &b = a[3];
    Probe<E> p;
    const auto T = ground_tetrahedron(h.degree() + 1, f.degree(), g.degree());
    if (T.empty()) return p.done();
    const E dh = c.delta(h);
    const long long s3 = s(f) + s(g) + s(b);
    for (const auto& t : T.points) {
      const int i = t[0], j = t[1], k = t[2];
      const E lhs = sg(s3, c.c3(dh, f, g, b, i, j, k));
      const E rhs = c.aux_gamma(GammaKind::kGamma, h, f, g, b, {i, j, k}) +
                    c.aux_gamma(GammaKind::kGamma1, h, f, g, b, {i + 1, j, k}) +
                    c.aux_gamma(GammaKind::kGamma2, h, f, g, b, {i + 1, j + 1, k}) +
                    c.aux_gamma(GammaKind::kGamma3, h, f, g, b, {i + 1, j + 1, k + 1});
      if (!p.eq(lhs, rhs, "lemma second", t)) break;
    }
    return p.done();
  }

  static Outcome boundary_lemma(const C& c, const Args& a) {
    const E &h = a[0], &f = a[1], &g = a[2], &b = a[3];
    Probe<E> p;
    bool any = false;
    for (auto kind : kGammaKinds) {
      for (const auto& q : boundary_face(kind, h.degree(), f.degree(), g.degree()).points) {
        any = true;
        if (!p.eq(c.aux_gamma(kind, h, f, g, b, q), c.boundary_closed_form(kind, h, f, g, b, q),
                  to_string(kind) + " face", q)) {
          return p.done();
        }
      }
    }
    for (const auto& edge : boundary_edge_values(h.degree(), f.degree(), g.degree())) {
      const auto face = boundary_face(edge.kind, h.degree(), f.degree(), g.degree());
      for (const auto& q : edge.points) {
        if (!p.holds(face.contains(q), to_string(edge.kind) + " edge value off its face", q)) return p.done();
        if (!p.eq(c.aux_gamma(edge.kind, h, f, g, b, q), c.boundary_closed_form(edge.kind, h, f, g, b, q),
                  to_string(edge.kind) + " edge", q)) {
          return p.done();
        }
      }
    }
    if (!any) p.vacuous();
    return p.done();
  }

  static Outcome delta_squared(const C& c, const Args& a) {
    const E& f = a[0];
    Probe<E> p;
    if (!p.eq(c.bullet(c.mu(), c.mu()), c.zero(3), "mu.mu = 0")) return p.done();
    p.eq(c.delta(c.delta(f)), c.zero(f.degree() + 2), "delta delta f = 0");
    return p.done();
  }

  static Outcome degree_bookkeeping(const C& c, const Args& a) {
    const E &h = a[0], &f = a[1], &g = a[2], &b = a[3];
    Probe<E> p;
    auto expect = [&](const E& x, long long want, const char* what) {
      return p.holds(x.degree() == want,
                     std::string(what) + ": got " + std::to_string(x.degree()) + ", want " + std::to_string(want));
    };
    expect(c.cup(f, g), d(f) + d(g), "deg cup") && expect(c.bullet(f, g), d(f) + d(g) - 1, "deg bullet") &&
        expect(c.compose(h, g, 0), d(h) + d(g) - 1, "deg o_i") &&
        expect(c.tribraces(h, f, g), d(h) + d(f) + d(g) - 2, "deg tribraces") &&
        expect(c.tetrabraces(h, f, g, b), d(h) + d(f) + d(g) + d(b) - 3, "deg tetrabraces") &&
        expect(c.delta(f), d(f) + 1, "deg delta") && expect(c.bracket(h, f), d(h) + d(f) - 1, "deg bracket");
    return p.done();
  }

  static Outcome composition_relations(const C& c, const Args& a) {
    const E &h = a[0], &f = a[1], &g = a[2];
    const long long fg = s(f) * s(g);
    const auto r = scope_regions(h.degree(), f.degree(), c.canary());
    Probe<E> p;
    auto lhs = [&](const Point& q) { return c.compose(c.compose(h, f, q[0]), g, q[1]); };
    for (const auto& q : r.b.points) {
      if (!p.eq(lhs(q), sg(fg, c.compose(c.compose(h, g, q[1]), f, q[0] + static_cast<int>(s(g)))), "B case", q))
        return p.done();
    }
    for (const auto& q : r.a.points) {
      if (!p.eq(lhs(q), c.compose(h, c.compose(f, g, q[1] - q[0]), q[0]), "A case", q)) return p.done();
    }
    for (const auto& q : r.g.points) {
      if (!p.eq(lhs(q), sg(fg, c.compose(c.compose(h, g, q[1] - static_cast<int>(s(f))), f, q[0])), "G case", q))
        return p.done();
    }
    return p.done();
  }

  static Outcome unit_laws(const C& c, const Args& a) {
    const E& f = a[0];
    const E I = c.unit();
    Probe<E> p;
    if (!p.eq(c.compose(I, f, 0), f, "I o_0 f = f")) return p.done();
    for (int i = 0; i <= s(f); ++i) {
      if (!p.eq(c.compose(f, I, i), f, at("f o_i I = f", i), Point{i, 0, 0})) break;
    }
    return p.done();
  }

  static Outcome bg_equivalence(const C& c, const Args& a) {
    const E &h = a[0], &f = a[1], &g = a[2];
    const long long fg = s(f) * s(g);
    const auto b_hf = scope_regions(h.degree(), f.degree(), c.canary()).b;
    const auto g_hg = scope_regions(h.degree(), g.degree(), c.canary()).g;
    Probe<E> p;
    if (b_hf.empty()) {
      p.vacuous();
      return p.done();
    }
    std::set<Point> mirrored;
    for (const auto& q : b_hf.points) mirrored.insert({q[1], q[0] + static_cast<int>(s(g)), 0});
    if (!p.holds(std::set<Point>(g_hg.points.begin(), g_hg.points.end()) == mirrored,
                 "mirror of B(h,f) is G(h,g)")) {
      return p.done();
    }
    for (const auto& q : b_hf.points) {
      const int i = q[0], j = q[1];
      const E hfg = c.compose(c.compose(h, f, i), g, j);
      const E hgf = c.compose(c.compose(h, g, j), f, i + static_cast<int>(s(g)));
      if (!p.eq(hfg, sg(fg, hgf), "B case", q)) break;
      // The same pair read as a G instance for (h, g, f).
      if (!p.eq(hgf, sg(fg, c.compose(c.compose(h, f, i), g, j)), "mirrored G case",
                Point{j, i + static_cast<int>(s(g)), 0})) {
        break;
      }
    }
    return p.done();
  }

  static Outcome scope_partition(const C& c, const Args& a) {
    const int dh = a[0].degree(), df = a[1].degree();
    const int h = dh - 1, f = df - 1;
    const auto r = scope_regions(dh, df, c.canary());
    Probe<E> p;
    std::set<Point> full;
    for (int i = 0; i <= h; ++i)
      for (int j = 0; j <= f + h; ++j) full.insert({i, j, 0});
    std::set<Point> seen;
    std::size_t total = 0;
    for (const auto* part : {&r.b, &r.a, &r.g}) {
      total += part->size();
      seen.insert(part->points.begin(), part->points.end());
    }
    if (!p.holds(total == seen.size(), "B, A, G pairwise disjoint")) return p.done();
    if (!p.holds(seen == full, "B ∪ A ∪ G = scope")) return p.done();
    for (const auto& q : r.b.points)
      if (!p.holds(1 <= q[0] && q[0] <= h && 0 <= q[1] && q[1] <= q[0] - 1, "B inequalities", q)) return p.done();
    for (const auto& q : r.a.points)
      if (!p.holds(0 <= q[0] && q[0] <= h && q[0] <= q[1] && q[1] <= q[0] + f, "A inequalities", q)) return p.done();
    for (const auto& q : r.g.points)
      if (!p.holds(0 <= q[0] && q[0] <= h - 1 && q[0] + df <= q[1] && q[1] <= f + h, "G inequalities", q))
        return p.done();
    return p.done();
  }

  static Outcome bracket_antisymmetry(const C& c, const Args& a) {
    const E &f = a[0], &g = a[1];
    Probe<E> p;
    if (!p.eq(c.bracket(f, g) + sg(s(f) * s(g), c.bracket(g, f)), c.zero(f.degree() + g.degree() - 1),
              "[f,g] + (-1)^{|f||g|}[g,f] = 0")) {
      return p.done();
    }
    p.eq(c.bracket(f, c.mu()), -c.delta(f), "[f,mu] = -delta f");
    return p.done();
  }

  static Outcome recap_vs_shifted(const C& c, const Args& a) {
    const E &h = a[0], &f = a[1], &g = a[2], &b = a[3];
    Probe<E> p;
    const auto T = ground_tetrahedron(h.degree(), f.degree(), g.degree());
    for (const auto& t : T.points) {
      for (auto kind : kGammaKinds) {
        if (!p.eq(c.shifted_gamma(kind, h, f, g, b, t), c.aux_gamma(kind, h, f, g, b, {t[0] + 1, t[1] + 1, t[2] + 1}),
                  to_string(kind) + " shifted vs uniform", t)) {
          return p.done();
        }
      }
    }
    return p.done();
  }

  static Outcome envelope_partition(const C&, const Args& a) {
    const int dh = a[0].degree(), df = a[1].degree(), dg = a[2].degree(), db = a[3].degree();
    const auto env = envelope_domains(dh, df, dg, db);
    Probe<E> p;
    auto subset = [](const LatticeDomain& x, const LatticeDomain& y) {
      return std::includes(y.points.begin(), y.points.end(), x.points.begin(), x.points.end());
    };
    if (!p.holds(subset(env.shifted, env.truncated) && subset(env.truncated, env.envelope),
                 "T' ⊆ truncated ⊆ T'_env")) {
      return p.done();
    }
    std::vector<Point> joined = env.shifted.points;
    joined.insert(joined.end(), env.boundary.points.begin(), env.boundary.points.end());
    std::sort(joined.begin(), joined.end());
    if (!p.holds(joined == env.truncated.points && std::adjacent_find(joined.begin(), joined.end()) == joined.end(),
                 "truncated = T' ⊔ boundary")) {
      return p.done();
    }
    std::vector<Point> faces;
    for (auto kind : kGammaKinds) {
      const auto face = boundary_face(kind, dh, df, dg);
      faces.insert(faces.end(), face.points.begin(), face.points.end());
    }
    std::sort(faces.begin(), faces.end());
    if (!p.holds(faces == env.boundary.points, "boundary = disjoint union of the four faces")) return p.done();
    // Removed edges are exactly the points lying on two or more faces of the envelope.
    for (const auto& q : env.envelope.points) {
      const int a0 = q[0], b0 = q[1] - df + 1, c0 = q[2] - df - dg + 2;
      const int degenerate = int{a0 == 0} + int{a0 == b0} + int{b0 == c0} + int{c0 == dh + 1};
      if (!p.holds((degenerate >= 2) != env.truncated.contains(q), "removed edges = multiply degenerate points", q))
        return p.done();
    }
    auto T = ground_tetrahedron(dh, df, dg).points;
    for (auto& t : T) t = {t[0] + 1, t[1] + 1, t[2] + 1};
    p.holds(T == env.shifted.points, "T' = T + (1,1,1)");
    return p.done();
  }
};

}  // namespace tetra::laws::detail
