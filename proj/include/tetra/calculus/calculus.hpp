#pragma once

#include <stdexcept>
#include <utility>

#include "tetra/calculus/canary.hpp"
#include "tetra/calculus/domains.hpp"
#include "tetra/coeff_ring.hpp"
#include "tetra/error.hpp"

namespace tetra {

/// The derived operations over a pre-operad backend with a fixed μ ∈ C².
/// Backend supplies Element, compose(a, b, i), zero(degree) and unit().
template <class Backend>
class Calculus {
 public:
  using Element = typename Backend::Element;

  Calculus(Backend backend, Element mu, Canary canary = Canary::kNone)
      : backend_(std::move(backend)), mu_(std::move(mu)), canary_(canary) {
    if (mu_.degree() != 2) throw Error(ErrorCode::kInvalidDegree, "mu must have degree 2");
  }

  const Backend& backend() const noexcept { return backend_; }
  const Element& mu() const noexcept { return mu_; }
  Canary canary() const noexcept { return canary_; }

  Element compose(const Element& f, const Element& g, int i) const { return backend_.compose(f, g, i); }
  Element zero(int degree) const { return backend_.zero(degree); }
  Element unit() const { return backend_.unit(); }

  /// (-1)^f (μ ∘_0 f) ∘_f g
  Element cup(const Element& f, const Element& g) const {
    long long e = f.degree();
    if (canary_ == Canary::kCupSignFlip) ++e;
    return signed_by(e, compose(compose(mu_, f, 0), g, f.degree()));
  }

  /// Σ_{i=0}^{|f|} f ∘_i g
  Element bullet(const Element& f, const Element& g) const {
    require_positive(f, "bullet");
    Element out = zero(f.degree() + g.degree() - 1);
    for (int i = 0; i <= f.degree() - 1; ++i) out = out + compose(f, g, i);
    return out;
  }

  /// f•g - (-1)^{|f||g|} g•f
  Element bracket(const Element& f, const Element& g) const {
    require_positive(f, "bracket");
    require_positive(g, "bracket");
    return bullet(f, g) - signed_by(shift(f) * shift(g), bullet(g, f));
  }

  /// δf = -(f•μ) + (-1)^{|f|} μ•f
  Element delta(const Element& f) const {
    require_positive(f, "delta");
    return signed_by(shift(f), bullet(mu_, f)) - bullet(f, mu_);
  }

  /// (h•f)•g - h•(f•g)
  Element associator(const Element& h, const Element& f, const Element& g) const {
    require_positive(h, "associator");
    require_positive(f, "associator");
    return bullet(bullet(h, f), g) - bullet(h, bullet(f, g));
  }

  /// Σ_{(i,j)∈G} (h ∘_i f) ∘_j g
  Element tribraces(const Element& h, const Element& f, const Element& g) const {
    require_positive(h, "tribraces");
    Element out = zero(h.degree() + f.degree() + g.degree() - 2);
    for (const auto& p : scope_regions(h.degree(), f.degree(), canary_).g.points) {
      out = out + compose(compose(h, f, p[0]), g, p[1]);
    }
    return out;
  }

  /// Σ_{(i,j,k)∈T} ((h ∘_i f) ∘_j g) ∘_k b
  Element tetrabraces(const Element& h, const Element& f, const Element& g, const Element& b) const {
    Element out = zero(h.degree() + f.degree() + g.degree() + b.degree() - 3);
    for (const auto& p : ground_tetrahedron(h.degree(), f.degree(), g.degree()).points) {
      out = out + c3(h, f, g, b, p[0], p[1], p[2]);
    }
    return out;
  }

  /// δ(f•g) - f•δg - (-1)^{|g|} δf•g
  Element dev_bullet(const Element& f, const Element& g) const {
    require_positive(g, "dev_bullet");
    return delta(bullet(f, g)) - bullet(f, delta(g)) - signed_by(shift(g), bullet(delta(f), g));
  }

  Element dev_tribraces(const Element& h, const Element& f, const Element& g) const {
    require_positive(f, "dev_tribraces");
    require_positive(g, "dev_tribraces");
    return delta(tribraces(h, f, g)) - tribraces(h, f, delta(g)) - signed_by(shift(g), tribraces(h, delta(f), g)) -
           signed_by(shift(g) + shift(f), tribraces(delta(h), f, g));
  }

  Element dev_tetrabraces(const Element& h, const Element& f, const Element& g, const Element& b) const {
    for (const Element* x : {&h, &f, &g, &b}) require_positive(*x, "dev_tetrabraces");
    const long long sb = shift(b), sg = shift(g), sf = shift(f);
    return delta(tetrabraces(h, f, g, b)) - tetrabraces(h, f, g, delta(b)) -
           signed_by(sb, tetrabraces(h, f, delta(g), b)) - signed_by(sb + sg, tetrabraces(h, delta(f), g, b)) -
           signed_by(sb + sg + sf, tetrabraces(delta(h), f, g, b));
  }

  /// ((h ∘_i f) ∘_j g) ∘_k b
  Element c3(const Element& h, const Element& f, const Element& g, const Element& b, int i, int j, int k) const {
    return compose(compose(compose(h, f, i), g, j), b, k);
  }

  /// The auxiliary variables Γ, Γ', Γ'', Γ''' at (i, j, k). Defined on T'
  /// and on the boundary face belonging to the kind; kIndexOutOfDomain
  /// elsewhere.
  Element aux_gamma(GammaKind kind, const Element& h, const Element& f, const Element& g, const Element& b,
                    const Point& p) const {
    for (const Element* x : {&h, &f, &g, &b}) require_positive(*x, "aux_gamma");
    if (!in_gamma_domain(kind, h.degree(), f.degree(), g.degree(), p)) {
      throw Error(ErrorCode::kIndexOutOfDomain, to_string(kind) + " at (" + std::to_string(p[0]) + "," +
                                                    std::to_string(p[1]) + "," + std::to_string(p[2]) + ")");
    }
    const int i = p[0], j = p[1], k = p[2];
    const int fd = f.degree();
    const long long sh = shift(h), sf = shift(f), sg = shift(g), sb = shift(b);
    const long long s3 = sf + sg + sb;
    Element out = zero(h.degree() + fd + g.degree() + b.degree() - 2);
    auto mu_sum = [&](int from, int to, int ii, int jj, int kk) {
      Element acc = zero(out.degree());
      for (int s = from; s <= to; ++s) acc = acc + c3(compose(h, mu_, s), f, g, b, ii, jj, kk);
      return signed_by(s3, acc);
    };
    switch (kind) {
      case GammaKind::kGamma:
        out = -signed_by(sh + sf + sg + sb, c3(cup(unit(), h), f, g, b, i, j, k)) - mu_sum(0, i - 1, i, j, k);
        break;
      case GammaKind::kGamma1:
        out = -mu_sum(i - 1, j - fd, i - 1, j, k);
        break;
      case GammaKind::kGamma2:
        out = -mu_sum(j - fd, k - fd - static_cast<int>(sg), i - 1, j - 1, k);
        break;
      case GammaKind::kGamma3:
        out = -mu_sum(k - fd - static_cast<int>(sg), static_cast<int>(sh), i - 1, j - 1, k - 1) -
              signed_by(s3, c3(cup(h, unit()), f, g, b, i - 1, j - 1, k - 1));
        break;
    }
    return out;
  }

  /// Γ at (i+1, j+1, k+1) for (i, j, k) in the ground tetrahedron, written in
  /// terms of the unshifted compositions. Agrees with aux_gamma there.
  Element shifted_gamma(GammaKind kind, const Element& h, const Element& f, const Element& g, const Element& b,
                        const Point& p) const {
    if (!ground_tetrahedron(h.degree(), f.degree(), g.degree()).contains(p)) {
      throw Error(ErrorCode::kIndexOutOfDomain, "shifted " + to_string(kind) + " outside the ground tetrahedron");
    }
    const int i = p[0], j = p[1], k = p[2];
    const int fd = f.degree(), gd = g.degree();
    const long long sh = shift(h), sf = shift(f), sg = shift(g), sb = shift(b);
    const long long s3 = sf + sg + sb;
    const Element I = unit();
    auto mu_sum = [&](int from, int to, int ii, int jj, int kk) {
      Element acc = zero(h.degree() + fd + gd + b.degree() - 2);
      for (int s = from; s <= to; ++s) acc = acc + c3(compose(h, mu_, s), f, g, b, ii, jj, kk);
      return signed_by(s3, acc);
    };
    switch (kind) {
      case GammaKind::kGamma:
        return -signed_by(sh + sf + sg + sb, cup(I, c3(h, f, g, b, i, j, k))) - mu_sum(0, i - 1, i + 1, j + 1, k + 1) +
               signed_by(s3, c3(h, cup(I, f), g, b, i, j + 1, k + 1));
      case GammaKind::kGamma1:
        return signed_by(sg + sb, c3(h, cup(f, I), g, b, i, j + 1, k + 1)) - mu_sum(i + 1, j - fd, i, j + 1, k + 1) +
               signed_by(sg + sb, c3(h, f, cup(I, g), b, i, j, k + 1));
      case GammaKind::kGamma2:
        return signed_by(sb, c3(h, f, cup(g, I), b, i, j, k + 1)) -
               mu_sum(j - static_cast<int>(sf) + 1, k - static_cast<int>(sf) - gd, i, j, k + 1) +
               signed_by(sb, c3(h, f, g, cup(I, b), i, j, k));
      case GammaKind::kGamma3:
        return c3(h, f, g, cup(b, I), i, j, k) -
               mu_sum(k - static_cast<int>(sf) - static_cast<int>(sg) + 1, static_cast<int>(sh), i, j, k) -
               cup(c3(h, f, g, b, i, j, k), I);
    }
    throw std::logic_error("unhandled GammaKind");
  }

  /// The closed form of a Γ kind on its boundary face.
  Element boundary_closed_form(GammaKind kind, const Element& h, const Element& f, const Element& g,
                               const Element& b, const Point& p) const {
    if (!boundary_face(kind, h.degree(), f.degree(), g.degree()).contains(p)) {
      throw Error(ErrorCode::kIndexOutOfDomain, to_string(kind) + " closed form off its face");
    }
    const int i = p[0], j = p[1], k = p[2];
    const int fd = f.degree(), bd = b.degree();
    const long long sh = shift(h), sg = shift(g), sb = shift(b);
    switch (kind) {
      case GammaKind::kGamma:
        return signed_by(sg + bd + sh * fd, cup(f, compose(compose(h, g, j - fd), b, k - fd)));
      case GammaKind::kGamma1:
        return signed_by(sb + sg, compose(compose(h, cup(f, g), i - 1), b, k));
      case GammaKind::kGamma2:
        return signed_by(sb, compose(compose(h, f, i - 1), cup(g, b), j - 1));
      case GammaKind::kGamma3:
        return signed_by(bd, cup(compose(compose(h, f, i - 1), g, j - 1), b));
    }
    throw std::logic_error("unhandled GammaKind");
  }

  static long long shift(const Element& x) { return x.degree() - 1; }

  static Element signed_by(long long exponent, const Element& x) { return sign_of(exponent) < 0 ? -x : x; }

 private:
  static void require_positive(const Element& x, const char* op) {
    if (x.degree() < 1) {
      throw Error(ErrorCode::kInvalidDegree, std::string(op) + " needs degree >= 1, got " + std::to_string(x.degree()));
    }
  }

  Backend backend_;
  Element mu_;
  Canary canary_;
};

}  // namespace tetra
