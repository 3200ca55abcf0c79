#include "tetra/calculus/domains.hpp"

#include <algorithm>

#include "tetra/error.hpp"

namespace tetra {

namespace {

// Coordinates in which the envelope is the simplex 0 <= a <= b <= c <= h+1.
struct Simplex {
  int a, b, c;
};

Simplex to_simplex(const Point& p, int deg_f, int deg_g) {
  return {p[0], p[1] - deg_f + 1, p[2] - deg_f - deg_g + 2};
}

Point from_simplex(int a, int b, int c, int deg_f, int deg_g) {
  return {a, b + deg_f - 1, c + deg_f + deg_g - 2};
}

int degeneracies(const Simplex& s, int deg_h) {
  return int{s.a == 0} + int{s.a == s.b} + int{s.b == s.c} + int{s.c == deg_h + 1};
}

bool in_envelope(const Simplex& s, int deg_h) { return 0 <= s.a && s.a <= s.b && s.b <= s.c && s.c <= deg_h + 1; }

bool in_shifted(const Simplex& s, int deg_h) { return 1 <= s.a && s.a < s.b && s.b < s.c && s.c <= deg_h; }

bool on_face(GammaKind kind, const Simplex& s, int deg_h) {
  if (!in_envelope(s, deg_h) || degeneracies(s, deg_h) != 1) return false;
  switch (kind) {
    case GammaKind::kGamma: return s.a == 0;
    case GammaKind::kGamma1: return s.a == s.b;
    case GammaKind::kGamma2: return s.b == s.c;
    case GammaKind::kGamma3: return s.c == deg_h + 1;
  }
  return false;
}

LatticeDomain make(DomainKind kind, std::vector<int> degrees, int dims) {
  return LatticeDomain{kind, std::move(degrees), dims, {}};
}

void finish(LatticeDomain& d) {
  std::sort(d.points.begin(), d.points.end());
  d.points.erase(std::unique(d.points.begin(), d.points.end()), d.points.end());
}

template <class Pred>
LatticeDomain simplex_domain(DomainKind kind, int h, int f, int g, int b, Pred keep) {
  auto d = make(kind, {h, f, g, b}, 3);
  for (int c = 0; c <= h + 1; ++c) {
    for (int bb = 0; bb <= c; ++bb) {
      for (int a = 0; a <= bb; ++a) {
        const Simplex s{a, bb, c};
        if (keep(s)) d.points.push_back(from_simplex(a, bb, c, f, g));
      }
    }
  }
  finish(d);
  return d;
}

}  // namespace

std::string to_string(Canary canary) {
  switch (canary) {
    case Canary::kNone: return "none";
    case Canary::kCupSignFlip: return "cup-sign";
    case Canary::kDropKoszulSign: return "drop-koszul";
    case Canary::kGRangeOffByOne: return "g-range";
  }
  return "?";
}

Canary parse_canary(std::string_view name) {
  for (auto c : {Canary::kNone, Canary::kCupSignFlip, Canary::kDropKoszulSign, Canary::kGRangeOffByOne}) {
    if (to_string(c) == name) return c;
  }
  throw Error(ErrorCode::kBadConfig, "unknown canary '" + std::string(name) + "'");
}

std::string to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::kScopeB: return "scopeB";
    case DomainKind::kScopeA: return "scopeA";
    case DomainKind::kScopeG: return "scopeG";
    case DomainKind::kGroundT: return "groundT";
    case DomainKind::kShiftedT: return "shiftedT'";
    case DomainKind::kEnvelope: return "envelopeT'_env";
    case DomainKind::kTruncatedEnvelope: return "truncatedEnvelope";
    case DomainKind::kBoundaryTruncated: return "boundaryTruncated";
  }
  return "?";
}

std::string to_string(GammaKind kind) {
  switch (kind) {
    case GammaKind::kGamma: return "Gamma";
    case GammaKind::kGamma1: return "Gamma'";
    case GammaKind::kGamma2: return "Gamma''";
    case GammaKind::kGamma3: return "Gamma'''";
  }
  return "?";
}

bool LatticeDomain::contains(const Point& p) const { return std::binary_search(points.begin(), points.end(), p); }

ScopeRegions scope_regions(int deg_h, int deg_f, Canary canary) {
  if (deg_h < 1) throw Error(ErrorCode::kInvalidDegree, "scope needs deg h >= 1");
  const int h = deg_h - 1;  // |h|
  const int f = deg_f - 1;  // |f|
  const int g_start = canary == Canary::kGRangeOffByOne ? deg_f - 1 : deg_f;
  ScopeRegions r{make(DomainKind::kScopeB, {deg_h, deg_f}, 2), make(DomainKind::kScopeA, {deg_h, deg_f}, 2),
                 make(DomainKind::kScopeG, {deg_h, deg_f}, 2)};
  for (int i = 1; i <= h; ++i)
    for (int j = 0; j <= i - 1; ++j) r.b.points.push_back({i, j, 0});
  for (int i = 0; i <= h; ++i)
    for (int j = i; j <= i + f; ++j) r.a.points.push_back({i, j, 0});
  for (int i = 0; i <= h - 1; ++i)
    for (int j = std::max(0, i + g_start); j <= f + h; ++j) r.g.points.push_back({i, j, 0});
  finish(r.b);
  finish(r.a);
  finish(r.g);
  return r;
}

LatticeDomain ground_tetrahedron(int deg_h, int deg_f, int deg_g) {
  auto d = make(DomainKind::kGroundT, {deg_h, deg_f, deg_g}, 3);
  for (int i = 0; i <= deg_h - 3; ++i)
    for (int j = i + deg_f; j <= deg_h - 3 + deg_f; ++j)
      for (int k = j + deg_g; k <= deg_h - 3 + deg_f + deg_g; ++k) d.points.push_back({i, j, k});
  return d;
}

std::vector<Point> envelope_edges(int deg_h, int deg_f, int deg_g) {
  const int h = deg_h, f = deg_f, g = deg_g;
  const int sf = f - 1, sg = g - 1;
  std::vector<Point> e;
  for (int i = 0; i <= h + 1; ++i) e.push_back({i, i + sf, h + f + sg});
  for (int k = sf + sg; k <= h + f + sg; ++k) e.push_back({0, sf, k});
  for (int i = 0; i <= h + 1; ++i) e.push_back({i, i + sf, i + sf + sg});
  for (int j = sf; j <= h + f; ++j) e.push_back({0, j, h + f + sg});
  for (int i = 0; i <= h + 1; ++i) e.push_back({i, h + f, h + f + sg});
  for (int j = sf; j <= h + f; ++j) e.push_back({0, j, j + sg});
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return e;
}

EnvelopeDomains envelope_domains(int deg_h, int deg_f, int deg_g, int deg_b) {
  const int h = deg_h, f = deg_f, g = deg_g;
  EnvelopeDomains out{
      simplex_domain(DomainKind::kShiftedT, h, f, g, deg_b, [&](const Simplex& s) { return in_shifted(s, h); }),
      simplex_domain(DomainKind::kEnvelope, h, f, g, deg_b, [](const Simplex&) { return true; }),
      make(DomainKind::kTruncatedEnvelope, {h, f, g, deg_b}, 3),
      make(DomainKind::kBoundaryTruncated, {h, f, g, deg_b}, 3),
  };
  const auto edges = envelope_edges(h, f, g);
  for (const auto& p : out.envelope.points) {
    if (std::binary_search(edges.begin(), edges.end(), p)) continue;
    out.truncated.points.push_back(p);
    if (!out.shifted.contains(p)) out.boundary.points.push_back(p);
  }
  return out;
}

LatticeDomain boundary_face(GammaKind kind, int deg_h, int deg_f, int deg_g) {
  return simplex_domain(DomainKind::kBoundaryTruncated, deg_h, deg_f, deg_g, 0,
                        [&](const Simplex& s) { return on_face(kind, s, deg_h); });
}

bool in_gamma_domain(GammaKind kind, int deg_h, int deg_f, int deg_g, const Point& p) {
  const auto s = to_simplex(p, deg_f, deg_g);
  return in_shifted(s, deg_h) || on_face(kind, s, deg_h);
}

std::vector<EdgeFamily> boundary_edge_values(int deg_h, int deg_f, int deg_g) {
  const int h = deg_h, f = deg_f, g = deg_g;
  const int sh = h - 1, sf = f - 1, sg = g - 1;
  std::vector<EdgeFamily> out(6);
  out[0].kind = GammaKind::kGamma;
  for (int j = f; j <= sh + sf; ++j) out[0].points.push_back({0, j, sh + sf + g});
  out[1].kind = GammaKind::kGamma1;
  for (int k = f + g; k <= sh + sf + sg; ++k) out[1].points.push_back({1, f, k});
  out[2].kind = GammaKind::kGamma1;
  for (int i = 1; i <= sh; ++i) out[2].points.push_back({i, i + sf, sh + sf + g});
  out[3].kind = GammaKind::kGamma2;
  for (int j = f + 1; j <= sh + sf; ++j) out[3].points.push_back({1, j, j + sg});
  out[4].kind = GammaKind::kGamma2;
  for (int i = 2; i <= sh - 1; ++i) out[4].points.push_back({i, i + f, i + f + sg});
  out[5].kind = GammaKind::kGamma2;
  for (int i = 1; i <= sh; ++i) out[5].points.push_back({i, sh + f, h + sf + sg});
  return out;
}

}  // namespace tetra
