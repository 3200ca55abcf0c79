#pragma once

#include <array>
#include <string>
#include <vector>

#include "tetra/calculus/canary.hpp"

namespace tetra {

using Point = std::array<int, 3>;

enum class DomainKind {
  kScopeB,
  kScopeA,
  kScopeG,
  kGroundT,
  kShiftedT,
  kEnvelope,
  kTruncatedEnvelope,
  kBoundaryTruncated,
};

enum class GammaKind { kGamma, kGamma1, kGamma2, kGamma3 };

inline constexpr std::array<GammaKind, 4> kGammaKinds{GammaKind::kGamma, GammaKind::kGamma1, GammaKind::kGamma2,
                                                      GammaKind::kGamma3};

std::string to_string(DomainKind kind);
std::string to_string(GammaKind kind);

/// An explicit, sorted set of lattice points. Pairs (i, j) use the first two
/// coordinates and leave the third at zero.
struct LatticeDomain {
  DomainKind kind;
  std::vector<int> degrees;
  int dims = 3;
  std::vector<Point> points;

  bool empty() const noexcept { return points.empty(); }
  std::size_t size() const noexcept { return points.size(); }
  bool contains(const Point& p) const;
};

struct ScopeRegions {
  LatticeDomain b, a, g;
};

/// Index pairs (i, j) for (h ∘_i f) ∘_j g split by the relation case.
/// kInvalidDegree for deg h < 1.
ScopeRegions scope_regions(int deg_h, int deg_f, Canary canary = Canary::kNone);

/// 0 <= i <= j-f <= k-f-g <= h-3; empty when deg h < 3.
LatticeDomain ground_tetrahedron(int deg_h, int deg_f, int deg_g);

struct EnvelopeDomains {
  LatticeDomain shifted;    // T'
  LatticeDomain envelope;   // T'_env
  LatticeDomain truncated;  // T'_env without the six edges
  LatticeDomain boundary;   // truncated \ T'
};

EnvelopeDomains envelope_domains(int deg_h, int deg_f, int deg_g, int deg_b);

/// The six edge families removed from the envelope, as explicit points
/// (possibly outside the envelope for tiny degrees; intersect before use).
std::vector<Point> envelope_edges(int deg_h, int deg_f, int deg_g);

/// The face of the truncated boundary on which a Γ kind has a closed form:
/// Γ on i = 0, Γ' on j = i+|f|, Γ'' on k = j+|g|, Γ''' on k = |h|+f+g.
LatticeDomain boundary_face(GammaKind kind, int deg_h, int deg_f, int deg_g);

/// Where aux_gamma of the given kind is defined: T' together with its face.
bool in_gamma_domain(GammaKind kind, int deg_h, int deg_f, int deg_g, const Point& p);

struct EdgeFamily {
  GammaKind kind;
  std::vector<Point> points;
};

/// The six boundary edge families on which the closed forms are fixed by
/// definition, each tagged with the Γ kind it belongs to.
std::vector<EdgeFamily> boundary_edge_values(int deg_h, int deg_f, int deg_g);

}  // namespace tetra
