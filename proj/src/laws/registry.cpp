#include <algorithm>

#include "tetra/error.hpp"
#include "tetra/laws/laws.hpp"

namespace tetra::laws {

const std::vector<LawInfo>& list_laws() {
  static const std::vector<LawInfo> laws = {
      {"L01-cuppro", "μ-compositions expressed through cup products",
       "μ∘_0 f = (-1)^f f∪𝕀;  μ∘_1 f = -𝕀∪f;  f∪g = -(-1)^{|f|g} (μ∘_1 g)∘_0 f", {"f", "g"}},
      {"L02-lemma-cup", "partial compositions into a cup product",
       "(f∪g)∘_j h = (-1)^{g|h|}(f∘_j h)∪g for j <= |f|, f∪(g∘_{j-f} h) for j >= f", {"f", "g", "h"}},
      {"L03-right-derivation", "right translations of • are derivations of ∪",
       "(f∪g)•h = f∪(g•h) + (-1)^{|h|g} (f•h)∪g", {"f", "g", "h"}},
      {"L04-delta-expansion", "pre-coboundary through cup and total composition",
       "-δf = f∪𝕀 + f•μ + (-1)^{|f|} 𝕀∪f", {"f"}},
      {"L05-bullet-deviation", "derivation deviation of δ over •",
       "(-1)^{|g|} dev_• δ(f⊗g) = f∪g - (-1)^{fg} g∪f", {"f", "g"}},
      {"L06-getzler-gerstenhaber", "associator of • through tribraces, and its symmetry",
       "(h,f,g) = {h,f,g} + (-1)^{|f||g|}{h,g,f};  (h,f,g) = (-1)^{|f||g|}(h,g,f)", {"h", "f", "g"}},
      {"L07-tribrace-deviation", "derivation deviation of δ over tribraces, • and bracket forms",
       "(-1)^{|g|} dev_{...} δ(h⊗f⊗g) = (h•f)∪g + (-1)^{|h|f} f∪(h•g) - h•(f∪g), same with [,] in place of •",
       {"h", "f", "g"}},
      {"L08-main-theorem", "derivation deviation of δ over tetrabraces",
       "(-1)^{|b|} dev δ(h⊗f⊗g⊗b) = {h,f,g}∪b - {h,f,g∪b} - (-1)^{|g|}{h,f∪g,b} + (-1)^{|h|f+|g|} f∪{h,g,b}",
       {"h", "f", "g", "b"}, Applicability::kBoth, true},
      {"L09-lemma-first", "δ of a triple composition through the Γ variables, pointwise on T",
       "δC - C(δb) - (-1)^{|b|}((h∘_i f)∘_j δg)∘_{k+1}b - (-1)^{|b|+|g|}((h∘_i δf)∘_{j+1}g)∘_{k+1}b = ΣΓ(i+1,j+1,k+1)",
       {"h", "f", "g", "b"}, Applicability::kBoth, true},
      {"L10-lemma-second", "compositions of δh through the Γ variables, pointwise",
       "(-1)^{|f|+|g|+|b|}((δh∘_i f)∘_j g)∘_k b = Γ_ijk + Γ'_{i+1,j,k} + Γ''_{i+1,j+1,k} + Γ'''_{i+1,j+1,k+1}",
       {"h", "f", "g", "b"}, Applicability::kBoth, true},
      {"L11-boundary-lemma", "closed forms of Γ on the four boundary faces and six edges",
       "Γ_0jk = (-1)^{|g|+b+|h|f} f∪((h∘_{j-f}g)∘_{k-f}b), and the Γ', Γ'', Γ''' analogues",
       {"h", "f", "g", "b"}, Applicability::kBoth, true},
      {"L12-delta-squared", "δ squares to zero for an associative μ",
       "μ•μ = 0 and δδf = 0", {"f"}, Applicability::kEndoOnly},
      {"L13-degree-bookkeeping", "degrees of the derived operations",
       "deg ∪ = f+g, deg • = f+g-1, deg {,,} = h+f+g-2, deg {,,,} = h+f+g+b-3, deg δf = f+1",
       {"h", "f", "g", "b"}},
      {"L14-cross-backend-morphism", "evaluation of free words in End(A) commutes with the operations",
       "ev(x∘_i y) = ev(x)∘_i ev(y), ev(x∪y) = ev(x)∪ev(y), ev(x•y) = ev(x)•ev(y), ev(δx) = δ ev(x)",
       {"x", "y", "z", "w"}, Applicability::kCross},
      {"L15-composition-relations", "the three cases of (h∘_i f)∘_j g over the whole scope",
       "B: (-1)^{|f||g|}(h∘_j g)∘_{i+|g|}f;  A: h∘_i(f∘_{j-i}g);  G: (-1)^{|f||g|}(h∘_{j-|f|}g)∘_i f",
       {"h", "f", "g"}},
      {"L16-unit-laws", "two-sided unit", "𝕀∘_0 f = f = f∘_i 𝕀 for 0 <= i <= |f|", {"f"}},
      {"L17-bg-equivalence", "the B and G cases agree through the mirrored index pair",
       "(i,j) ∈ B(h,f) ↦ (j, i+|g|) ∈ G(h,g) is a bijection and both relations hold", {"h", "f", "g"}},
      {"L18-scope-partition", "the scope splits into B, A and G",
       "{0<=i<=|h|, 0<=j<=|f|+|h|} = B ⊔ A ⊔ G", {"h", "f"}},
      {"L19-bracket-antisymmetry", "graded antisymmetry of the bracket and the δ special case",
       "[f,g] + (-1)^{|f||g|}[g,f] = 0;  [f,μ] = -δf", {"f", "g"}},
      {"L20-recap-vs-shifted", "two formulas for Γ agree on T'",
       "Γ_{i+1,j+1,k+1} from the shifted definition equals the uniform formula", {"h", "f", "g", "b"},
       Applicability::kBoth, true},
      {"L21-envelope-partition", "lattice bookkeeping around T'",
       "T' ⊆ truncated ⊆ T'_env, truncated = T' ⊔ boundary, boundary = ⊔ faces, T' = T + (1,1,1)",
       {"h", "f", "g", "b"}, Applicability::kBoth, true},
  };
  return laws;
}

const LawInfo& find_law(std::string_view id) {
  const auto& laws = list_laws();
  auto it = std::find_if(laws.begin(), laws.end(), [&](const LawInfo& l) { return l.id == id; });
  if (it == laws.end()) throw Error(ErrorCode::kUnknownLaw, "'" + std::string(id) + "'");
  return *it;
}

}  // namespace tetra::laws
