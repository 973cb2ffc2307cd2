#include "eqmot/formal/axioms.hpp"

#include <algorithm>

namespace eqmot {

bool Axiom::holds_under(ProfileKind kind) const {
  return std::find(profiles.begin(), profiles.end(), kind) != profiles.end();
}

const AxiomBook& AxiomBook::standard() {
  using P = ProfileKind;
  const std::vector<P> every = {P::quadratically_closed, P::euclidean, P::formally_real, P::general};
  const std::vector<P> qc_or_euclidean = {P::quadratically_closed, P::euclidean};
  const std::vector<P> qc_or_real = {P::quadratically_closed, P::euclidean, P::formally_real};
  static const AxiomBook book({
      {"B-mot", "motivic cohomology of the base field in weights 0 and 1",
       "motivic cohomology of a field: H^{0,0}(k,\\mathbb{Z})=\\mathbb{Z}, H^{1,1}(k,\\mathbb{Z})=k^*", every},
      {"B-prop", "weight 1 column p = 1 of the integral table",
       "weight one, first column: H^{\\sigma,1}_{C_2}(k,\\mathbb{Z})=\\mathbb{Z}/2, "
       "H^{\\sigma+1,1}_{C_2}(k,\\mathbb{Z})=k^*/k^{*2}",
       every},
      {"B-sigma", "weight sigma column p = 1 of the integral table",
       "weight sigma, first column: H^{\\sigma,\\sigma}_{C_2}(k,\\mathbb{Z})=\\mathbb{Z}/2, "
       "H^{\\sigma+n,\\sigma}_{C_2}(k,\\mathbb{Z})=0 \\ (n\\neq 0)",
       every},
      {"B-nie", "decomposition along the diagonal a + 2qσ, b + qσ",
       "diagonal decomposition: H^{a+2q\\sigma,b+q\\sigma}_{C_2}(k,\\mathbb{Z})=\\oplus_{j=0}^{q-1}"
       "H^{a+2j,j+b}(k,\\mathbb{Z}/2)\\oplus H^{a+2q,b+q}(k,\\mathbb{Z})",
       every},
      {"B-uc", "split universal coefficient sequence",
       "universal coefficients: H^{V}(k,\\mathbb{Z}/2)\\simeq H^{V}(k,\\mathbb{Z})\\otimes\\mathbb{Z}/2\\oplus "
       "{_2H}^{V+1}(k,\\mathbb{Z})",
       every},
      {"A-comp", "the composite through the free orbit is multiplication by 2",
       "transfer composite: S^\\sigma\\to C_{2+}\\wedge S^1\\to S^\\sigma \\text{ induces } \\times 2", every},
      {"A-alpha", "the map k* -> H^{(1-p)+pσ} into a 2-torsion group is zero in the positive cone",
       "positive cone connecting map: \\alpha: k^*\\to\\mathbb{Z}/2,\\ \\alpha=0", qc_or_euclidean},
      {"A-alpha1", "the weight 1 map from a 2-torsion group into k* is zero in the negative cone",
       "negative cone, weight one: \\alpha_1: k^*/k^{*2}\\to k^*,\\ \\alpha_1=0", qc_or_real},
      {"A-tau", "the weight sigma map from a 2-torsion group into k* is zero in the negative cone",
       "negative cone, weight sigma: \\tau: k^*/k^{*2}\\to k^*,\\ \\tau=0", qc_or_real},
      {"A-delta-sq", "alpha: Z/2 -> k* is the inclusion of ±1, with cokernel k*2",
       "extension resolution: 0\\to\\mathbb{Z}/2\\to k^*\\xrightarrow{\\times 2}k^{*2}\\to 0,\\ "
       "H^{1,\\sigma}_{C_2}(k,\\mathbb{Z})=k^{*2}",
       every},
      {"A-vanish", "vanishing below the weight line",
       "vanishing: b+q<0,\\ b<0 \\Rightarrow H^{a+p\\sigma,b+q\\sigma}_{C_2}(X,\\mathbb{Z})=0", every},
      {"A-EC2", "Borel periodicity through EC_2",
       "Borel comparison: H^{a+p\\sigma,\\sigma}_{C_2}(\\mathbf{E}C_2,A)=H^{a+p\\sigma,\\sigma}_{C_2}(k,A)", every},
  });
  return book;
}

bool AxiomBook::contains(const std::string& id) const {
  return std::any_of(axioms_.begin(), axioms_.end(), [&](const Axiom& a) { return a.id == id; });
}

const Axiom& AxiomBook::get(const std::string& id) const {
  for (const auto& a : axioms_)
    if (a.id == id) return a;
  throw std::out_of_range("unknown axiom '" + id + "'");
}

bool AxiomBook::holds(const std::string& id, ProfileKind kind) const {
  return contains(id) && get(id).holds_under(kind);
}

}  // namespace eqmot
