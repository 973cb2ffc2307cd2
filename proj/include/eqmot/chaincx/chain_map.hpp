#pragma once

#include "eqmot/chaincx/cochain_complex.hpp"

#include <map>
#include <memory>

namespace eqmot {

using ComplexPtr = std::shared_ptr<const CochainComplex>;

class ChainMap {
 public:
  ChainMap(ComplexPtr source, ComplexPtr target, std::map<int, IntegerMatrix> components);

  static ChainMap identity(ComplexPtr c);
  static ChainMap zero(ComplexPtr source, ComplexPtr target);
  static ChainMap scalar(ComplexPtr c, const Integer& n);

  const CochainComplex& source() const { return *source_; }
  const CochainComplex& target() const { return *target_; }
  const ComplexPtr& source_ptr() const { return source_; }
  const ComplexPtr& target_ptr() const { return target_; }
  IntegerMatrix component(int i) const;  // target.rank(i) x source.rank(i)

  void validate() const;  // throws ComplexError naming the first failing square
  bool is_valid() const;

  ChainMap compose_after(const ChainMap& first) const;  // this ∘ first
  ChainMap operator+(const ChainMap& other) const;
  ChainMap scaled(const Integer& n) const;
  bool operator==(const ChainMap& other) const;

 private:
  ComplexPtr source_;
  ComplexPtr target_;
  std::map<int, IntegerMatrix> components_;
};

// Cone^i = T^i ⊕ S^{i+1}, d = [[d_T, f], [0, -d_S]]
CochainComplex cone(const ChainMap& f);
// T -> Cone(f) and Cone(f) -> S, the latter landing in degree i+1 of S
ChainMap cone_inclusion(const ChainMap& f, ComplexPtr cone_complex);
IntegerMatrix cone_projection(const ChainMap& f, int i);

// Free model of C ⊗ Z/m: the cone of multiplication by m.
CochainComplex mod_m_model(const CochainComplex& c, unsigned long m);
ChainMap mod_m_model(const ChainMap& f, unsigned long m);

// the map H^i(source) -> H^i(target) induced by a degreewise matrix
GroupHom induced_hom(const HomologyBasis& source, const HomologyBasis& target, const IntegerMatrix& chain_matrix);
// f_* : H^i(source; Z/m) -> H^i(target; Z/m), m = 0 or prime
GroupHom induced_map(const ChainMap& f, int i, unsigned long m = 0);

struct ConeSequenceReport {
  bool exact = true;
  std::string failure;  // first non-exact node, empty when exact
};
// exactness of ... -> H^i(S) -> H^i(T) -> H^i(Cone) -> H^{i+1}(S) -> ... over the whole support
ConeSequenceReport check_cone_sequence(const ChainMap& f);

}  // namespace eqmot
