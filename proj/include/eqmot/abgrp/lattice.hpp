#pragma once

#include "eqmot/abgrp/fg_group.hpp"
#include "eqmot/abgrp/integer_matrix.hpp"

#include <vector>

namespace eqmot {

// Canonical generators of ker(d_out)/im(d_in) inside the ambient lattice Z^n.
// Summand i of `group` is generated by column i of `generators`; the
// coordinates of a cycle x are coordinate_map * x, reduced modulo the orders.
struct HomologyBasis {
  FgAbelianGroup group;
  IntegerMatrix generators;
  IntegerMatrix coordinate_map;

  std::vector<Integer> coordinates(const std::vector<Integer>& cycle) const;
};

HomologyBasis homology_basis(const IntegerMatrix& d_in, const IntegerMatrix& d_out);

// columns spanning ker(a) as a saturated sublattice
IntegerMatrix kernel_basis(const IntegerMatrix& a);

// whether every column of `small` lies in the lattice spanned by the columns of `big`
bool lattice_contains(const IntegerMatrix& big, const IntegerMatrix& small);

// span(big) / span(small); requires span(small) ⊆ span(big)
FgAbelianGroup lattice_quotient(const IntegerMatrix& big, const IntegerMatrix& small);

// A homomorphism between groups in canonical form, given on canonical summands:
// column j is the image of the generator of summand j of the source.
class GroupHom {
 public:
  GroupHom(FgAbelianGroup source, FgAbelianGroup target, IntegerMatrix matrix);

  static GroupHom identity(const FgAbelianGroup& g);
  static GroupHom zero(const FgAbelianGroup& source, const FgAbelianGroup& target);

  const FgAbelianGroup& source() const { return source_; }
  const FgAbelianGroup& target() const { return target_; }
  const IntegerMatrix& matrix() const { return matrix_; }

  FgAbelianGroup kernel() const;
  FgAbelianGroup image() const;
  FgAbelianGroup cokernel() const;

  bool is_zero() const;
  bool is_injective() const { return kernel().is_zero(); }
  bool is_surjective() const { return cokernel().is_zero(); }
  bool is_isomorphism() const { return is_injective() && is_surjective(); }
  // same group on both sides and the map is n times the identity
  bool is_multiplication_by(const Integer& n) const;

  GroupHom compose_after(const GroupHom& first) const;  // this ∘ first

  // x-parts of a lattice basis of the preimage of the relations of the target
  IntegerMatrix kernel_generators() const;
  // columns spanning image + target relations, in target coordinates
  IntegerMatrix image_generators() const;

 private:
  FgAbelianGroup source_;
  FgAbelianGroup target_;
  IntegerMatrix matrix_;
};

// relation matrix diag(orders) of a canonical group
IntegerMatrix relation_matrix(const FgAbelianGroup& g);

// exactness of A --in--> B --out--> C at B
bool is_exact_at(const GroupHom& in, const GroupHom& out);

}  // namespace eqmot
