#pragma once

#include "eqmot/abgrp/integer_matrix.hpp"

#include <vector>

namespace eqmot {

// U * A * V = D with U, V unimodular; the inverses are tracked alongside so
// that lattice coordinates can be read off without a second inversion.
struct SmithForm {
  IntegerMatrix left;
  IntegerMatrix diagonal;
  IntegerMatrix right;
  IntegerMatrix left_inverse;
  IntegerMatrix right_inverse;
  std::size_t rank = 0;

  // nonzero diagonal entries d_1 | d_2 | ... (units included)
  std::vector<Integer> nonzero_diagonal() const;
};

SmithForm smith_normal_form(const IntegerMatrix& a);

// Same reduction without transforms; returns the nonzero diagonal entries.
std::vector<Integer> smith_diagonal(const IntegerMatrix& a);

std::size_t rank(const IntegerMatrix& a);
std::size_t rank_mod_prime(const IntegerMatrix& a, unsigned long p);
bool is_prime(unsigned long m);

// Canonical invariant factor chain from an arbitrary list of cyclic orders
// (0 stands for a free summand, 1 for the trivial group).  Returns the
// divisibility chain of the torsion part and the free rank.
void canonical_cyclic_decomposition(const std::vector<Integer>& orders, std::vector<Integer>& torsion,
                                    std::size_t& free_rank);

}  // namespace eqmot
