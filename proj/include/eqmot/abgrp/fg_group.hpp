#pragma once

#include "eqmot/abgrp/integer_matrix.hpp"

#include <string>
#include <vector>

namespace eqmot {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Z^r ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k with d_1 | d_2 | ... and every d_i >= 2.
// Summands are indexed torsion first (in chain order), then the free copies.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;
  FgAbelianGroup(std::size_t free_rank, std::vector<Integer> invariant_factors);

  // accepts any list of cyclic orders; 0 means Z, 1 is dropped
  static FgAbelianGroup from_cyclic_orders(const std::vector<Integer>& orders);
  static FgAbelianGroup free(std::size_t rank) { return FgAbelianGroup(rank, {}); }
  static FgAbelianGroup cyclic(const Integer& order) { return from_cyclic_orders({order}); }
  static FgAbelianGroup elementary(const Integer& p, std::size_t count);
  // parses the rendering grammar of to_string()
  static FgAbelianGroup parse(const std::string& text);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& invariant_factors() const { return torsion_; }
  std::size_t summand_count() const { return torsion_.size() + free_rank_; }
  // order of summand i (0 for a free summand)
  Integer summand_order(std::size_t i) const;
  std::vector<Integer> summand_orders() const;
  bool is_zero() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }

  FgAbelianGroup operator+(const FgAbelianGroup& other) const;  // direct sum
  bool operator==(const FgAbelianGroup& other) const {
    return free_rank_ == other.free_rank_ && torsion_ == other.torsion_;
  }
  bool operator!=(const FgAbelianGroup& other) const { return !(*this == other); }

  // "0", "Z", "Z^3", "Z/2", "(Z/2)^2", joined by " ⊕ " with free part first
  std::string to_string() const;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

// ker(d_out) / im(d_in); d_in : C^{i-1} -> C^i, d_out : C^i -> C^{i+1}
FgAbelianGroup cohomology_at(const IntegerMatrix& d_in, const IntegerMatrix& d_out);
FgAbelianGroup mod_m_cohomology_at(const IntegerMatrix& d_in, const IntegerMatrix& d_out, unsigned long m);
FgAbelianGroup cokernel(const IntegerMatrix& a);

FgAbelianGroup tensor_Z2_group(const FgAbelianGroup& g);
FgAbelianGroup two_torsion_group(const FgAbelianGroup& g);

}  // namespace eqmot
