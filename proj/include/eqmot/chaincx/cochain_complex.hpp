#pragma once

#include "eqmot/abgrp/fg_group.hpp"
#include "eqmot/abgrp/integer_matrix.hpp"
#include "eqmot/abgrp/lattice.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace eqmot {

class ComplexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bounded cochain complex of free abelian groups; d^i : C^i -> C^{i+1}.
// Construction checks shapes; validate() checks d^{i+1} d^i = 0.
class CochainComplex {
 public:
  CochainComplex() = default;
  CochainComplex(std::map<int, std::size_t> ranks, std::map<int, IntegerMatrix> differentials);

  static CochainComplex unit();  // Z in degree 0
  static CochainComplex from_json(const nlohmann::json& j);

  bool is_zero() const { return ranks_.empty(); }
  int min_degree() const;  // 0 for the zero complex
  int max_degree() const;
  std::size_t rank(int i) const;
  const std::map<int, std::size_t>& ranks() const { return ranks_; }
  // d^i as a rank(i+1) x rank(i) matrix (a zero matrix if none was given)
  IntegerMatrix differential(int i) const;
  const IntegerMatrix* stored_differential(int i) const;

  void validate() const;  // throws ComplexError naming the first failing square
  bool is_valid() const;
  long euler_characteristic() const;

  // m = 0 for integral coefficients, otherwise a prime
  FgAbelianGroup cohomology(int i, unsigned long m = 0) const;
  HomologyBasis homology_basis(int i) const;

  nlohmann::json to_json() const;
  bool operator==(const CochainComplex& other) const;

 private:
  std::map<int, std::size_t> ranks_;
  std::map<int, IntegerMatrix> differentials_;
};

CochainComplex tensor(const CochainComplex& c, const CochainComplex& d);

nlohmann::json matrix_to_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols);

}  // namespace eqmot
