#pragma once

#include "eqmot/chaincx/chain_map.hpp"
#include "eqmot/sigmacx/orbit.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace eqmot {

// Z_top(nσ) evaluated at the fixed point (orbit_type fixed) or at the free orbit.
struct SigmaSpec {
  int n = 0;
  OrbitType orbit_type = OrbitType::fixed;
};

// Basis bookkeeping: degree of subset size j is -j for n > 0 and +j for n < 0.
// Within a degree the basis is (subset, orbit) with subsets of {1..|n|} in
// lexicographic order and orbits in orbit_basis order.
class SigmaLayout {
 public:
  explicit SigmaLayout(SigmaSpec spec);

  const SigmaSpec& spec() const { return spec_; }
  unsigned size() const { return size_; }  // |n|
  int degree(unsigned j) const { return spec_.n >= 0 ? -static_cast<int>(j) : static_cast<int>(j); }
  // subset size living in degree d, or -1 outside the support
  int subset_size(int d) const;
  const std::vector<std::uint32_t>& subsets(unsigned j) const { return subsets_[j]; }
  std::size_t subset_index(std::uint32_t mask) const { return subset_index_.at(mask); }
  std::size_t rank(unsigned j) const;
  std::size_t index(std::uint32_t mask, std::uint32_t orbit_bits) const;
  std::string label(int d, std::size_t index) const;  // e.g. "{1,3}[01]"

 private:
  SigmaSpec spec_;
  unsigned size_;
  std::vector<std::vector<std::uint32_t>> subsets_;
  std::unordered_map<std::uint32_t, std::size_t> subset_index_;
};

std::vector<int> subset_elements(std::uint32_t mask);

CochainComplex build_sigma_complex(const SigmaSpec& spec);

// transfer (orbit-sum) free -> fixed, restriction (orbit-expansion) fixed -> free,
// and the involution of the free complex flipping the distinguished coordinate
ChainMap transfer_map(ComplexPtr free_complex, ComplexPtr fixed_complex, int n);
ChainMap restriction_map(ComplexPtr fixed_complex, ComplexPtr free_complex, int n);
ChainMap free_involution(ComplexPtr free_complex, int n);

}  // namespace eqmot
