#pragma once

#include "eqmot/sigmacx/sigma_complex.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace eqmot {

// H^{a+pσ,0}(k; Z) for m = 0, or with Z/m coefficients for m prime:
// cohomology in degree a of Z_top(pσ) at the fixed point.
FgAbelianGroup weight0(int a, int p, unsigned long m = 0);

// Caches each built complex together with the Smith data of its
// differentials, so that sweeping a grid reduces every matrix once.
// Thread-safe; results are identical to weight0().
class Weight0Engine {
 public:
  explicit Weight0Engine(int max_abs_p = 8) : max_abs_p_(max_abs_p) {}

  FgAbelianGroup group(int a, int p, unsigned long m = 0);
  // cohomology of Z_top(pσ) at either orbit, from the cached Smith data
  FgAbelianGroup complex_cohomology(int a, int p, OrbitType type, unsigned long m = 0);
  ComplexPtr complex(int p, OrbitType type = OrbitType::fixed);
  int max_abs_p() const { return max_abs_p_; }

 private:
  struct DifferentialData {
    bool has_diagonal = false;
    std::vector<Integer> diagonal;  // nonzero Smith invariants
    std::map<unsigned long, std::size_t> rank_mod;
  };
  struct Entry {
    ComplexPtr complex;
    std::map<int, DifferentialData> differentials;
  };
  Entry& entry(int p, OrbitType type);
  const DifferentialData& data(Entry& e, int degree, unsigned long m);

  int max_abs_p_;
  std::mutex mutex_;
  std::map<std::pair<int, int>, Entry> cache_;
};

}  // namespace eqmot
