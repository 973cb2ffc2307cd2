#pragma once

#include "eqmot/sigmacx/weight0.hpp"

#include <string>
#include <vector>

namespace eqmot {

struct CheckReport {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void fail(std::string message) {
    passed = false;
    failures.push_back(std::move(message));
  }
  void merge(const CheckReport& other);
};

// H^a(Z_top(pσ)(C_2); Z/m) is the coefficient group at a = -p and 0 elsewhere
CheckReport free_orbit_acyclicity(int p, unsigned long m, Weight0Engine* engine = nullptr);

// tr∘res = 2·id, res∘tr = id + τ exactly, and (tr∘res)_* = ×2 on every H^a
CheckReport transfer_restriction_check(int p, Weight0Engine* engine = nullptr);

struct ConeTowerResult {
  CheckReport report;
  // permutation matrices P^i with P^{i+1} d_cone^i = d^i P^i, cone basis -> Z_top((p+1)σ) basis
  std::map<int, IntegerMatrix> identification;
};
ConeTowerResult cone_tower_check(int p, Weight0Engine* engine = nullptr, bool check_sequence = true);

}  // namespace eqmot
