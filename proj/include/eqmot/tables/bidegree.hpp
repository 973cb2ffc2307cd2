#pragma once

#include <string>

namespace eqmot {

// H^{a+pσ, b+qσ}
struct Bidegree {
  int a = 0, p = 0, b = 0, q = 0;

  std::string to_string() const;
  bool operator==(const Bidegree&) const = default;
};

// field: Spec k; borel: EC_2 over k
enum class Space { field, borel };
enum class ReductionKind { zero, redirect, not_reducible };
enum class TargetTable { weight0, weight1, weight_sigma };

std::string target_name(TargetTable t);  // "weight0", "weight1", "sigma"

struct Reduction {
  ReductionKind kind = ReductionKind::not_reducible;
  TargetTable table = TargetTable::weight0;  // for redirect
  int a = 0, p = 0;                          // for redirect, the bidegree in the target table over k
  std::string rule;
  std::string citation;

  std::string to_string() const;
};

Reduction reduce_bidegree(const Bidegree& bd, Space space = Space::field);

}  // namespace eqmot
