#pragma once

#include "eqmot/formal/axioms.hpp"
#include "eqmot/formal/les.hpp"
#include "eqmot/formal/motivic.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace eqmot {

enum class Weight { one, sigma };
enum class Cone { positive, negative };

Weight parse_weight(const std::string& text);  // "1" or "sigma"
std::string weight_name(Weight w);              // "1" or "sigma"

// The theorem hypotheses: positive cones need a quadratically closed or euclidean field,
// negative cones also admit formally real fields.
bool cone_admissible(Weight w, Cone cone, ProfileKind kind);

// One long exact sequence solved while stepping from column p to p + 1.
struct StepRecord {
  int p = 0;                 // the sequence relating columns p and p + 1
  int solved_column = 0;     // column filled in, or p when both were already known
  std::vector<std::string> tags;
  bool ok = true;
  std::string note;
};

struct DerivedTables {
  Weight weight = Weight::one;
  ProfileKind profile = ProfileKind::general;
  int n_max = 0;
  int a_min = 0;
  int a_max = 0;
  std::map<std::pair<int, int>, Fact> integral;  // keyed by (p, a)
  std::vector<StepRecord> steps;
  std::vector<std::string> findings;  // contradictions and unresolved nodes
  std::vector<std::string> skipped;   // cones outside the theorem hypotheses for the profile

  bool has_column(int p) const;
  std::vector<int> columns() const;
  const Fact* integral_at(int a, int p) const;
  // universal coefficients from columns of the integral table; needs a + 1 <= a_max
  std::optional<Fact> mod2_at(int a, int p) const;
  std::optional<Fact> at(int a, int p, Coeff coeff) const;
  bool complete() const { return findings.empty(); }
};

DerivedTables derive_weight1(const FieldProfile& profile, int n_max);
DerivedTables derive_weight_sigma(const FieldProfile& profile, int n_max);
DerivedTables derive(Weight weight, const FieldProfile& profile, int n_max);

}  // namespace eqmot
