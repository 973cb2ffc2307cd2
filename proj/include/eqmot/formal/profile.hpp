#pragma once

#include "eqmot/formal/formal_group.hpp"

#include <map>
#include <string>
#include <vector>

namespace eqmot {

enum class ProfileKind { quadratically_closed, euclidean, formally_real, general };
enum class Tristate { yes, no, unknown };

class FieldProfile {
 public:
  static const FieldProfile& get(ProfileKind kind);
  // accepts "qclosed", "quadratically_closed", "euclidean", "freal", "formally_real", "general"
  static const FieldProfile& parse(const std::string& name);
  static const std::vector<ProfileKind>& all_kinds();

  ProfileKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::string& short_name() const { return short_name_; }
  Tristate minus_one_is_square() const { return minus_one_square_; }
  const std::map<Atom, FormalGroup>& rules() const { return rules_; }
  // nullptr when the atom is kept symbolic
  const FormalGroup* rule(const Atom& a) const;

 private:
  FieldProfile(ProfileKind kind, std::string name, std::string short_name, Tristate minus_one,
               std::map<Atom, FormalGroup> rules);

  ProfileKind kind_;
  std::string name_;
  std::string short_name_;
  Tristate minus_one_square_;
  std::map<Atom, FormalGroup> rules_;
};

FormalGroup normalize(const FormalGroup& g, const FieldProfile& profile);
FormalGroup tensor_Z2(const FormalGroup& g, const FieldProfile& profile);
FormalGroup two_torsion(const FormalGroup& g, const FieldProfile& profile);
// H^a(Z/2) = H^a ⊗ Z/2 ⊕ _2H^{a+1}
FormalGroup universal_coeff(const FormalGroup& h_a, const FormalGroup& h_a_plus_1, const FieldProfile& profile);

struct ConfluenceReport {
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;
};
// Exhaustive over multisets of at most two atoms from the finite atom set:
// idempotence, and agreement of left-first and right-first rewriting.
ConfluenceReport check_confluence(const FieldProfile& profile);

}  // namespace eqmot
