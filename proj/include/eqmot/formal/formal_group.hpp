#pragma once

#include "eqmot/abgrp/fg_group.hpp"

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace eqmot {

class FormalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Declaration order is the canonical order of summands in a rendered group.
enum class AtomKind {
  Zero,
  Z,
  Z2,
  Kstar,     // k*
  Ksq,       // k*2, the subgroup of squares
  KmodSq,    // k*/k*2
  KsqMod4,   // k*2/k*4
  Tors2K,    // _2k*, the 2-torsion of k*
  Tors2Ksq,  // _2(k*2); Z/2 exactly when -1 is a square
  Et,        // H^i_et(k, mu_2^{⊗w}), opaque
  MotZ,      // H^{a,w}(k, Z) for w >= 2, opaque
};

struct Atom {
  AtomKind kind = AtomKind::Zero;
  int i = 0;
  int w = 0;

  Atom() = default;
  Atom(AtomKind k) : kind(k) {}  // NOLINT: atoms read naturally as kinds
  static Atom et(int i, int w) { return Atom(AtomKind::Et, i, w); }
  static Atom mot(int a, int w) { return Atom(AtomKind::MotZ, a, w); }

  bool indexed() const { return kind == AtomKind::Et || kind == AtomKind::MotZ; }
  // killed by multiplication by 2
  bool is_two_torsion() const;
  std::string to_string() const;

  auto operator<=>(const Atom&) const = default;
  bool operator==(const Atom&) const = default;

 private:
  Atom(AtomKind k, int i_, int w_) : kind(k), i(i_), w(w_) {}
};

// All non-indexed atoms except Zero.
const std::vector<Atom>& plain_atoms();

// A direct sum of atoms, stored sorted. Zero atoms are dropped on construction.
class FormalGroup {
 public:
  FormalGroup() = default;
  FormalGroup(std::initializer_list<Atom> atoms);
  explicit FormalGroup(std::vector<Atom> atoms);

  static FormalGroup zero() { return {}; }
  static FormalGroup from_fg(const FgAbelianGroup& g);  // Z and Z/2 summands only
  // parses the to_string() grammar
  static FormalGroup parse(const std::string& text);

  const std::vector<Atom>& atoms() const { return atoms_; }
  bool is_zero() const { return atoms_.empty(); }
  std::size_t size() const { return atoms_.size(); }
  std::size_t count(const Atom& a) const;
  bool is_two_torsion() const;
  // every summand is Z/2: a finite elementary abelian 2-group
  bool is_finite_elementary() const;
  std::optional<FgAbelianGroup> to_fg() const;

  FormalGroup operator+(const FormalGroup& other) const;
  bool operator==(const FormalGroup& other) const { return atoms_ == other.atoms_; }
  bool operator!=(const FormalGroup& other) const { return !(*this == other); }

  // "0", "Z", "Z^2 ⊕ (Z/2)^3 ⊕ k*/k*2", "(k*)^2 ⊕ Et(2,1)"
  std::string to_string() const;

 private:
  std::vector<Atom> atoms_;
};

}  // namespace eqmot
