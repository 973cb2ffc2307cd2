#pragma once

#include "eqmot/formal/profile.hpp"

#include <string>
#include <vector>

namespace eqmot {

struct Axiom {
  std::string id;
  std::string statement;
  std::string citation;  // result name plus the formula it rests on
  std::vector<ProfileKind> profiles;

  bool holds_under(ProfileKind kind) const;
};

class AxiomBook {
 public:
  static const AxiomBook& standard();

  bool contains(const std::string& id) const;
  const Axiom& get(const std::string& id) const;
  bool holds(const std::string& id, ProfileKind kind) const;
  const std::vector<Axiom>& all() const { return axioms_; }

 private:
  explicit AxiomBook(std::vector<Axiom> axioms) : axioms_(std::move(axioms)) {}
  std::vector<Axiom> axioms_;
};

}  // namespace eqmot
