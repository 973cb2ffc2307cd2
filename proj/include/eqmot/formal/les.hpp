#pragma once

#include "eqmot/formal/profile.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace eqmot {

class AxiomBook;

// axiom and base-fact ids a value depends on
using Trail = std::set<std::string>;

struct Fact {
  FormalGroup value;
  Trail trail;
};

// A homomorphism known up to isomorphism of its source and target.
struct KnownMap {
  std::string name;
  FormalGroup source, target, kernel, image, cokernel;
};

// multiplication by 2, summand by summand; FormalError on Ksq and opaque integral atoms
KnownMap mult2(const FormalGroup& g);

enum class ArrowProperty { zero, injective, surjective, iso, known };

struct ArrowTag {
  ArrowProperty property = ArrowProperty::zero;
  std::optional<KnownMap> map;
  Trail trail;

  static ArrowTag zero(Trail trail) { return {ArrowProperty::zero, std::nullopt, std::move(trail)}; }
  static ArrowTag injective(Trail trail) { return {ArrowProperty::injective, std::nullopt, std::move(trail)}; }
  static ArrowTag surjective(Trail trail) { return {ArrowProperty::surjective, std::nullopt, std::move(trail)}; }
  static ArrowTag iso(Trail trail) { return {ArrowProperty::iso, std::nullopt, std::move(trail)}; }
  static ArrowTag known(KnownMap map, Trail trail) {
    return {ArrowProperty::known, std::move(map), std::move(trail)};
  }
  std::string to_string() const;
};

// A finite piece N_0 -> N_1 -> ... -> N_{k} of a long exact sequence. Arrow i goes from
// node i to node i+1. Exactness is imposed at interior nodes only.
class LesWindow {
 public:
  std::size_t add_node(std::string label, std::optional<Fact> value = std::nullopt);
  void tag(std::size_t arrow, ArrowTag tag);

  std::size_t node_count() const { return labels_.size(); }
  std::size_t arrow_count() const { return labels_.empty() ? 0 : labels_.size() - 1; }
  const std::string& label(std::size_t node) const { return labels_.at(node); }
  const std::optional<Fact>& value(std::size_t node) const { return values_.at(node); }
  const std::vector<ArrowTag>& tags(std::size_t arrow) const { return tags_.at(arrow); }
  std::string to_string() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::optional<Fact>> values_;
  std::vector<std::vector<ArrowTag>> tags_;
};

struct ArrowState {
  std::optional<Fact> image;
  std::optional<Trail> injective;   // set when injectivity is established, with its trail
  std::optional<Trail> surjective;
  bool is_iso() const { return injective && surjective; }
  Trail iso_trail() const;
};

struct Contradiction {
  std::string constraint;
  std::string detail;
  Trail trail;
};

struct WindowSolution {
  std::vector<std::optional<Fact>> nodes;
  std::vector<ArrowState> arrows;
  std::vector<std::size_t> unknown;
  std::optional<Contradiction> contradiction;
  bool ok() const { return !contradiction; }
};

// Fixed-point deduction over the window. Values are compared after normalization under
// the profile. When an axiom book is given, every id in a seed or tag trail must name an
// axiom whose hypothesis holds under the profile.
WindowSolution solve_window(const LesWindow& window, const FieldProfile& profile,
                            const AxiomBook* axioms = nullptr);

}  // namespace eqmot
