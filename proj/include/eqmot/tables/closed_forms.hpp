#pragma once

#include "eqmot/tables/fixtures.hpp"

namespace eqmot {

class TableRangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bredon cohomology of a point with constant coefficients
FgAbelianGroup bredon_point_closed_form(int a, int p, Coeff coeff,
                                        const FixtureSet& fixtures = FixtureSet::standard());
// H^{a+pσ,0}(k; A); independent of the field
FgAbelianGroup weight0_closed_form(int a, int p, Coeff coeff, const FixtureSet& fixtures = FixtureSet::standard());
// Throw TableRangeError ("outside theorem range") when no table admitting the profile covers (a, p).
FormalGroup weight1_closed_form(int a, int p, Coeff coeff, const FieldProfile& profile,
                                const FixtureSet& fixtures = FixtureSet::standard());
FormalGroup weight_sigma_closed_form(int a, int p, Coeff coeff, const FieldProfile& profile,
                                     const FixtureSet& fixtures = FixtureSet::standard());

// the row a closed form reads its value from
FixtureHit closed_form_hit(Family family, int a, int p, Coeff coeff, ProfileKind profile,
                           const FixtureSet& fixtures = FixtureSet::standard());

}  // namespace eqmot
