#include "eqmot/tables/closed_forms.hpp"

namespace eqmot {

namespace {

std::string where(Family family, int a, int p, Coeff coeff) {
  return family_name(family) + " (a=" + std::to_string(a) + ", p=" + std::to_string(p) + ", " + coeff_name(coeff) +
         ")";
}

FgAbelianGroup as_fg(const FixtureHit& hit) {
  auto g = hit.value.to_fg();
  if (!g) throw FixtureError("table " + hit.table->id + " has a non-integral value " + hit.value.to_string());
  return *g;
}

}  // namespace

FixtureHit closed_form_hit(Family family, int a, int p, Coeff coeff, ProfileKind profile, const FixtureSet& fixtures) {
  auto hit = fixtures.lookup(family, coeff, a, p, profile);
  if (!hit)
    throw TableRangeError("outside theorem range: " + where(family, a, p, coeff) + " under " +
                          FieldProfile::get(profile).name());
  return *hit;
}

FgAbelianGroup bredon_point_closed_form(int a, int p, Coeff coeff, const FixtureSet& fixtures) {
  return as_fg(closed_form_hit(Family::point, a, p, coeff, ProfileKind::general, fixtures));
}

FgAbelianGroup weight0_closed_form(int a, int p, Coeff coeff, const FixtureSet& fixtures) {
  return as_fg(closed_form_hit(Family::weight0, a, p, coeff, ProfileKind::general, fixtures));
}

FormalGroup weight1_closed_form(int a, int p, Coeff coeff, const FieldProfile& profile, const FixtureSet& fixtures) {
  return closed_form_hit(Family::weight1, a, p, coeff, profile.kind(), fixtures).value;
}

FormalGroup weight_sigma_closed_form(int a, int p, Coeff coeff, const FieldProfile& profile,
                                     const FixtureSet& fixtures) {
  return closed_form_hit(Family::sigma, a, p, coeff, profile.kind(), fixtures).value;
}

}  // namespace eqmot
