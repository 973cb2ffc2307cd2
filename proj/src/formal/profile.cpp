#include "eqmot/formal/profile.hpp"

namespace eqmot {

namespace {

constexpr int max_rewrite_depth = 16;

FormalGroup rewrite_atom(const Atom& a, const FieldProfile& profile, int depth) {
  if (depth > max_rewrite_depth)
    throw FormalError("rewrite rules of profile " + profile.name() + " do not terminate at " + a.to_string());
  const FormalGroup* image = profile.rule(a);
  if (!image) return FormalGroup{a};
  FormalGroup out;
  for (const auto& b : image->atoms()) out = out + rewrite_atom(b, profile, depth + 1);
  return out;
}

FormalGroup rewrite_ordered(const std::vector<Atom>& atoms, const FieldProfile& profile, bool reverse) {
  FormalGroup out;
  for (std::size_t k = 0; k < atoms.size(); ++k)
    out = out + rewrite_atom(atoms[reverse ? atoms.size() - 1 - k : k], profile, 0);
  return out;
}

FormalGroup tensor_atom(const Atom& a) {
  switch (a.kind) {
    case AtomKind::Zero: return {};
    case AtomKind::Z: return {AtomKind::Z2};
    case AtomKind::Kstar: return {AtomKind::KmodSq};
    case AtomKind::Ksq: return {AtomKind::KsqMod4};
    case AtomKind::MotZ: break;
    default:
      if (a.is_two_torsion()) return {a};
  }
  throw FormalError("no rule for atom under profile: " + a.to_string() + " ⊗ Z/2");
}

FormalGroup torsion_atom(const Atom& a) {
  switch (a.kind) {
    case AtomKind::Zero:
    case AtomKind::Z: return {};
    case AtomKind::Kstar: return {AtomKind::Tors2K};
    case AtomKind::Ksq: return {AtomKind::Tors2Ksq};
    case AtomKind::MotZ: break;
    default:
      if (a.is_two_torsion()) return {a};
  }
  throw FormalError("no rule for atom under profile: _2(" + a.to_string() + ")");
}

}  // namespace

FieldProfile::FieldProfile(ProfileKind kind, std::string name, std::string short_name, Tristate minus_one,
                           std::map<Atom, FormalGroup> rules)
    : kind_(kind),
      name_(std::move(name)),
      short_name_(std::move(short_name)),
      minus_one_square_(minus_one),
      rules_(std::move(rules)) {}

const FieldProfile& FieldProfile::get(ProfileKind kind) {
  using K = AtomKind;
  static const FieldProfile qclosed(ProfileKind::quadratically_closed, "quadratically_closed", "qclosed",
                                    Tristate::yes,
                                    {{K::KmodSq, {}},
                                     {K::Ksq, {K::Kstar}},
                                     {K::KsqMod4, {}},
                                     {K::Tors2K, {K::Z2}},
                                     {K::Tors2Ksq, {K::Z2}}});
  static const FieldProfile euclidean(ProfileKind::euclidean, "euclidean", "euclidean", Tristate::no,
                                      {{K::KmodSq, {K::Z2}},
                                       {K::KsqMod4, {}},
                                       {K::Tors2K, {K::Z2}},
                                       {K::Tors2Ksq, {}}});
  static const FieldProfile freal(ProfileKind::formally_real, "formally_real", "freal", Tristate::no,
                                  {{K::Tors2K, {K::Z2}}, {K::Tors2Ksq, {}}});
  static const FieldProfile general(ProfileKind::general, "general", "general", Tristate::unknown, {});
  switch (kind) {
    case ProfileKind::quadratically_closed: return qclosed;
    case ProfileKind::euclidean: return euclidean;
    case ProfileKind::formally_real: return freal;
    case ProfileKind::general: return general;
  }
  return general;
}

const FieldProfile& FieldProfile::parse(const std::string& name) {
  for (auto kind : all_kinds()) {
    const auto& p = get(kind);
    if (name == p.name() || name == p.short_name()) return p;
  }
  throw std::invalid_argument("unknown field profile '" + name + "'");
}

const std::vector<ProfileKind>& FieldProfile::all_kinds() {
  static const std::vector<ProfileKind> kinds = {ProfileKind::quadratically_closed, ProfileKind::euclidean,
                                                 ProfileKind::formally_real, ProfileKind::general};
  return kinds;
}

const FormalGroup* FieldProfile::rule(const Atom& a) const {
  auto it = rules_.find(a);
  return it == rules_.end() ? nullptr : &it->second;
}

FormalGroup normalize(const FormalGroup& g, const FieldProfile& profile) {
  return rewrite_ordered(g.atoms(), profile, false);
}

FormalGroup tensor_Z2(const FormalGroup& g, const FieldProfile& profile) {
  FormalGroup in = normalize(g, profile), out;
  for (const auto& a : in.atoms()) out = out + tensor_atom(a);
  return normalize(out, profile);
}

FormalGroup two_torsion(const FormalGroup& g, const FieldProfile& profile) {
  FormalGroup in = normalize(g, profile), out;
  for (const auto& a : in.atoms()) out = out + torsion_atom(a);
  return normalize(out, profile);
}

FormalGroup universal_coeff(const FormalGroup& h_a, const FormalGroup& h_a_plus_1, const FieldProfile& profile) {
  return normalize(tensor_Z2(h_a, profile) + two_torsion(h_a_plus_1, profile), profile);
}

ConfluenceReport check_confluence(const FieldProfile& profile) {
  ConfluenceReport report;
  std::vector<Atom> atoms = plain_atoms();
  atoms.push_back(Atom::et(2, 1));
  atoms.push_back(Atom::mot(0, 2));

  auto check = [&](const std::vector<Atom>& input) {
    ++report.checked;
    FormalGroup left = rewrite_ordered(input, profile, false);
    FormalGroup right = rewrite_ordered(input, profile, true);
    FormalGroup again = normalize(left, profile);
    std::string label = FormalGroup(input).to_string();
    if (left != right) {
      report.passed = false;
      report.failures.push_back(profile.name() + ": " + label + " rewrites to " + left.to_string() + " and " +
                                right.to_string());
    }
    if (again != left) {
      report.passed = false;
      report.failures.push_back(profile.name() + ": normalize not idempotent on " + label);
    }
    for (const auto& a : left.atoms())
      if (profile.rule(a)) {
        report.passed = false;
        report.failures.push_back(profile.name() + ": " + label + " leaves rewritable atom " + a.to_string());
      }
  };

  for (std::size_t i = 0; i < atoms.size(); ++i) {
    check({atoms[i]});
    for (std::size_t j = i; j < atoms.size(); ++j) check({atoms[i], atoms[j]});
  }
  return report;
}

}  // namespace eqmot
