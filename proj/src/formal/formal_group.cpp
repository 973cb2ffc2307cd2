#include "eqmot/formal/formal_group.hpp"

#include <algorithm>
#include <map>
#include <regex>

namespace eqmot {

bool Atom::is_two_torsion() const {
  switch (kind) {
    case AtomKind::Zero:
    case AtomKind::Z2:
    case AtomKind::KmodSq:
    case AtomKind::KsqMod4:
    case AtomKind::Tors2K:
    case AtomKind::Tors2Ksq:
    case AtomKind::Et:
      return true;
    default:
      return false;
  }
}

std::string Atom::to_string() const {
  switch (kind) {
    case AtomKind::Zero: return "0";
    case AtomKind::Z: return "Z";
    case AtomKind::Z2: return "Z/2";
    case AtomKind::Kstar: return "k*";
    case AtomKind::Ksq: return "k*2";
    case AtomKind::KmodSq: return "k*/k*2";
    case AtomKind::KsqMod4: return "k*2/k*4";
    case AtomKind::Tors2K: return "_2k*";
    case AtomKind::Tors2Ksq: return "_2(k*2)";
    case AtomKind::Et: return "Et(" + std::to_string(i) + "," + std::to_string(w) + ")";
    case AtomKind::MotZ: return "Mot(" + std::to_string(i) + "," + std::to_string(w) + ")";
  }
  return "?";
}

const std::vector<Atom>& plain_atoms() {
  static const std::vector<Atom> atoms = {AtomKind::Z,       AtomKind::Z2,     AtomKind::Kstar,
                                          AtomKind::Ksq,     AtomKind::KmodSq, AtomKind::KsqMod4,
                                          AtomKind::Tors2K,  AtomKind::Tors2Ksq};
  return atoms;
}

FormalGroup::FormalGroup(std::initializer_list<Atom> atoms) : FormalGroup(std::vector<Atom>(atoms)) {}

FormalGroup::FormalGroup(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  std::erase_if(atoms_, [](const Atom& a) { return a.kind == AtomKind::Zero; });
  std::sort(atoms_.begin(), atoms_.end());
}

FormalGroup FormalGroup::from_fg(const FgAbelianGroup& g) {
  std::vector<Atom> atoms(g.free_rank(), AtomKind::Z);
  for (const auto& d : g.invariant_factors()) {
    if (d != 2) throw FormalError("no formal atom for summand Z/" + d.get_str());
    atoms.emplace_back(AtomKind::Z2);
  }
  return FormalGroup(std::move(atoms));
}

std::optional<FgAbelianGroup> FormalGroup::to_fg() const {
  std::vector<Integer> orders;
  for (const auto& a : atoms_) {
    if (a.kind == AtomKind::Z) orders.emplace_back(0);
    else if (a.kind == AtomKind::Z2) orders.emplace_back(2);
    else return std::nullopt;
  }
  return FgAbelianGroup::from_cyclic_orders(orders);
}

FormalGroup FormalGroup::parse(const std::string& text) {
  static const std::regex separator(R"(\s*(⊕|\+)\s*)");
  static const std::regex power(R"(\((.+)\)\^(\d+))");
  static const std::regex z_power(R"(Z\^(\d+))");
  static const std::regex indexed(R"((Et|Mot)\((-?\d+),(-?\d+)\))");
  static const std::map<std::string, AtomKind> names = {
      {"Z", AtomKind::Z},           {"Z/2", AtomKind::Z2},         {"k*", AtomKind::Kstar},
      {"k*2", AtomKind::Ksq},       {"k*/k*2", AtomKind::KmodSq},  {"k*2/k*4", AtomKind::KsqMod4},
      {"_2k*", AtomKind::Tors2K},   {"_2(k*2)", AtomKind::Tors2Ksq}};

  auto single = [&](const std::string& term) -> Atom {
    if (auto it = names.find(term); it != names.end()) return it->second;
    std::smatch m;
    if (std::regex_match(term, m, indexed)) {
      int x = std::stoi(m[2]), y = std::stoi(m[3]);
      return m[1] == "Et" ? Atom::et(x, y) : Atom::mot(x, y);
    }
    throw FormalError("cannot parse formal summand '" + term + "'");
  };

  std::string trimmed = std::regex_replace(text, std::regex(R"(^\s+|\s+$)"), "");
  if (trimmed == "0" || trimmed.empty()) return {};
  std::vector<Atom> atoms;
  std::sregex_token_iterator it(trimmed.begin(), trimmed.end(), separator, -1), end;
  for (; it != end; ++it) {
    std::string term = *it;
    std::smatch m;
    if (std::regex_match(term, m, z_power)) {
      atoms.insert(atoms.end(), std::stoul(m[1]), AtomKind::Z);
    } else if (std::regex_match(term, m, power)) {
      atoms.insert(atoms.end(), std::stoul(m[2]), single(m[1]));
    } else {
      atoms.push_back(single(term));
    }
  }
  return FormalGroup(std::move(atoms));
}

std::size_t FormalGroup::count(const Atom& a) const {
  return static_cast<std::size_t>(std::count(atoms_.begin(), atoms_.end(), a));
}

bool FormalGroup::is_two_torsion() const {
  return std::all_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return a.is_two_torsion(); });
}

bool FormalGroup::is_finite_elementary() const {
  return std::all_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return a.kind == AtomKind::Z2; });
}

FormalGroup FormalGroup::operator+(const FormalGroup& other) const {
  std::vector<Atom> atoms = atoms_;
  atoms.insert(atoms.end(), other.atoms_.begin(), other.atoms_.end());
  return FormalGroup(std::move(atoms));
}

std::string FormalGroup::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < atoms_.size();) {
    std::size_t k = i;
    while (k < atoms_.size() && atoms_[k] == atoms_[i]) ++k;
    std::string base = atoms_[i].to_string();
    std::string part;
    if (k - i == 1) part = base;
    else if (atoms_[i].kind == AtomKind::Z) part = "Z^" + std::to_string(k - i);
    else part = "(" + base + ")^" + std::to_string(k - i);
    out += (out.empty() ? "" : " ⊕ ") + part;
    i = k;
  }
  return out;
}

}  // namespace eqmot
