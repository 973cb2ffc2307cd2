#include "eqmot/tables/fixtures.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#ifndef EQMOT_DEFAULT_FIXTURE_DIR
#define EQMOT_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace eqmot {

using nlohmann::json;

Family parse_family(const std::string& text) {
  if (text == "point") return Family::point;
  if (text == "weight0" || text == "0") return Family::weight0;
  if (text == "weight1" || text == "1") return Family::weight1;
  if (text == "sigma" || text == "σ") return Family::sigma;
  throw FixtureError("unknown table family '" + text + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::point: return "point";
    case Family::weight0: return "weight0";
    case Family::weight1: return "weight1";
    case Family::sigma: return "sigma";
  }
  return "?";
}

std::string Affine::to_string() const {
  std::string out;
  if (coef == 1) out = "n";
  else if (coef == -1) out = "-n";
  else if (coef != 0) out = std::to_string(coef) + "n";
  if (coef == 0) return std::to_string(constant);
  if (constant > 0) out += "+" + std::to_string(constant);
  else if (constant < 0) out += std::to_string(constant);
  return out;
}

Affine Affine::parse(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (c != ' ') text += c;
  static const std::regex constant_only(R"(([+-]?\d+))");
  static const std::regex linear(R"(([+-]?)(\d*)n(([+-]\d+)?))");
  std::smatch m;
  if (std::regex_match(text, m, constant_only)) return {0, std::stol(m[1])};
  if (std::regex_match(text, m, linear)) {
    long c = m[2].str().empty() ? 1 : std::stol(m[2]);
    if (m[1] == "-") c = -c;
    return {c, m[3].str().empty() ? 0 : std::stol(m[3])};
  }
  throw FixtureError("cannot parse affine bound '" + raw + "'");
}

namespace {

long floor_mod2(long x) { return ((x % 2) + 2) % 2; }

std::string parity_name(int p) { return p == 0 ? "even" : "odd"; }

}  // namespace

bool Predicate::matches(long n, long m) const {
  if (n_parity && floor_mod2(n) != *n_parity) return false;
  if (m_parity && floor_mod2(m) != *m_parity) return false;
  if (n_min && n < *n_min) return false;
  if (n_max && n > *n_max) return false;
  for (const auto& b : m_lower)
    if (m < b.at(n)) return false;
  for (const auto& b : m_upper)
    if (m > b.at(n)) return false;
  return true;
}

std::string Predicate::to_string() const {
  if (otherwise) return "otherwise";
  std::vector<std::string> parts;
  if (n_parity) parts.push_back("n " + parity_name(*n_parity));
  if (n_min) parts.push_back("n >= " + std::to_string(*n_min));
  if (n_max) parts.push_back("n <= " + std::to_string(*n_max));
  if (m_parity) parts.push_back("m " + parity_name(*m_parity));
  for (const auto& b : m_lower) parts.push_back("m >= " + b.to_string());
  for (const auto& b : m_upper) parts.push_back("m <= " + b.to_string());
  if (parts.empty()) return "always";
  std::string out;
  for (const auto& s : parts) out += (out.empty() ? "" : ", ") + s;
  return out;
}

std::pair<long, long> FixtureTable::local(int a, int p) const {
  switch (coords) {
    case Coords::plain: return {p, a};
    case Coords::positive: return {p, -static_cast<long>(a)};
    case Coords::negative: return {-static_cast<long>(p), a};
  }
  return {p, a};
}

std::pair<int, int> FixtureTable::global(long n, long m) const {
  switch (coords) {
    case Coords::plain: return {static_cast<int>(m), static_cast<int>(n)};
    case Coords::positive: return {static_cast<int>(-m), static_cast<int>(n)};
    case Coords::negative: return {static_cast<int>(m), static_cast<int>(-n)};
  }
  return {static_cast<int>(m), static_cast<int>(n)};
}

bool FixtureTable::contains(int a, int p) const {
  auto [n, m] = local(a, p);
  return domain.matches(n, m);
}

bool FixtureTable::admits(ProfileKind kind) const {
  return std::find(profiles.begin(), profiles.end(), kind) != profiles.end();
}

std::vector<std::size_t> FixtureTable::matching_rows(int a, int p) const {
  auto [n, m] = local(a, p);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!rows[i].when.otherwise && rows[i].when.matches(n, m)) out.push_back(i);
  return out;
}

const FixtureRow* FixtureTable::lookup(int a, int p) const {
  auto hits = matching_rows(a, p);
  if (!hits.empty()) return &rows[hits.front()];
  for (const auto& r : rows)
    if (r.when.otherwise) return &r;
  return nullptr;
}

std::vector<std::size_t> FixtureTable::uncited_rows() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].citation.find_first_not_of(" \t\n") == std::string::npos) out.push_back(i);
  return out;
}

namespace {

int parse_parity(const json& j, const std::string& key) {
  auto s = j.at(key).get<std::string>();
  if (s == "even") return 0;
  if (s == "odd") return 1;
  throw FixtureError("parity '" + key + "' must be even or odd, got '" + s + "'");
}

Affine affine_of(const json& j) {
  if (j.is_number_integer()) return {0, j.get<long>()};
  return Affine::parse(j.get<std::string>());
}

Predicate parse_predicate(const json& j) {
  static const std::vector<std::string> known = {"n", "m", "n_min", "n_max", "m_min", "m_max", "m_eq", "otherwise"};
  Predicate out;
  for (const auto& [key, value] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw FixtureError("unknown predicate key '" + key + "'");
  if (j.contains("otherwise")) out.otherwise = j.at("otherwise").get<bool>();
  if (j.contains("n")) out.n_parity = parse_parity(j, "n");
  if (j.contains("m")) out.m_parity = parse_parity(j, "m");
  if (j.contains("n_min")) out.n_min = j.at("n_min").get<long>();
  if (j.contains("n_max")) out.n_max = j.at("n_max").get<long>();
  if (j.contains("m_min")) out.m_lower.push_back(affine_of(j.at("m_min")));
  if (j.contains("m_max")) out.m_upper.push_back(affine_of(j.at("m_max")));
  if (j.contains("m_eq")) {
    out.m_lower.push_back(affine_of(j.at("m_eq")));
    out.m_upper.push_back(affine_of(j.at("m_eq")));
  }
  return out;
}

Coords parse_coords(const std::string& s) {
  if (s == "plain") return Coords::plain;
  if (s == "positive") return Coords::positive;
  if (s == "negative") return Coords::negative;
  throw FixtureError("unknown coordinates '" + s + "'");
}

ProfileKind parse_profile_kind(const std::string& s) {
  try {
    return FieldProfile::parse(s).kind();
  } catch (const std::exception&) {
    throw FixtureError("unknown profile '" + s + "'");
  }
}

FixtureTable parse_table(const json& j, Family family, const std::string& file) {
  FixtureTable t;
  t.file = file;
  t.family = family;
  t.id = j.at("id").get<std::string>();
  t.title = j.value("title", "");
  t.coeff = parse_coeff(j.at("coeff").get<std::string>());
  t.coords = parse_coords(j.value("coords", "plain"));
  t.domain = parse_predicate(j.value("domain", json::object()));
  for (const auto& p : j.at("profiles")) t.profiles.push_back(parse_profile_kind(p.get<std::string>()));
  for (const auto& r : j.at("rows")) {
    FixtureRow row;
    row.when = parse_predicate(r.at("when"));
    row.value_text = r.at("value").get<std::string>();
    try {
      row.value = FormalGroup::parse(row.value_text);
    } catch (const FormalError& e) {
      throw FixtureError(t.id + ": " + e.what());
    }
    row.citation = r.value("citation", "");
    t.rows.push_back(std::move(row));
  }
  return t;
}

void parse_document(const json& doc, const std::string& file, FixtureSet& out) {
  Family family = parse_family(doc.at("family").get<std::string>());
  for (const auto& t : doc.at("tables")) out.add(parse_table(t, family, file));
}

}  // namespace

FixtureSet FixtureSet::from_json_text(const std::string& text, const std::string& file) {
  FixtureSet out;
  try {
    parse_document(json::parse(text), file, out);
  } catch (const json::exception& e) {
    throw FixtureError(file + ": " + e.what());
  }
  return out;
}

FixtureSet FixtureSet::load(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw FixtureError("fixture directory not found: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  FixtureSet out;
  for (const auto& f : files) {
    std::ifstream in(f);
    if (!in) throw FixtureError("cannot read " + f.string());
    std::stringstream ss;
    ss << in.rdbuf();
    FixtureSet part = from_json_text(ss.str(), f.filename().string());
    for (auto& t : part.tables_) out.add(std::move(t));
  }
  if (out.tables_.empty()) throw FixtureError("no fixture tables in " + dir.string());
  return out;
}

std::filesystem::path FixtureSet::default_dir() {
  if (const char* env = std::getenv("EQMOT_FIXTURES"); env && *env) return env;
  return EQMOT_DEFAULT_FIXTURE_DIR;
}

const FixtureSet& FixtureSet::standard() {
  static const FixtureSet set = load(default_dir());
  return set;
}

void FixtureSet::add(FixtureTable t) {
  for (const auto& existing : tables_)
    if (existing.id == t.id) throw FixtureError("duplicate fixture table id '" + t.id + "'");
  tables_.push_back(std::move(t));
}

const FixtureTable& FixtureSet::table(const std::string& id) const {
  for (const auto& t : tables_)
    if (t.id == id) return t;
  throw FixtureError("no fixture table '" + id + "'");
}

std::vector<const FixtureTable*> FixtureSet::covering(Family family, Coeff coeff, int a, int p,
                                                      std::optional<ProfileKind> profile) const {
  std::vector<const FixtureTable*> out;
  for (const auto& t : tables_)
    if (t.family == family && t.coeff == coeff && t.contains(a, p) && (!profile || t.admits(*profile)))
      out.push_back(&t);
  return out;
}

std::optional<FixtureHit> FixtureSet::lookup(Family family, Coeff coeff, int a, int p, ProfileKind profile) const {
  for (const auto* t : covering(family, coeff, a, p, profile)) {
    const FixtureRow* row = t->lookup(a, p);
    if (!row) continue;
    return FixtureHit{t, row, normalize(row->value, FieldProfile::get(profile))};
  }
  return std::nullopt;
}

std::vector<std::string> FixtureSet::citation_problems() const {
  std::vector<std::string> out;
  for (const auto& t : tables_)
    for (auto i : t.uncited_rows())
      out.push_back(t.file + ": table " + t.id + " row " + std::to_string(i) + " (" + t.rows[i].when.to_string() +
                    ") has no citation");
  return out;
}

}  // namespace eqmot
