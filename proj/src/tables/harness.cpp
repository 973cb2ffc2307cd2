#include "eqmot/tables/harness.hpp"

#include "eqmot/formal/derive.hpp"
#include "eqmot/sigmacx/checks.hpp"
#include "eqmot/tables/closed_forms.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace eqmot {

bool CellCheck::operator<(const CellCheck& o) const {
  return std::tie(table, p, a, expected, actual) < std::tie(o.table, o.p, o.a, o.expected, o.actual);
}

void SuiteReport::record(CellCheck cell) {
  ++checked;
  if (!cell.passed)
    failures.push_back(cell.table + " (a=" + std::to_string(cell.a) + ", p=" + std::to_string(cell.p) +
                       "): expected " + cell.expected + ", got " + cell.actual +
                       (cell.citation.empty() ? "" : " [" + cell.citation + "]"));
  cells.push_back(std::move(cell));
}

std::string SuiteReport::summary() const {
  std::string out = (passed() ? "PASS " : "FAIL ") + suite + ": " + std::to_string(checked) + " checks";
  if (!passed()) out += ", " + std::to_string(failures.size()) + " failures";
  return out;
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {"weight0-integral",    "weight0-mod2",        "free-orbit",
                                               "transfer-restriction", "cone-tower",         "formal-derivations",
                                               "qclosed-coincidence",  "fixture-coverage"};
  return ids;
}

namespace {

template <class G>
CellCheck compare(std::string table, int a, int p, const G& expected, const G& actual, std::string citation) {
  CellCheck c;
  c.table = std::move(table);
  c.a = a;
  c.p = p;
  c.expected = expected.to_string();
  c.actual = actual.to_string();
  c.citation = std::move(citation);
  c.passed = expected == actual;
  return c;
}

void absorb(SuiteReport& r, const CheckReport& check, int p, const std::string& what) {
  CellCheck c;
  c.table = check.name.empty() ? what : check.name;
  c.p = p;
  c.expected = what;
  c.actual = check.passed ? "holds (" + std::to_string(check.checked) + " identities)" : "fails";
  c.passed = check.passed;
  r.record(c);
  for (const auto& f : check.failures) r.fail(c.table + " p=" + std::to_string(p) + ": " + f);
}

std::vector<Family> families_of(const std::string& suite) {
  if (suite == "weight0-integral" || suite == "weight0-mod2") return {Family::point, Family::weight0};
  if (suite == "formal-derivations") return {Family::weight1, Family::sigma};
  if (suite == "qclosed-coincidence" || suite == "fixture-coverage")
    return {Family::point, Family::weight0, Family::weight1, Family::sigma};
  return {};
}

std::vector<std::string> missing_citations(const FixtureSet& fixtures, const std::vector<Family>& families) {
  std::vector<std::string> out;
  for (const auto& t : fixtures.tables()) {
    if (std::find(families.begin(), families.end(), t.family) == families.end()) continue;
    for (auto i : t.uncited_rows())
      out.push_back(t.file + ": table " + t.id + " row " + std::to_string(i) + " (" + t.rows[i].when.to_string() +
                    ") has no citation");
  }
  return out;
}

std::string row_citation(Family family, int a, int p, Coeff coeff, const FixtureSet& fixtures) {
  auto hit = fixtures.lookup(family, coeff, a, p, ProfileKind::general);
  return hit ? hit->table->id + ": " + hit->row->citation : "";
}

void weight0_integral(SuiteReport& r, const HarnessOptions& o, const FixtureSet& fx, Weight0Engine& engine) {
  for (int p = -o.p_range; p <= o.p_range; ++p)
    for (int a = -o.a_range; a <= o.a_range; ++a) {
      FgAbelianGroup computed = engine.group(a, p, 0);
      r.record(compare("weight0/Z closed form", a, p, weight0_closed_form(a, p, Coeff::Z, fx), computed,
                       row_citation(Family::weight0, a, p, Coeff::Z, fx)));
      r.record(compare("weight0/Z point table", a, p, bredon_point_closed_form(a, p, Coeff::Z, fx), computed,
                       row_citation(Family::point, a, p, Coeff::Z, fx)));
    }
}

void weight0_mod2(SuiteReport& r, const HarnessOptions& o, const FixtureSet& fx, Weight0Engine& engine) {
  for (int p = -o.p_range; p <= o.p_range; ++p)
    for (int a = -o.a_range; a <= o.a_range; ++a) {
      FgAbelianGroup direct = engine.group(a, p, 2);
      FgAbelianGroup dual = tensor_Z2_group(engine.group(a, p, 0)) + two_torsion_group(engine.group(a + 1, p, 0));
      r.record(compare("weight0/Z2 universal coefficients", a, p, dual, direct, "split universal coefficients"));
      r.record(compare("weight0/Z2 closed form", a, p, weight0_closed_form(a, p, Coeff::Z2, fx), direct,
                       row_citation(Family::weight0, a, p, Coeff::Z2, fx)));
      r.record(compare("weight0/Z2 point table", a, p, bredon_point_closed_form(a, p, Coeff::Z2, fx), direct,
                       row_citation(Family::point, a, p, Coeff::Z2, fx)));
    }
}

std::string trail_text(const Trail& t) {
  std::string out;
  for (const auto& id : t) out += (out.empty() ? "" : ",") + id;
  return out;
}

// Derivations are deterministic, so each (weight, profile, n_max) is computed once per process.
const DerivedTables& derived(Weight w, ProfileKind kind, int n_max) {
  static std::map<std::tuple<Weight, ProfileKind, int>, DerivedTables> cache;
  auto key = std::make_tuple(w, kind, n_max);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, derive(w, FieldProfile::get(kind), n_max)).first;
  return it->second;
}

const std::vector<ProfileKind>& derivation_profiles() {
  static const std::vector<ProfileKind> kinds = {ProfileKind::quadratically_closed, ProfileKind::euclidean,
                                                 ProfileKind::formally_real};
  return kinds;
}

void formal_derivations(SuiteReport& r, const HarnessOptions& o, const FixtureSet& fx) {
  for (Weight w : {Weight::one, Weight::sigma}) {
    Family family = w == Weight::one ? Family::weight1 : Family::sigma;
    for (ProfileKind kind : derivation_profiles()) {
      const FieldProfile& profile = FieldProfile::get(kind);
      const DerivedTables& t = derived(w, kind, o.n_max);
      for (const auto& f : t.findings) r.fail("derivation weight " + weight_name(w) + " " + profile.name() + ": " + f);
      for (const auto& table : fx.tables()) {
        if (table.family != family || !table.admits(kind)) continue;
        int a_hi = table.coeff == Coeff::Z ? t.a_max : t.a_max - 1;
        for (int p = -o.n_max; p <= o.n_max; ++p)
          for (int a = t.a_min; a <= a_hi; ++a) {
            if (!table.contains(a, p)) continue;
            const FixtureRow* row = table.lookup(a, p);
            std::string name = table.id + "/" + profile.short_name();
            FormalGroup expected = normalize(row->value, profile);
            auto fact = t.at(a, p, table.coeff);
            CellCheck c;
            c.table = name;
            c.a = a;
            c.p = p;
            c.expected = expected.to_string();
            c.citation = row->citation;
            if (!fact) {
              c.actual = "not derived";
              c.passed = false;
            } else {
              c.actual = fact->value.to_string();
              c.passed = fact->value == expected;
              if (fact->trail.empty()) {
                c.passed = false;
                c.actual += " (empty trail)";
              }
              for (const auto& id : fact->trail)
                if (!AxiomBook::standard().holds(id, kind)) {
                  c.passed = false;
                  c.actual += " (trail uses " + id + ")";
                }
              if (c.passed) c.actual += " [" + trail_text(fact->trail) + "]";
            }
            r.record(c);
          }
      }
    }
  }
}

void qclosed_coincidence(SuiteReport& r, const HarnessOptions& o, const FixtureSet& fx, Weight0Engine& engine) {
  const FieldProfile& qc = FieldProfile::get(ProfileKind::quadratically_closed);
  const DerivedTables& one = derived(Weight::one, qc.kind(), o.n_max);
  const DerivedTables& sigma = derived(Weight::sigma, qc.kind(), o.n_max);
  for (int p = -o.n_max; p <= o.n_max; ++p)
    for (int a = one.a_min; a <= one.a_max - 1; ++a) {
      FormalGroup point = FormalGroup::from_fg(bredon_point_closed_form(a, p, Coeff::Z2, fx));
      std::string cite = row_citation(Family::point, a, p, Coeff::Z2, fx);
      auto f1 = one.mod2_at(a, p);
      auto fs = sigma.mod2_at(a, p);
      FormalGroup missing;
      CellCheck c1 = compare("weight1/Z2/qclosed vs point", a, p, point, f1 ? f1->value : missing, cite);
      CellCheck cs = compare("sigma/Z2/qclosed vs point", a, p, point, fs ? fs->value : missing, cite);
      if (!f1) c1.actual = "not derived", c1.passed = false;
      if (!fs) cs.actual = "not derived", cs.passed = false;
      r.record(c1);
      r.record(cs);
    }
  // weight 0 involves no field data, so one comparison covers every profile
  for (int p = -o.p_range; p <= o.p_range; ++p)
    for (int a = -o.a_range; a <= o.a_range; ++a)
      for (Coeff coeff : {Coeff::Z, Coeff::Z2})
        r.record(compare(std::string("weight0/") + coeff_name(coeff) + " vs point", a, p,
                         bredon_point_closed_form(a, p, coeff, fx), engine.group(a, p, coeff_modulus(coeff)),
                         row_citation(Family::point, a, p, coeff, fx)));
}

void fixture_coverage(SuiteReport& r, const HarnessOptions& o, const FixtureSet& fx) {
  const long R = o.coverage_range;
  for (const auto& t : fx.tables()) {
    std::size_t otherwise = std::count_if(t.rows.begin(), t.rows.end(), [](const auto& row) { return row.when.otherwise; });
    if (otherwise > 1) r.fail(t.id + ": more than one otherwise row");
    std::size_t points = 0, bad = 0;
    for (long n = -R; n <= R; ++n)
      for (long m = -R; m <= R; ++m) {
        if (!t.domain.matches(n, m)) continue;
        auto [a, p] = t.global(n, m);
        auto hits = t.matching_rows(a, p);
        ++points;
        if (hits.size() > 1) {
          ++bad;
          std::string rows;
          for (auto i : hits) rows += " " + std::to_string(i);
          r.fail(t.id + ": rows" + rows + " overlap at n=" + std::to_string(n) + ", m=" + std::to_string(m));
        } else if (hits.empty() && otherwise == 0) {
          ++bad;
          r.fail(t.id + ": no row covers n=" + std::to_string(n) + ", m=" + std::to_string(m));
        }
      }
    CellCheck c;
    c.table = t.id;
    c.expected = "exactly one row at each of " + std::to_string(points) + " points";
    c.actual = bad == 0 ? c.expected : std::to_string(bad) + " bad points";
    c.passed = bad == 0;
    c.citation = t.file;
    r.checked += points;
    r.cells.push_back(c);
  }

  // overlapping tables of one family must agree wherever both apply
  for (Family family : {Family::point, Family::weight0, Family::weight1, Family::sigma})
    for (Coeff coeff : {Coeff::Z, Coeff::Z2})
      for (ProfileKind kind : FieldProfile::all_kinds()) {
        const FieldProfile& profile = FieldProfile::get(kind);
        for (int p = -static_cast<int>(R); p <= R; ++p)
          for (int a = -static_cast<int>(R); a <= R; ++a) {
            auto tables = fx.covering(family, coeff, a, p, kind);
            if (tables.size() < 2) continue;
            FormalGroup first = normalize(tables.front()->lookup(a, p)->value, profile);
            for (std::size_t i = 1; i < tables.size(); ++i) {
              FormalGroup other = normalize(tables[i]->lookup(a, p)->value, profile);
              r.record(compare(tables.front()->id + " vs " + tables[i]->id + "/" + profile.short_name() + "/" +
                                   coeff_name(coeff),
                               a, p, first, other, tables[i]->lookup(a, p)->citation));
            }
          }
      }

  for (int p = -static_cast<int>(R); p <= R; ++p)
    for (int a = -static_cast<int>(R); a <= R; ++a)
      for (Coeff coeff : {Coeff::Z, Coeff::Z2})
        r.record(compare(std::string("weight0 closed form vs point/") + coeff_name(coeff), a, p,
                         bredon_point_closed_form(a, p, coeff, fx), weight0_closed_form(a, p, coeff, fx),
                         row_citation(Family::weight0, a, p, coeff, fx)));
}

}  // namespace

SuiteReport run_suite(const std::string& id, const HarnessOptions& o, const FixtureSet& fx, Weight0Engine& engine) {
  if (std::find(suite_ids().begin(), suite_ids().end(), id) == suite_ids().end())
    throw std::invalid_argument("unknown suite '" + id + "'");
  SuiteReport r;
  r.suite = id;
  auto missing = missing_citations(fx, families_of(id));
  if (!missing.empty()) {
    r.fail("refusing to run " + id + ": fixtures without citations");
    for (auto& m : missing) r.fail(m);
    return r;
  }
  try {
    if (id == "weight0-integral") weight0_integral(r, o, fx, engine);
    else if (id == "weight0-mod2") weight0_mod2(r, o, fx, engine);
    else if (id == "free-orbit") {
      for (int p = -o.p_range; p <= o.p_range; ++p)
        for (unsigned long m : {0UL, 2UL})
          absorb(r, free_orbit_acyclicity(p, m, &engine), p,
                 std::string("free orbit acyclic, ") + (m == 0 ? "Z" : "Z/2"));
    } else if (id == "transfer-restriction") {
      for (int p = -o.p_range; p <= o.p_range; ++p)
        absorb(r, transfer_restriction_check(p, &engine), p, "tr∘res = 2, res∘tr = 1 + τ");
    } else if (id == "cone-tower") {
      for (int p = 0; p <= o.cone_max; ++p)
        absorb(r, cone_tower_check(p, &engine).report, p, "cone(tr) ≅ Z_top((p+1)σ)");
    } else if (id == "formal-derivations") formal_derivations(r, o, fx);
    else if (id == "qclosed-coincidence") qclosed_coincidence(r, o, fx, engine);
    else if (id == "fixture-coverage") fixture_coverage(r, o, fx);
  } catch (const std::exception& e) {
    r.fail(std::string("error: ") + e.what());
  }
  std::sort(r.cells.begin(), r.cells.end());
  return r;
}

std::vector<SuiteReport> run_check(const std::string& id, const HarnessOptions& options, const FixtureSet& fixtures,
                                   Weight0Engine* engine) {
  Weight0Engine local(std::max(options.p_range, options.cone_max + 1));
  Weight0Engine& e = engine ? *engine : local;
  std::vector<SuiteReport> out;
  if (id == "all")
    for (const auto& s : suite_ids()) out.push_back(run_suite(s, options, fixtures, e));
  else
    out.push_back(run_suite(id, options, fixtures, e));
  return out;
}

}  // namespace eqmot
