#include "doctest.h"

#include "eqmot/tables/bidegree.hpp"
#include "eqmot/tables/closed_forms.hpp"
#include "eqmot/tables/render.hpp"

#include <fstream>
#include <sstream>

using namespace eqmot;

namespace {

const FixtureSet& fx() {
  static const FixtureSet set = FixtureSet::load(EQMOT_TEST_FIXTURE_DIR);
  return set;
}

const FieldProfile& qc() { return FieldProfile::get(ProfileKind::quadratically_closed); }
const FieldProfile& eucl() { return FieldProfile::get(ProfileKind::euclidean); }
const FieldProfile& freal() { return FieldProfile::get(ProfileKind::formally_real); }

FormalGroup G(const std::string& s) { return FormalGroup::parse(s); }

// The point tables written out by hand, independent of the fixture files.
FgAbelianGroup point_oracle(int a, int p, Coeff coeff) {
  const FgAbelianGroup zero, z = FgAbelianGroup::free(1), z2 = FgAbelianGroup::cyclic(2);
  if (coeff == Coeff::Z2) return ((0 <= -a && -a <= p) || (1 < a && a <= -p)) ? z2 : zero;
  bool a_even = a % 2 == 0;
  if (p >= 0) {
    if (p % 2 == 0 && a == -p) return z;
    return (-p < a && a <= 0 && a_even) ? z2 : zero;
  }
  if (p % 2 == 0 && a == -p) return z;
  int top = p % 2 == 0 ? -p - 1 : -p;
  return (1 < a && a <= top && !a_even) ? z2 : zero;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kOneTable = R"({
  "family": "weight0",
  "tables": [{
    "id": "toy", "coeff": "Z", "coords": "plain", "domain": {"n_min": 0, "n_max": 2},
    "profiles": ["general"],
    "rows": [
      {"when": {"m_min": "-n", "m_max": "0"}, "value": "Z/2", "citation": "toy row"},
      {"when": {"m_eq": "0"}, "value": "Z/2", "citation": "CITE0"},
      {"when": {"otherwise": true}, "value": "0", "citation": "toy otherwise"}
    ]
  }]
})";

}  // namespace

TEST_CASE("affine bounds and predicates") {
  CHECK(Affine::parse("n-1").at(5) == 4);
  CHECK(Affine::parse("-n").at(3) == -3);
  CHECK(Affine::parse("-n+1").at(4) == -3);
  CHECK(Affine::parse(" 2 ").at(100) == 2);
  CHECK(Affine::parse("2n+3").at(1) == 5);
  CHECK(Affine::parse("-n+1").to_string() == "-n+1");
  CHECK_THROWS_AS(Affine::parse("m+1"), FixtureError);

  Predicate pr;
  pr.n_parity = 0;
  pr.m_parity = 1;
  pr.m_lower.push_back(Affine::parse("3"));
  pr.m_upper.push_back(Affine::parse("n-1"));
  CHECK(pr.matches(6, 3));
  CHECK(pr.matches(6, 5));
  CHECK_FALSE(pr.matches(6, 4));
  CHECK_FALSE(pr.matches(6, 7));
  CHECK_FALSE(pr.matches(-6, 3));
  CHECK_FALSE(pr.matches(5, 3));
}

TEST_CASE("fixture files load with citations on every row") {
  CHECK(fx().tables().size() >= 20);
  CHECK(fx().citation_problems().empty());
  for (const auto& t : fx().tables()) {
    CHECK_MESSAGE(!t.rows.empty(), t.id);
    CHECK_MESSAGE(!t.profiles.empty(), t.id);
  }
  CHECK_THROWS_AS(fx().table("no-such-table"), FixtureError);
}

TEST_CASE("malformed fixtures are rejected") {
  std::string bad_key = kOneTable;
  bad_key.replace(bad_key.find("\"m_eq\""), 6, "\"m_is\"");
  CHECK_THROWS_AS(FixtureSet::from_json_text(bad_key), FixtureError);

  std::string bad_value = kOneTable;
  bad_value.replace(bad_value.find("\"0\", \"citation\": \"toy otherwise\""), 3, "\"Q\"");
  CHECK_THROWS_AS(FixtureSet::from_json_text(bad_value), FixtureError);

  CHECK_THROWS_AS(FixtureSet::from_json_text("{ not json"), FixtureError);
  CHECK_THROWS_AS(FixtureSet::load("/nonexistent/fixture/dir"), FixtureError);
}

TEST_CASE("bredon point closed form") {
  CHECK(bredon_point_closed_form(-2, 4, Coeff::Z, fx()).to_string() == "Z/2");
  CHECK(bredon_point_closed_form(3, -5, Coeff::Z, fx()).to_string() == "Z/2");
  CHECK(bredon_point_closed_form(0, 0, Coeff::Z, fx()).to_string() == "Z");
  CHECK(bredon_point_closed_form(-4, 4, Coeff::Z, fx()).to_string() == "Z");
  CHECK(bredon_point_closed_form(4, -4, Coeff::Z, fx()).to_string() == "Z");
  CHECK(bredon_point_closed_form(3, -4, Coeff::Z, fx()).to_string() == "Z/2");
  CHECK(bredon_point_closed_form(1, -4, Coeff::Z, fx()).is_zero());

  for (int p = -20; p <= 20; ++p)
    for (int a = -24; a <= 24; ++a)
      for (Coeff c : {Coeff::Z, Coeff::Z2}) {
        INFO("a=" << a << " p=" << p << " " << coeff_name(c));
        CHECK(bredon_point_closed_form(a, p, c, fx()) == point_oracle(a, p, c));
      }
}

TEST_CASE("weight 0 closed form") {
  CHECK(weight0_closed_form(-3, 3, Coeff::Z, fx()).is_zero());
  CHECK(weight0_closed_form(5, -6, Coeff::Z, fx()).to_string() == "Z/2");
  CHECK(weight0_closed_form(2, -2, Coeff::Z2, fx()).to_string() == "Z/2");
  CHECK(weight0_closed_form(1, -1, Coeff::Z2, fx()).is_zero());
  CHECK(weight0_closed_form(6, -6, Coeff::Z, fx()).to_string() == "Z");
  CHECK(weight0_closed_form(0, 0, Coeff::Z, fx()).to_string() == "Z");

  // the coincidence with the point, on a grid wider than the acceptance grid
  for (int p = -20; p <= 20; ++p)
    for (int a = -24; a <= 24; ++a)
      for (Coeff c : {Coeff::Z, Coeff::Z2}) {
        INFO("a=" << a << " p=" << p << " " << coeff_name(c));
        CHECK(weight0_closed_form(a, p, c, fx()) == point_oracle(a, p, c));
      }
}

TEST_CASE("weight 1 and weight sigma closed forms") {
  for (const auto* prof : {&qc(), &eucl(), &freal(), &FieldProfile::get(ProfileKind::general)})
    CHECK(weight1_closed_form(0, 1, Coeff::Z, *prof, fx()) == G("Z/2"));
  CHECK(weight_sigma_closed_form(1, 0, Coeff::Z, freal(), fx()) == G("k*2"));
  CHECK(weight_sigma_closed_form(1, 0, Coeff::Z, FieldProfile::get(ProfileKind::general), fx()) == G("k*2"));
  // m = 2, n = 3 in the negative cone is (a, p) = (2, -3)
  CHECK(weight_sigma_closed_form(2, -3, Coeff::Z2, eucl(), fx()) == normalize(G("k*/k*2 ⊕ Z/2"), eucl()));
  CHECK(weight_sigma_closed_form(2, -3, Coeff::Z2, eucl(), fx()) == G("(Z/2)^2"));
  // positive cone, n = 2: H^{2σ-1,1} = k*, H^{2σ,1} = Z/2, H^{2σ+1,1} = k*/k*2
  CHECK(weight1_closed_form(-1, 2, Coeff::Z, eucl(), fx()) == G("k*"));
  CHECK(weight1_closed_form(0, 2, Coeff::Z, eucl(), fx()) == G("Z/2"));
  CHECK(weight1_closed_form(1, 2, Coeff::Z, eucl(), fx()) == G("Z/2"));
  CHECK(weight1_closed_form(1, 2, Coeff::Z, qc(), fx()).is_zero());
  // the negative cone is stated for formally real fields too, the positive one is not
  CHECK(weight1_closed_form(4, -4, Coeff::Z, freal(), fx()) == G("k*/k*2"));
  CHECK_THROWS_AS(weight1_closed_form(-1, 2, Coeff::Z, freal(), fx()), TableRangeError);
  CHECK_THROWS_WITH_AS(weight_sigma_closed_form(0, 5, Coeff::Z, FieldProfile::get(ProfileKind::general), fx()),
                       doctest::Contains("outside theorem range"), TableRangeError);

  auto hit = closed_form_hit(Family::sigma, 2, -3, Coeff::Z2, ProfileKind::euclidean, fx());
  CHECK(hit.table->id == "sigma-mod2-negative");
  CHECK(hit.row->citation.find("2\\leq m\\leq n") != std::string::npos);
}

TEST_CASE("bidegree reduction") {
  Reduction z = reduce_bidegree({3, 5, -1, -1});
  CHECK(z.kind == ReductionKind::zero);
  CHECK(!z.citation.empty());

  Reduction r = reduce_bidegree({1, 7, -2, 2});
  CHECK(r.kind == ReductionKind::redirect);
  CHECK(r.table == TargetTable::weight0);
  CHECK(r.a == 5);
  CHECK(r.p == 3);

  Reduction s = reduce_bidegree({2, 4, 0, 1}, Space::borel);
  CHECK(s.kind == ReductionKind::redirect);
  CHECK(s.table == TargetTable::weight_sigma);
  CHECK(s.a == 2);
  CHECK(s.p == 4);

  Reduction d = reduce_bidegree({3, 1, 1, 0}, Space::borel);
  CHECK(d.table == TargetTable::weight_sigma);
  CHECK(d.a == 1);
  CHECK(d.p == 3);
  CHECK(reduce_bidegree({4, 1, 1, 0}, Space::borel).table == TargetTable::weight1);
  CHECK(reduce_bidegree({0, 0, 0, 0}, Space::borel).table == TargetTable::weight0);

  CHECK(reduce_bidegree({0, 2, 1, 0}).table == TargetTable::weight1);
  CHECK(reduce_bidegree({0, 2, 0, 1}).table == TargetTable::weight_sigma);
  CHECK(reduce_bidegree({0, 2, 2, 1}).kind == ReductionKind::not_reducible);
  CHECK(reduce_bidegree({0, 0, 2, -1}).kind == ReductionKind::not_reducible);
  CHECK(Bidegree{1, -2, 0, 1}.to_string() == "H^{1-2σ,σ}");
}

TEST_CASE("harness refuses uncited fixtures and reports overlaps") {
  std::string uncited = kOneTable;
  uncited.replace(uncited.find("CITE0"), 5, "     ");
  FixtureSet a = FixtureSet::from_json_text(uncited, "toy.json");
  Weight0Engine engine(2);
  HarnessOptions o;
  o.coverage_range = 4;
  SuiteReport refused = run_suite("fixture-coverage", o, a, engine);
  CHECK_FALSE(refused.passed());
  CHECK(refused.checked == 0);
  CHECK(refused.failures.front().find("refusing") != std::string::npos);

  // rows 0 and 1 both hold at m = 0
  FixtureSet b = FixtureSet::from_json_text(kOneTable, "toy.json");
  SuiteReport overlap = run_suite("fixture-coverage", o, b, engine);
  CHECK_FALSE(overlap.passed());
  bool found = false;
  for (const auto& f : overlap.failures) found = found || f.find("rows 0 1 overlap at n=1, m=0") != std::string::npos;
  CHECK(found);

  CHECK_THROWS_AS(run_suite("no-such-suite", o, b, engine), std::invalid_argument);
}

TEST_CASE("shipped fixtures are disjoint, total and mutually consistent") {
  Weight0Engine engine(2);
  HarnessOptions o;
  o.coverage_range = 30;
  SuiteReport r = run_suite("fixture-coverage", o, fx(), engine);
  for (const auto& f : r.failures) INFO(f);
  CHECK(r.passed());
  CHECK(r.checked > 1000);
}

TEST_CASE("rendering") {
  Weight0Engine engine(3);
  auto cells = weight0_grid(3, 5, Coeff::Z, engine, fx());
  CHECK(cells.size() == 7 * 11);
  std::string csv = render_grid(cells, Format::csv);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 8);
  CHECK(csv.find("2,0,0,0,Z,0,Z/2,0,0,0,0,0\n") != std::string::npos);

  std::string json = cells_json({cells.front()});
  for (const char* key : {"\"a\"", "\"p\"", "\"weight\"", "\"coeff\"", "\"group\"", "\"rank\"", "\"torsion\"",
                          "\"source\": \"computed\"", "\"citation\""})
    CHECK_MESSAGE(json.find(key) != std::string::npos, key);

  CHECK(group_json(G("Z ⊕ (Z/2)^2 ⊕ k*/k*2")) ==
        R"({"rank":1,"torsion":[2,2],"symbolic":["k*/k*2"],"text":"Z ⊕ (Z/2)^2 ⊕ k*/k*2"})");

  GridCell quoted{0, 0, "1", Coeff::Z, G("k*"), "fixture", "x, \"y\""};
  CHECK(cells_csv({quoted}) == "a,p,weight,coeff,group,source,citation\n0,0,1,Z,k*,fixture,\"x, \"\"y\"\"\"\n");

  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("export is deterministic") {
  auto base = std::filesystem::temp_directory_path() / "eqmot_export_test";
  std::filesystem::remove_all(base);
  ExportOptions o;
  o.p_range = 3;
  o.a_range = 5;
  o.n_max = 4;
  for (Format f : {Format::json, Format::csv}) {
    o.format = f;
    Weight0Engine e1(3), e2(3);
    auto first = export_tables(base / "one", o, e1, fx());
    auto second = export_tables(base / "two", o, e2, fx());
    REQUIRE(first.size() == second.size());
    CHECK(first.size() == 16);
    for (std::size_t i = 0; i < first.size(); ++i) {
      CHECK(first[i].filename() == second[i].filename());
      CHECK(slurp(first[i]) == slurp(second[i]));
    }
  }
  std::filesystem::remove_all(base);
}
