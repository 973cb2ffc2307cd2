#include "doctest.h"

#include "eqmot/formal/derive.hpp"

#include <functional>
#include <string>

using namespace eqmot;
using K = AtomKind;

namespace {

const FieldProfile& qc() { return FieldProfile::get(ProfileKind::quadratically_closed); }
const FieldProfile& euc() { return FieldProfile::get(ProfileKind::euclidean); }
const FieldProfile& freal() { return FieldProfile::get(ProfileKind::formally_real); }
const FieldProfile& gen() { return FieldProfile::get(ProfileKind::general); }

bool even(int x) { return x % 2 == 0; }

// Test-side transcription of the weight 1 and weight sigma tables, written in the
// (n, m) coordinates of the statements: positive cone H^{nσ-m}, negative cone H^{m-nσ}.
using Table = std::function<FormalGroup(int n, int m)>;

FormalGroup pos_weight1(int n, int m) {
  if (n % 2 == 0) {
    if (m == n - 1) return {K::Kstar};
    if (m >= -1 && m < n - 1 && !even(m)) return {K::KmodSq};
    if (m >= 0 && m < n - 1 && even(m)) return {K::Z2};
    return {};
  }
  if (m >= -1 && m < n - 1 && !even(m)) return {K::KmodSq};
  if (m >= 0 && m <= n - 1 && even(m)) return {K::Z2};
  return {};
}

FormalGroup neg_weight1(int n, int m) {
  if (n == 0) return m == 1 ? FormalGroup{K::Kstar} : FormalGroup{};
  if (even(n)) {
    if (m == n + 1) return {K::Kstar};
    if (m > 2 && m <= n) return even(m) ? FormalGroup{K::KmodSq} : FormalGroup{K::Z2};
    return {};
  }
  if (m > 2 && m <= n + 1) return even(m) ? FormalGroup{K::KmodSq} : FormalGroup{K::Z2};
  return {};
}

FormalGroup neg_sigma(int n, int m) {
  if (even(n)) {
    if (m == n + 1) return {K::Kstar};
    if (m >= 2 && m <= n && even(m)) return {K::KmodSq};
    if (m > 2 && m <= n && !even(m)) return {K::Z2};
    return {};
  }
  if (m >= 2 && m <= n + 1 && even(m)) return {K::KmodSq};
  if (m > 2 && m <= n && !even(m)) return {K::Z2};
  return {};
}

FormalGroup pos_sigma(int n, int m) {
  if (n == 0) return m == -1 ? FormalGroup{K::Ksq} : FormalGroup{};
  if (even(n)) {
    if (m == n - 1) return {K::Kstar};
    if (m >= 1 && m < n - 1 && !even(m)) return {K::KmodSq};
    if (m >= 0 && m < n - 1 && even(m)) return {K::Z2};
    return {};
  }
  if (m >= 1 && m < n - 1 && !even(m)) return {K::KmodSq};
  if (m >= 0 && m <= n - 1 && even(m)) return {K::Z2};
  return {};
}

FormalGroup both() { return {K::KmodSq, K::Z2}; }

FormalGroup pos_weight1_mod2(int n, int m) {
  if (m >= 0 && m <= n - 1) return both();
  if (m >= 0 && m == n) return {K::Z2};
  if (m == -1 && m < n) return {K::KmodSq};
  return {};
}

FormalGroup neg_weight1_mod2(int n, int m) {
  if (m >= 3 && m <= n) return both();
  if (m == 2 && m <= n) return {K::Z2};
  if (m == n + 1 && n >= 2) return {K::KmodSq};
  return {};
}

FormalGroup neg_sigma_mod2(int n, int m) {
  if (m >= 2 && m <= n) return both();
  if ((m >= 2 && m == n + 1) || m == 1) return {K::KmodSq};
  return {};
}

FormalGroup pos_sigma_mod2(int n, int m) {
  if (n == 0) {
    if (m == 0) return {K::Tors2Ksq};
    if (m == -1) return {K::KsqMod4};
    return {};
  }
  if (m >= 1 && m <= n - 1) return both();
  if ((m >= 1 && m == n) || m == 0) return {K::Z2};
  return {};
}

// walks every derived cell of the cone and compares with the table
void compare_cone(const DerivedTables& t, Cone cone, Coeff coeff, const Table& table, int n_first) {
  const FieldProfile& profile = FieldProfile::get(t.profile);
  int a_hi = coeff == Coeff::Z2 ? t.a_max - 1 : t.a_max;
  for (int n = n_first; n <= t.n_max; ++n) {
    int p = cone == Cone::positive ? n : -n;
    for (int a = t.a_min; a <= a_hi; ++a) {
      int m = cone == Cone::positive ? -a : a;
      auto got = t.at(a, p, coeff);
      REQUIRE_MESSAGE(got, "missing cell a=" << a << " p=" << p);
      FormalGroup want = normalize(table(n, m), profile);
      CHECK_MESSAGE(got->value == want, profile.short_name() << " weight " << weight_name(t.weight) << " "
                                                             << coeff_name(coeff) << " a=" << a << " p=" << p
                                                             << ": got " << got->value.to_string() << ", want "
                                                             << want.to_string());
      CHECK_FALSE(got->trail.empty());
      for (const auto& id : got->trail) CHECK(AxiomBook::standard().holds(id, t.profile));
    }
  }
}

}  // namespace

TEST_CASE("atoms and group rendering") {
  CHECK(FormalGroup{}.to_string() == "0");
  CHECK(FormalGroup{K::Kstar, K::Zero}.to_string() == "k*");
  FormalGroup g{K::KmodSq, K::Z2, K::Z, K::Z2, K::Z};
  CHECK(g.to_string() == "Z^2 ⊕ (Z/2)^2 ⊕ k*/k*2");
  CHECK(FormalGroup::parse(g.to_string()) == g);
  FormalGroup h{Atom::et(2, 1), K::Kstar, K::Kstar, Atom::mot(0, 2), K::Tors2Ksq};
  CHECK(FormalGroup::parse(h.to_string()) == h);
  CHECK(FormalGroup::parse("0").is_zero());
  CHECK(FormalGroup::parse("Z + Z/2") == FormalGroup{K::Z, K::Z2});
  CHECK_THROWS_AS(FormalGroup::parse("Q"), FormalError);

  CHECK(FormalGroup::from_fg(FgAbelianGroup::parse("Z ⊕ (Z/2)^2")) == FormalGroup{K::Z, K::Z2, K::Z2});
  CHECK_THROWS_AS(FormalGroup::from_fg(FgAbelianGroup::cyclic(4)), FormalError);
  CHECK(FormalGroup{K::Z, K::Z2}.to_fg() == FgAbelianGroup::parse("Z ⊕ Z/2"));
  CHECK_FALSE(FormalGroup{K::Kstar}.to_fg());
  CHECK(FormalGroup{K::Z2, K::KmodSq, Atom::et(1, 1)}.is_two_torsion());
  CHECK_FALSE(FormalGroup{K::Z2, K::KmodSq}.is_finite_elementary());
  CHECK_FALSE(FormalGroup{K::Ksq}.is_two_torsion());
}

TEST_CASE("normalize") {
  for (auto kind : FieldProfile::all_kinds())
    CHECK(normalize({K::Kstar, K::Zero}, FieldProfile::get(kind)) == FormalGroup{K::Kstar});
  CHECK(normalize({K::KmodSq}, qc()).is_zero());
  CHECK(normalize({K::KmodSq}, euc()) == FormalGroup{K::Z2});
  CHECK(normalize({K::Ksq, K::Tors2K}, qc()) == FormalGroup{K::Z2, K::Kstar});
  CHECK(normalize({K::Tors2Ksq}, qc()) == FormalGroup{K::Z2});
  CHECK(normalize({K::Tors2Ksq}, euc()).is_zero());
  CHECK(normalize({K::KsqMod4, K::Tors2K}, euc()) == FormalGroup{K::Z2});
  CHECK(normalize({K::KmodSq, K::Ksq, K::Tors2Ksq}, gen()) == FormalGroup{K::Ksq, K::KmodSq, K::Tors2Ksq});
  CHECK(normalize({K::KmodSq}, freal()) == FormalGroup{K::KmodSq});
}

TEST_CASE("profiles") {
  CHECK(FieldProfile::parse("qclosed").kind() == ProfileKind::quadratically_closed);
  CHECK(FieldProfile::parse("freal").kind() == ProfileKind::formally_real);
  CHECK(FieldProfile::parse("euclidean").short_name() == "euclidean");
  CHECK_THROWS(FieldProfile::parse("finite"));
  CHECK(qc().minus_one_is_square() == Tristate::yes);
  CHECK(euc().minus_one_is_square() == Tristate::no);
  CHECK(freal().minus_one_is_square() == Tristate::no);
  CHECK(gen().minus_one_is_square() == Tristate::unknown);
  for (auto kind : FieldProfile::all_kinds()) {
    auto report = check_confluence(FieldProfile::get(kind));
    CHECK_MESSAGE(report.passed, FieldProfile::get(kind).name() << ": "
                                                                << (report.failures.empty() ? "" : report.failures[0]));
    CHECK(report.checked > 50);
  }
}

TEST_CASE("tensor, two torsion and universal coefficients") {
  CHECK(two_torsion({K::Kstar}, euc()) == FormalGroup{K::Z2});
  CHECK(tensor_Z2({K::Kstar}, gen()) == FormalGroup{K::KmodSq});
  CHECK(tensor_Z2({K::Z}, gen()) == FormalGroup{K::Z2});
  CHECK(tensor_Z2({K::Ksq}, gen()) == FormalGroup{K::KsqMod4});
  CHECK(two_torsion({K::Z}, gen()).is_zero());
  CHECK(two_torsion({K::KmodSq, K::Z2}, gen()) == FormalGroup{K::KmodSq, K::Z2});
  CHECK(two_torsion({K::Ksq}, gen()) == FormalGroup{K::Tors2Ksq});
  CHECK_THROWS_AS(tensor_Z2({Atom::mot(0, 2)}, gen()), FormalError);
  CHECK_THROWS_AS(two_torsion({Atom::mot(0, 2)}, qc()), FormalError);

  CHECK(universal_coeff({K::Z2}, {K::KmodSq}, gen()) == FormalGroup{K::Z2, K::KmodSq});
  // by hand: k*⊗Z/2 = k*/k*2 = Z/2 and _2(Z/2) = Z/2 for a euclidean field
  CHECK(universal_coeff({K::Kstar}, {K::Z2}, euc()) == FormalGroup{K::Z2, K::Z2});
  CHECK(universal_coeff({}, {}, gen()).is_zero());
}

TEST_CASE("motivic oracle and the diagonal decomposition") {
  MotivicOracle mot;
  CHECK(mot.value(0, 0, Coeff::Z) == FormalGroup{K::Z});
  CHECK(mot.value(1, 1, Coeff::Z) == FormalGroup{K::Kstar});
  CHECK(mot.value(0, 1, Coeff::Z).is_zero());
  CHECK(mot.value(0, 1, Coeff::Z2) == FormalGroup{K::Z2});
  CHECK(mot.value(1, 1, Coeff::Z2) == FormalGroup{K::KmodSq});
  CHECK(mot.value(3, 2, Coeff::Z).is_zero());
  CHECK(mot.value(-1, 0, Coeff::Z).is_zero());

  CHECK(nie_decompose(0, 1, 0, Coeff::Z) == FormalGroup{K::Z2});
  CHECK(nie_decompose(-1, 1, 0, Coeff::Z) == FormalGroup{K::Kstar});
  CHECK(nie_decompose(1, 1, 0, Coeff::Z).is_zero());
  // direct summation: H^{0,0}(Z/2) ⊕ H^{2,1}(Z/2) ⊕ H^{4,2}(Z) = Z/2 ⊕ 0 ⊕ 0
  CHECK(nie_decompose(0, 2, 0, Coeff::Z) == FormalGroup{K::Z2});
  // with a weight 2 term that does not vanish: H^{-2,0} ⊕ H^{0,1}(Z/2) ⊕ H^{2,2}(Z)
  CHECK(nie_decompose(-2, 2, 0, Coeff::Z) == FormalGroup{K::Z2, Atom::mot(2, 2)});
  CHECK(nie_decompose(0, 1, 0, Coeff::Z2) == FormalGroup{K::Z2});
  CHECK(nie_decompose(-1, 1, 0, Coeff::Z2) == FormalGroup{K::Z2, K::KmodSq});
  CHECK(nie_decompose(-2, 1, 0, Coeff::Z2) == FormalGroup{K::Z2});
  CHECK(nie_decompose(-3, 1, 0, Coeff::Z2).is_zero());
  CHECK_THROWS_AS(nie_decompose(0, -1, 0, Coeff::Z), std::invalid_argument);
  CHECK(parse_coeff("2") == Coeff::Z2);
  CHECK(parse_coeff("Z") == Coeff::Z);
  CHECK_THROWS(parse_coeff("3"));
}

TEST_CASE("multiplication by two") {
  auto m = mult2({K::Kstar});
  CHECK(m.kernel == FormalGroup{K::Tors2K});
  CHECK(m.image == FormalGroup{K::Ksq});
  CHECK(m.cokernel == FormalGroup{K::KmodSq});
  auto z = mult2({K::Z});
  CHECK(z.kernel.is_zero());
  CHECK(z.cokernel == FormalGroup{K::Z2});
  auto t = mult2({K::Z2});
  CHECK(t.image.is_zero());
  CHECK_THROWS_AS(mult2({K::Ksq}), FormalError);
}

TEST_CASE("solve_window examples") {
  SUBCASE("zero flanks") {
    LesWindow w;
    w.add_node("0", Fact{{}, {}});
    std::size_t x = w.add_node("X");
    w.add_node("0", Fact{{}, {}});
    auto s = solve_window(w, gen());
    REQUIRE(s.ok());
    REQUIRE(s.nodes[x]);
    CHECK(s.nodes[x]->value.is_zero());
    CHECK(s.unknown.empty());
  }
  SUBCASE("multiplication by two on k*") {
    LesWindow w;
    w.add_node("0", Fact{{}, {}});
    std::size_t x = w.add_node("X");
    std::size_t k1 = w.add_node("k*", Fact{{K::Kstar}, {"B-mot"}});
    w.add_node("k*", Fact{{K::Kstar}, {"B-mot"}});
    std::size_t y = w.add_node("Y");
    w.add_node("0", Fact{{}, {}});
    w.tag(k1, ArrowTag::known(mult2({K::Kstar}), {"A-comp"}));
    for (const auto* profile : {&gen(), &euc(), &qc()}) {
      auto s = solve_window(w, *profile, &AxiomBook::standard());
      REQUIRE(s.ok());
      CHECK(s.nodes[x]->value == normalize({K::Tors2K}, *profile));
      CHECK(s.nodes[y]->value == normalize({K::KmodSq}, *profile));
      CHECK(s.nodes[y]->trail.count("A-comp"));
    }
  }
  SUBCASE("multiplication by two on Z") {
    LesWindow w;
    w.add_node("0", Fact{{}, {}});
    std::size_t x = w.add_node("X");
    std::size_t z = w.add_node("Z", Fact{{K::Z}, {}});
    w.add_node("Z", Fact{{K::Z}, {}});
    std::size_t y = w.add_node("Y");
    w.add_node("0", Fact{{}, {}});
    w.tag(z, ArrowTag::known(mult2({K::Z}), {}));
    auto s = solve_window(w, gen());
    REQUIRE(s.ok());
    CHECK(s.nodes[x]->value.is_zero());
    CHECK(s.nodes[y]->value == FormalGroup{K::Z2});
  }
  SUBCASE("short exact sequence") {
    LesWindow w;
    w.add_node("0", Fact{{}, {}});
    w.add_node("A", Fact{{K::KmodSq, K::Z2}, {}});
    std::size_t b = w.add_node("B");
    w.add_node("0", Fact{{}, {}});
    auto s = solve_window(w, gen());
    REQUIRE(s.ok());
    CHECK(s.nodes[b]->value == FormalGroup{K::KmodSq, K::Z2});
  }
  SUBCASE("unknowns stay unknown") {
    LesWindow w;
    w.add_node("0", Fact{{}, {}});
    std::size_t x = w.add_node("X");
    w.add_node("k*", Fact{{K::Kstar}, {}});
    std::size_t y = w.add_node("Y");
    w.add_node("0", Fact{{}, {}});
    auto s = solve_window(w, gen());
    REQUIRE(s.ok());
    CHECK_FALSE(s.nodes[x]);
    CHECK_FALSE(s.nodes[y]);
    CHECK(s.unknown.size() == 2);
  }
  SUBCASE("elementary counting") {
    LesWindow w;
    w.add_node("Z/2", Fact{{K::Z2}, {}});
    std::size_t mid = w.add_node("M", Fact{{K::Z2, K::Z2}, {}});
    std::size_t r = w.add_node("R");
    w.add_node("0", Fact{{}, {}});
    w.tag(0, ArrowTag::injective({}));
    auto s = solve_window(w, gen());
    REQUIRE(s.ok());
    REQUIRE(s.arrows[mid].image);
    CHECK(s.arrows[mid].image->value == FormalGroup{K::Z2});
    CHECK(s.nodes[r]->value == FormalGroup{K::Z2});
  }
}

TEST_CASE("solve_window reports contradictions") {
  SUBCASE("zero flanks around a nonzero group") {
    LesWindow w;
    w.add_node("0", Fact{{}, {}});
    w.add_node("X", Fact{{K::Z2}, {"seed"}});
    w.add_node("0", Fact{{}, {}});
    auto s = solve_window(w, gen());
    REQUIRE_FALSE(s.ok());
    CHECK(s.contradiction->trail.count("seed"));
  }
  SUBCASE("an iso between different groups") {
    LesWindow w;
    w.add_node("0", Fact{{}, {}});
    w.add_node("A", Fact{{K::Z}, {}});
    w.add_node("B", Fact{{K::Z2}, {}});
    w.add_node("0", Fact{{}, {}});
    auto s = solve_window(w, gen());
    CHECK_FALSE(s.ok());
  }
  SUBCASE("orders do not multiply") {
    LesWindow w;
    w.add_node("0", Fact{{}, {}});
    w.add_node("A", Fact{{K::Z2}, {}});
    w.add_node("B", Fact{{K::Z2, K::Z2, K::Z2}, {}});
    w.add_node("C", Fact{{K::Z2}, {}});
    w.add_node("0", Fact{{}, {}});
    auto s = solve_window(w, gen());
    CHECK_FALSE(s.ok());
  }
  SUBCASE("an axiom outside its hypotheses") {
    LesWindow w;
    w.add_node("Z/2", Fact{{K::Z2}, {}});
    w.add_node("k*", Fact{{K::Kstar}, {}});
    w.tag(0, ArrowTag::zero({"A-alpha"}));
    auto ok = solve_window(w, euc(), &AxiomBook::standard());
    CHECK(ok.ok());
    auto bad = solve_window(w, freal(), &AxiomBook::standard());
    REQUIRE_FALSE(bad.ok());
    CHECK(bad.contradiction->trail.count("A-alpha"));
    auto unknown = LesWindow(w);
    unknown.tag(0, ArrowTag::zero({"A-made-up"}));
    CHECK_FALSE(solve_window(unknown, qc(), &AxiomBook::standard()).ok());
  }
}

TEST_CASE("axiom book") {
  const auto& book = AxiomBook::standard();
  for (const char* id : {"B-mot", "B-prop", "B-sigma", "B-nie", "B-uc", "A-comp", "A-alpha", "A-alpha1", "A-tau",
                         "A-delta-sq", "A-vanish", "A-EC2"}) {
    REQUIRE(book.contains(id));
    CHECK_FALSE(book.get(id).citation.empty());
    CHECK(book.holds(id, ProfileKind::quadratically_closed));
  }
  CHECK_FALSE(book.holds("A-alpha", ProfileKind::formally_real));
  CHECK(book.holds("A-tau", ProfileKind::formally_real));
  CHECK_FALSE(book.holds("A-tau", ProfileKind::general));
  CHECK_THROWS_AS(book.get("nope"), std::out_of_range);
}

TEST_CASE("derivation examples") {
  auto w1 = derive_weight1(euc(), 4);
  REQUIRE(w1.complete());
  CHECK(w1.integral_at(-1, 2)->value == FormalGroup{K::Kstar});
  CHECK(w1.integral_at(0, 2)->value == FormalGroup{K::Z2});
  CHECK(w1.integral_at(1, 2)->value == normalize({K::KmodSq}, euc()));

  auto ws = derive_weight_sigma(qc(), 4);
  REQUIRE(ws.complete());
  CHECK(ws.integral_at(3, -3)->value == FormalGroup{K::Z2});
  CHECK(ws.integral_at(4, -3)->value.is_zero());

  auto wf = derive_weight1(freal(), 4);
  REQUIRE(wf.complete());
  CHECK(wf.integral_at(4, -4)->value == FormalGroup{K::KmodSq});
  CHECK(wf.integral_at(5, -4)->value == FormalGroup{K::Kstar});
  CHECK(wf.integral_at(3, -4)->value == FormalGroup{K::Z2});
  CHECK(wf.integral_at(4, -4)->trail.count("A-alpha1"));
  CHECK_FALSE(wf.has_column(2));
  CHECK(wf.skipped.size() == 1);

  auto g = derive_weight_sigma(gen(), 3);
  CHECK(g.complete());
  CHECK(g.skipped.size() == 2);
  CHECK(g.integral_at(1, 0)->value == FormalGroup{K::Ksq});
  CHECK(g.mod2_at(0, 0)->value == FormalGroup{K::Tors2Ksq});

  CHECK_THROWS_AS(derive_weight1(qc(), 0), std::invalid_argument);
  CHECK(parse_weight("σ") == Weight::sigma);
  CHECK_FALSE(cone_admissible(Weight::sigma, Cone::positive, ProfileKind::formally_real));
  CHECK(cone_admissible(Weight::sigma, Cone::negative, ProfileKind::formally_real));
}

TEST_CASE("derived tables reproduce the closed forms up to n = 16") {
  const int n_max = 16;
  for (const auto* profile : {&qc(), &euc()}) {
    auto w1 = derive_weight1(*profile, n_max);
    REQUIRE(w1.complete());
    compare_cone(w1, Cone::positive, Coeff::Z, pos_weight1, 1);
    compare_cone(w1, Cone::negative, Coeff::Z, neg_weight1, 0);
    compare_cone(w1, Cone::positive, Coeff::Z2, pos_weight1_mod2, 0);
    compare_cone(w1, Cone::negative, Coeff::Z2, neg_weight1_mod2, 1);

    auto ws = derive_weight_sigma(*profile, n_max);
    REQUIRE(ws.complete());
    compare_cone(ws, Cone::positive, Coeff::Z, pos_sigma, 0);
    compare_cone(ws, Cone::negative, Coeff::Z, neg_sigma, 1);
    compare_cone(ws, Cone::positive, Coeff::Z2, pos_sigma_mod2, 0);
    compare_cone(ws, Cone::negative, Coeff::Z2, neg_sigma_mod2, 1);
  }
  auto w1 = derive_weight1(freal(), n_max);
  REQUIRE(w1.complete());
  compare_cone(w1, Cone::negative, Coeff::Z, neg_weight1, 0);
  auto ws = derive_weight_sigma(freal(), n_max);
  REQUIRE(ws.complete());
  compare_cone(ws, Cone::negative, Coeff::Z, neg_sigma, 1);
}

TEST_CASE("quadratically closed mod 2 tables coincide with the point") {
  auto point = [](int a, int p) {
    bool hit = (0 <= -a && -a <= p) || (1 < a && a <= -p);
    return hit ? FormalGroup{K::Z2} : FormalGroup{};
  };
  const int n_max = 12;
  auto w1 = derive_weight1(qc(), n_max);
  auto ws = derive_weight_sigma(qc(), n_max);
  for (int p = -n_max; p <= n_max; ++p)
    for (int a = w1.a_min; a < w1.a_max; ++a) {
      auto x = w1.mod2_at(a, p);
      auto y = ws.mod2_at(a, p);
      REQUIRE(x);
      REQUIRE(y);
      CHECK_MESSAGE(x->value == point(a, p), "weight 1 a=" << a << " p=" << p);
      CHECK_MESSAGE(y->value == point(a, p), "weight sigma a=" << a << " p=" << p);
    }
}
