#include "doctest.h"

#include "../oracles.hpp"
#include "eqmot/chaincx/chain_map.hpp"

using namespace eqmot;

namespace {

CochainComplex times_two() {
  return CochainComplex({{-1, 1}, {0, 1}}, {{-1, IntegerMatrix::from_rows({{2}})}});
}

ComplexPtr share(CochainComplex c) { return std::make_shared<const CochainComplex>(std::move(c)); }

}  // namespace

TEST_CASE("validation") {
  CHECK_NOTHROW(times_two().validate());
  CochainComplex bad({{0, 1}, {1, 1}, {2, 1}},
                     {{0, IntegerMatrix::from_rows({{1}})}, {1, IntegerMatrix::from_rows({{1}})}});
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("degree 0"), ComplexError);
  CHECK_THROWS_AS(CochainComplex({{0, 2}, {1, 1}}, {{0, IntegerMatrix::from_rows({{1}})}}), ComplexError);
}

TEST_CASE("tensor with the unit") {
  auto c = times_two();
  CHECK(tensor(c, CochainComplex::unit()) == c);
  CHECK(tensor(CochainComplex::unit(), c) == c);
}

TEST_CASE("tensor square of Z -2-> Z") {
  auto c = times_two();
  auto sq = tensor(c, c);
  CHECK(sq.rank(-2) == 1);
  CHECK(sq.rank(-1) == 2);
  CHECK(sq.rank(0) == 1);
  CHECK(sq.differential(-2) == IntegerMatrix::from_rows({{2}, {-2}}));
  CHECK(sq.differential(-1) == IntegerMatrix::from_rows({{2, 2}}));
  CHECK(sq.cohomology(0) == FgAbelianGroup::cyclic(2));
  CHECK(sq.cohomology(-1) == FgAbelianGroup::cyclic(2));
  CHECK(sq.cohomology(-2).is_zero());
}

TEST_CASE("cones") {
  auto z = share(CochainComplex::unit());
  auto acyclic = cone(ChainMap::identity(z));
  for (int i = -2; i <= 2; ++i) CHECK(acyclic.cohomology(i).is_zero());

  auto c = cone(ChainMap::scalar(z, 2));
  CHECK(c == times_two());
  CHECK(c.cohomology(0) == FgAbelianGroup::cyclic(2));
}

TEST_CASE("euler characteristic") {
  CHECK(times_two().euler_characteristic() == 0);
  CHECK(CochainComplex::unit().euler_characteristic() == 1);
}

TEST_CASE("induced maps of identity and zero") {
  auto c = share(times_two());
  auto id = induced_map(ChainMap::identity(c), 0);
  CHECK(id.is_isomorphism());
  CHECK(id.is_multiplication_by(1));
  CHECK(induced_map(ChainMap::zero(c, c), 0).is_zero());
  CHECK(induced_map(ChainMap::scalar(c, 3), 0).is_multiplication_by(1));
  // mod 2: H^{-1}(C; Z/2) = Z/2 and H^0 = Z/2
  CHECK(induced_map(ChainMap::identity(c), -1, 2).source() == FgAbelianGroup::cyclic(2));
  CHECK(induced_map(ChainMap::scalar(c, 2), -1, 2).is_zero());
}

TEST_CASE("mod m model agrees with rank counting") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto c = oracle::random_complex(rng, -1, 3);
    auto model = mod_m_model(c, 2);
    for (int i = -2; i <= 2; ++i) CHECK(model.cohomology(i) == c.cohomology(i, 2));
  }
}

TEST_CASE("json round trip") {
  auto c = times_two();
  auto j = c.to_json();
  CHECK(j.dump() == R"({"components":{"-1":1,"0":1},"differentials":{"-1":[[2]]}})");
  CHECK(CochainComplex::from_json(j) == c);
}

TEST_CASE("random complexes: euler characteristic equals free-rank alternating sum") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto c = oracle::random_complex(rng, -2, 4);
    REQUIRE(c.is_valid());
    long chi = 0;
    for (int i = -3; i <= 3; ++i) chi += (i % 2 == 0 ? 1 : -1) * static_cast<long>(c.cohomology(i).free_rank());
    CHECK(chi == c.euler_characteristic());
  }
}

TEST_CASE("Kunneth formula on random complexes") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    auto c = oracle::random_complex(rng, -1, 3);
    auto d = oracle::random_complex(rng, -1, 2);
    auto t = tensor(c, d);
    REQUIRE(t.is_valid());
    for (int n = -4; n <= 3; ++n) CHECK(t.cohomology(n) == oracle::kunneth(c, d, n));
  }
}

TEST_CASE("cone long exact sequence on random chain maps") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    auto s = share(oracle::random_complex(rng, -1, 3));
    auto t = share(oracle::random_complex(rng, -1, 3));
    auto f = oracle::random_chain_map(rng, s, t);
    REQUIRE(f.is_valid());
    auto report = check_cone_sequence(f);
    CHECK_MESSAGE(report.exact, report.failure);
  }
}
