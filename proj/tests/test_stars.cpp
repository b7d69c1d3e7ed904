#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crosscut/error.hpp"
#include "crosscut/fixtures.hpp"
#include "crosscut/stars.hpp"

using namespace crosscut;

TEST_CASE("stars on ex1") {
  FinitePoset p = fixtures::ex1();
  CHECK(star(p, 0).members() == std::vector<int>{0, 2, 3, 5, 6, 7});
  CHECK(star(p, 4).members() == std::vector<int>{4, 6, 7});
  CHECK(star(p, 2).members() == std::vector<int>{0, 1, 2, 5, 6, 7});

  // st({5,6}) = st(5) ∩ st(6)
  ElementSet s56 = star_set(p, ElementSet::of(8, {5, 6}));
  CHECK(s56.members() == std::vector<int>{0, 1, 2, 3});
  CHECK(star_set(p, ElementSet::of(8, {6, 7})).members() == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(star_set(p, ElementSet::of(8, {5, 6, 7})).members() == std::vector<int>{0, 1, 2, 3});
  CHECK_THROWS_AS(star_set(p, ElementSet(8)), Error);

  // the two characterizations of st(A) agree
  for (auto a : {ElementSet::of(8, {5}), ElementSet::of(8, {5, 6}), ElementSet::of(8, {0, 4})}) {
    ElementSet direct = star_set(p, a);
    for (int y = 0; y < 8; ++y) CHECK(direct.test(y) == a.is_subset_of(star(p, y)));
  }
}

TEST_CASE("astral sets and index sets") {
  FinitePoset p = fixtures::ex1();
  CHECK(is_astral(p, ElementSet::of(8, {5, 6, 7})));
  CHECK(is_astral(p, ElementSet::of(8, {4})));
  // 4 and 5 share no comparable element
  CHECK(!is_astral(p, ElementSet::of(8, {4, 5})));

  ElementSet x = ElementSet::of(8, {5, 6, 7});
  CHECK(index_set(p, x, ElementSet::of(8, {0, 1, 2, 3})).members() == std::vector<int>{5, 6, 7});
  CHECK(index_set(p, x, ElementSet::of(8, {4})).members() == std::vector<int>{6, 7});
  CHECK(index_set(p, x, ElementSet::of(8, {4, 0})).members() == std::vector<int>{6, 7});
  // empty argument returns all of X
  CHECK(index_set(p, x, ElementSet(8)).members() == std::vector<int>{5, 6, 7});
}

TEST_CASE("cutset detection") {
  FinitePoset p = fixtures::ex1();
  CHECK(is_cutset(p, mxl(p)).ok);
  CHECK(is_cutset(p, mnl(p)).ok);
  CHECK(is_cutset(p, ElementSet::of(8, {2, 3, 6, 7})).ok);

  // {5,6} misses the chain through 4 and 7
  auto r = is_cutset(p, ElementSet::of(8, {5, 6}));
  CHECK(!r.ok);
  REQUIRE(r.witness.has_value());
  // the witness chain avoids the stars of 5 and of 6
  for (int a : {5, 6}) CHECK(!r.witness->is_subset_of(star(p, a)));

  // the empty set fails on any non-empty poset, the empty chain included
  auto empty = is_cutset(p, ElementSet(8));
  CHECK(!empty.ok);
  REQUIRE(empty.witness.has_value());
  CHECK(empty.witness->empty());

  FinitePoset none = FinitePoset::from_relations({}, {});
  CHECK(is_cutset(none, ElementSet(0)).ok);
}

TEST_CASE("coherent cutsets and the frozen witnesses") {
  FinitePoset p = fixtures::ex1();
  auto r = is_coherent_cutset(p, mxl(p));
  CHECK(r.cutset_ok);
  CHECK(!r.ok);
  REQUIRE(r.witness.has_value());
  // {5,6} is bounded below (by 2) yet has no meet and no join
  CHECK(r.witness->members() == std::vector<int>{5, 6});

  FinitePoset e3 = fixtures::ex3();
  auto r3 = is_coherent_cutset(e3, mnl(e3));
  CHECK(r3.cutset_ok);
  CHECK(!r3.ok);
  REQUIRE(r3.witness.has_value());
  CHECK(r3.witness->members() == std::vector<int>{0, 1});

  // chains are coherent at either end
  FinitePoset c2 = fixtures::chain2();
  CHECK(is_coherent_cutset(c2, mxl(c2)).ok);
  CHECK(is_coherent_cutset(c2, mnl(c2)).ok);

  FinitePoset q = fixtures::q3();
  CHECK(is_coherent_cutset(q, mxl(q)).ok);
  CHECK(is_coherent_cutset(q, mnl(q)).ok);
  CHECK(is_crosscut(q, mxl(q)));
  CHECK(is_crosscut(q, mnl(q)));
  CHECK(!is_crosscut(p, mxl(p)));

  // a coherent cutset need not be an antichain: the whole chain qualifies
  CHECK(is_coherent_cutset(c2, c2.all()).ok);
  CHECK(!is_crosscut(c2, c2.all()));

  // non-cutset reported before coherence is considered
  auto nc = is_coherent_cutset(p, ElementSet::of(8, {5}));
  CHECK(!nc.ok);
  CHECK(!nc.cutset_ok);
}

TEST_CASE("coherence guard") {
  FinitePoset p = fixtures::ex1();
  try {
    is_coherent_cutset(p, mxl(p), 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::guard_exceeded);
  }
  CHECK(!is_coherent_cutset(p, mxl(p), 3).ok);
}

TEST_CASE("astral star centers") {
  FinitePoset q = fixtures::q3();
  // sigma = {b,c}: st(sigma) = {a}, the meet; the center is a
  int z = astral_star_center(q, mxl(q), ElementSet::of(3, {1, 2}));
  CHECK(z == 0);
  CHECK(astral_star_center(q, mxl(q), ElementSet::of(3, {1})) == 1);

  FinitePoset c2 = fixtures::chain2();
  CHECK(astral_star_center(c2, mnl(c2), ElementSet::of(2, {0})) == 0);
  CHECK(astral_star_center(c2, c2.all(), c2.all()) == 0);

  // center z always satisfies z ∈ st(sigma) and st(sigma) ⊆ st(z)
  for (auto sigma : {ElementSet::of(3, {1}), ElementSet::of(3, {2}), ElementSet::of(3, {1, 2})}) {
    int c = astral_star_center(q, mxl(q), sigma);
    ElementSet st_sigma = star_set(q, sigma);
    CHECK(st_sigma.test(c));
    CHECK(st_sigma.is_subset_of(star(q, c)));
  }

  // non-coherent X is rejected
  FinitePoset p = fixtures::ex1();
  CHECK_THROWS_AS(astral_star_center(p, mxl(p), ElementSet::of(8, {5, 6})), Error);
  // sigma must be a non-empty astral subset of X
  CHECK_THROWS_AS(astral_star_center(q, mxl(q), ElementSet(3)), Error);
  CHECK_THROWS_AS(astral_star_center(q, mxl(q), ElementSet::of(3, {0})), Error);
}
