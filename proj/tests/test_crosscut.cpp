#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "crosscut/crosscut_poset.hpp"
#include "crosscut/error.hpp"
#include "crosscut/fixtures.hpp"
#include "crosscut/stars.hpp"

using namespace crosscut;

namespace {

std::vector<std::string> member_strings(const FinitePoset& p,
                                        const std::vector<ElementSet>& sets) {
  std::vector<std::string> out;
  for (const auto& s : sets) out.push_back(set_label(s, p.labels()));
  return out;
}

FinitePoset random_poset(std::mt19937_64& rng, int n, double density) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (double(rng() >> 11) / double(1ull << 53) < density)
        rel.push_back({labels[i], labels[j]});
  return FinitePoset::from_relations(labels, rel);
}

// Oracle: enumerate every non-empty subset A of X directly instead of closing
// the star family under pairwise intersection.
std::set<std::string> carriers_by_enumeration(const FinitePoset& p, const ElementSet& x) {
  std::vector<int> xs = x.members();
  REQUIRE(xs.size() <= 20);
  std::set<std::string> out;
  for (unsigned long long mask = 1; mask < (1ull << xs.size()); ++mask) {
    ElementSet a(p.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (mask >> i & 1) a.set(xs[i]);
    ElementSet st = star_set(p, a);
    if (st.empty()) continue;
    for (const auto& comp : connected_components(p, st)) out.insert(comp.key());
  }
  return out;
}

}  // namespace

TEST_CASE("crosscut poset of ex1 over its maximal elements") {
  FinitePoset p = fixtures::ex1();
  CrosscutPoset g = crosscut_poset(p, mxl(p));
  REQUIRE(g.carriers.size() == 5);
  CHECK(member_strings(p, g.carriers) ==
        std::vector<std::string>{"{0,1,2,3}", "{0,1,2,3,4,6}", "{0,1,2,3,4,7}", "{0,1,2,3,5}",
                                 "{4}"});
  CHECK(g.base.labels() ==
        std::vector<std::string>{"{0,1,2,3}", "{0,1,2,3,4,6}", "{0,1,2,3,4,7}", "{0,1,2,3,5}",
                                 "{4}"});

  // the three stars on top; {0,1,2,3} below all of them, {4} below two
  CHECK(g.base.covers() ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {4, 1}, {4, 2}});
  CHECK(mxl(g.base).members() == std::vector<int>{1, 2, 3});

  // order is inclusion of carriers
  for (std::size_t i = 0; i < g.carriers.size(); ++i)
    for (std::size_t j = 0; j < g.carriers.size(); ++j)
      CHECK(g.base.leq(int(i), int(j)) == g.carriers[i].is_subset_of(g.carriers[j]));

  // each carrier is a component of the star of its logged generator
  for (std::size_t i = 0; i < g.carriers.size(); ++i) {
    ElementSet st = star_set(p, g.generators[i]);
    auto comps = connected_components(p, st);
    CHECK(std::find(comps.begin(), comps.end(), g.carriers[i]) != comps.end());
    CHECK(g.generators[i].is_subset_of(mxl(p)));
  }

  CHECK(g.carrier_id(ElementSet::of(8, {4})) == 4);
  CHECK(!g.carrier_id(ElementSet::of(8, {0, 1})).has_value());
}

TEST_CASE("deleting element 4 shrinks the crosscut poset but not the complex") {
  FinitePoset pp = fixtures::ex1_minus_4();
  CrosscutPoset g = crosscut_poset(pp, mxl(pp));
  REQUIRE(g.carriers.size() == 4);
  CHECK(member_strings(pp, g.carriers) ==
        std::vector<std::string>{"{0,1,2,3}", "{0,1,2,3,5}", "{0,1,2,3,6}", "{0,1,2,3,7}"});
  // {0,1,2,3} is now the unique minimum
  CHECK(mnl(g.base).count() == 1);

  FinitePoset p = fixtures::ex1();
  CrosscutPoset g1 = crosscut_poset(p, mxl(p));
  CHECK(!is_isomorphic(g1.base, g.base).has_value());
}

TEST_CASE("crosscut poset of ex3 over its minimal elements is a crown") {
  FinitePoset p = fixtures::ex3();
  CrosscutPoset g = crosscut_poset(p, mnl(p));
  REQUIRE(g.carriers.size() == 4);
  CHECK(member_strings(p, g.carriers) ==
        std::vector<std::string>{"{0,2,3,4}", "{1,3,4}", "{3}", "{4}"});
  CHECK(g.base.covers() ==
        std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {3, 0}, {3, 1}});

  // st({0,1}) = {3,4} is disconnected; both parts become carriers
  ElementSet st01 = star_set(p, ElementSet::of(5, {0, 1}));
  CHECK(st01.members() == std::vector<int>{3, 4});
  CHECK(connected_components(p, st01).size() == 2);
}

TEST_CASE("pairwise closure matches exhaustive subset enumeration") {
  for (const FinitePoset& p : {fixtures::ex1(), fixtures::ex1_minus_4(), fixtures::ex3(),
                               fixtures::q3(), fixtures::chain2()}) {
    for (const ElementSet& x : {mxl(p), mnl(p)}) {
      CrosscutPoset g = crosscut_poset(p, x);
      std::set<std::string> expected = carriers_by_enumeration(p, x);
      std::set<std::string> got;
      for (const auto& c : g.carriers) got.insert(c.key());
      CHECK(got == expected);
    }
  }

  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 50; ++trial) {
    FinitePoset p = random_poset(rng, 7, 0.3);
    for (const ElementSet& x : {mxl(p), mnl(p), p.all()}) {
      CrosscutPoset g = crosscut_poset(p, x);
      std::set<std::string> expected = carriers_by_enumeration(p, x);
      std::set<std::string> got;
      for (const auto& c : g.carriers) got.insert(c.key());
      CHECK(got == expected);
    }
  }
}

TEST_CASE("crosscut poset guards and errors") {
  FinitePoset p = fixtures::ex1();
  CHECK_THROWS_AS(crosscut_poset(p, ElementSet(8)), Error);
  try {
    crosscut_poset(p, mxl(p), 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::guard_exceeded);
  }
}

TEST_CASE("maximal carriers are the stars when X is an antichain") {
  FinitePoset p = fixtures::ex1();
  auto r = check_mxl_characterization(p, mxl(p));
  CHECK(r.ok);
  CHECK(!r.counterexample.has_value());

  CHECK(check_mxl_characterization(fixtures::ex3(), mnl(fixtures::ex3())).ok);
  CHECK(check_mxl_characterization(p, ElementSet::of(8, {4, 5})).ok);

  // 0 < 2, not an antichain
  CHECK_THROWS_AS(check_mxl_characterization(p, ElementSet::of(8, {0, 2})), Error);
}

TEST_CASE("minimum carrier over a connected subset") {
  FinitePoset p = fixtures::ex1();
  ElementSet x = mxl(p);
  CHECK(set_label(min_component_over(p, x, ElementSet::of(8, {2})), p.labels()) == "{0,1,2,3}");
  CHECK(set_label(min_component_over(p, x, ElementSet::of(8, {4})), p.labels()) == "{4}");
  CHECK(set_label(min_component_over(p, x, ElementSet::of(8, {2, 5})), p.labels()) ==
        "{0,1,2,3,5}");

  // 0 and 1 are incomparable, so {0,1} is not connected
  try {
    min_component_over(p, x, ElementSet::of(8, {0, 1}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_connected);
  }
  // the whole poset is connected but no carrier contains it
  try {
    min_component_over(p, x, p.all());
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::empty_gamma_b);
  }
  CHECK_THROWS_AS(min_component_over(p, x, ElementSet(8)), Error);
}

TEST_CASE("nu and iota on a coherent crosscut") {
  FinitePoset q = fixtures::q3();
  ElementSet x = mxl(q);  // {b, c}
  CHECK(set_label(nu(q, x, ElementSet::of(3, {1})), q.labels()) == "{a,b}");
  CHECK(set_label(nu(q, x, ElementSet::of(3, {1, 2})), q.labels()) == "{a}");
  CHECK(set_label(iota(q, x, ElementSet::of(3, {0})), q.labels()) == "{b,c}");
  CHECK(set_label(iota(q, x, ElementSet::of(3, {0, 1})), q.labels()) == "{b}");

  // nu needs a coherent cutset
  FinitePoset p = fixtures::ex1();
  CHECK_THROWS_AS(nu(p, mxl(p), ElementSet::of(8, {5})), Error);
  // iota rejects sets that are not carriers
  CHECK_THROWS_AS(iota(q, x, ElementSet::of(3, {1})), Error);
}

TEST_CASE("retraction checks on the coherent fixtures") {
  FinitePoset q = fixtures::q3();
  auto r = verify_retract(q, mxl(q));
  CHECK(r.ok);
  CHECK(r.violations.empty());
  CHECK(r.simplex_count == 3);
  CHECK(r.carrier_count == 3);

  FinitePoset c2 = fixtures::chain2();
  CHECK(verify_retract(c2, mxl(c2)).ok);
  CHECK(verify_retract(c2, mnl(c2)).ok);
  CHECK(verify_retract(fixtures::single(), ElementSet::of(1, {0})).ok);

  FacePoset fp = face_poset(fixtures::two_triangles());
  auto rf = verify_retract(fp.poset, mxl(fp.poset));
  CHECK(rf.ok);
  CHECK(rf.simplex_count == 3);
  CHECK(rf.carrier_count == 3);

  FinitePoset p = fixtures::ex1();
  CHECK_THROWS_AS(verify_retract(p, mxl(p)), Error);
}

TEST_CASE("comparative retraction onto carrier maxima") {
  FacePoset fp = face_poset(fixtures::two_triangles());
  P0Retraction r = p0_retraction(fp.poset);
  std::vector<std::string> p0_labels;
  for (int v : r.p0.ambient_ids) p0_labels.push_back(fp.poset.label(v));
  CHECK(p0_labels == std::vector<std::string>{"{b,c}", "{a,b,c}", "{b,c,d}"});

  // r collapses each simplex onto the facet side it determines
  auto image_label = [&](const char* l) {
    return r.p0.poset.label(r.retraction.values[*fp.poset.id_of(l)]);
  };
  CHECK(image_label("{a}") == "{a,b,c}");
  CHECK(image_label("{a,b}") == "{a,b,c}");
  CHECK(image_label("{d}") == "{b,c,d}");
  CHECK(image_label("{b}") == "{b,c}");
  CHECK(image_label("{b,c}") == "{b,c}");
  CHECK(image_label("{a,b,c}") == "{a,b,c}");

  // gamma and p0 are isomorphic via carrier -> max
  CHECK(r.gamma.base.size() == r.p0.poset.size());
  for (std::size_t i = 0; i < r.gamma.carriers.size(); ++i)
    for (std::size_t j = 0; j < r.gamma.carriers.size(); ++j)
      CHECK(r.gamma.base.leq(int(i), int(j)) ==
            r.p0.poset.leq(r.carrier_to_p0[i], r.carrier_to_p0[j]));

  P0Retraction rq = p0_retraction(fixtures::q3());
  CHECK(rq.p0.poset.size() == 3);  // every element is a carrier maximum here

  try {
    p0_retraction(fixtures::ex1());
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_maximum);
    CHECK(std::string(e.what()).find("{0,1,2,3}") != std::string::npos);
  }
}

TEST_CASE("joins of minimal elements") {
  FinitePoset v = FinitePoset::from_relations({"b0", "b1", "x"}, {{"b0", "x"}, {"b1", "x"}});
  PMResult r = p_m(v);
  CHECK(r.cross_checked);  // mnl is a coherent cutset here
  std::vector<std::string> labels;
  for (int a : r.pm.ambient_ids) labels.push_back(v.label(a));
  CHECK(labels == std::vector<std::string>{"b0", "b1", "x"});

  PMResult r3 = p_m(fixtures::ex3());
  CHECK(!r3.cross_checked);
  CHECK(r3.pm.ambient_ids == std::vector<int>{0, 1});

  PMResult r1 = p_m(fixtures::ex1());
  CHECK(r1.pm.ambient_ids == std::vector<int>{0, 1, 4});

  PMResult rq = p_m(fixtures::q3());
  CHECK(rq.cross_checked);
  CHECK(rq.pm.poset.size() == 1);
}

TEST_CASE("facet intersection posets") {
  IntersectionPoset ik = l_k(fixtures::two_triangles());
  REQUIRE(ik.base.size() == 3);
  CHECK(ik.base.labels() ==
        std::vector<std::string>{"{a,b,c}", "{b,c}", "{b,c,d}"});
  CHECK(ik.base.covers() == std::vector<std::pair<int, int>>{{1, 0}, {1, 2}});

  // 4-cycle: four edges plus their four shared vertices
  SimplicialComplex c4 = SimplicialComplex::from_faces(
      {"a", "b", "c", "d"},
      {ElementSet::of(4, {0, 1}), ElementSet::of(4, {1, 2}), ElementSet::of(4, {2, 3}),
       ElementSet::of(4, {0, 3})});
  IntersectionPoset ic = l_k(c4);
  CHECK(ic.base.size() == 8);
  CHECK(mnl(ic.base).count() == 4);

  // the crosscut poset of the face poset over its facets recovers the same order
  for (const SimplicialComplex& k : {fixtures::two_triangles(), c4}) {
    FacePoset fp = face_poset(k);
    CrosscutPoset g = crosscut_poset(fp.poset, mxl(fp.poset));
    CHECK(is_isomorphic(g.base, l_k(k).base).has_value());
  }
}
