#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "crosscut/complex.hpp"
#include "crosscut/error.hpp"
#include "crosscut/fixtures.hpp"
#include "crosscut/io.hpp"
#include "crosscut/poset.hpp"

using namespace crosscut;

TEST_CASE("from_faces maximalizes and validates") {
  SimplicialComplex k = SimplicialComplex::from_faces(
      {"a", "b", "c"}, {ElementSet::of(3, {0, 1}), ElementSet::of(3, {0, 1, 2}),
                        ElementSet::of(3, {2})});
  REQUIRE(k.facets().size() == 1);
  CHECK(k.facets()[0].count() == 3);
  CHECK(k.dim() == 2);
  CHECK(k.contains(ElementSet::of(3, {0, 2})));
  CHECK(!k.contains(ElementSet(3)));

  // unused vertex
  CHECK_THROWS_AS(SimplicialComplex::from_faces({"a", "b"}, {ElementSet::of(2, {0})}), Error);
  // empty face
  CHECK_THROWS_AS(SimplicialComplex::from_faces({"a"}, {ElementSet(1)}), Error);
}

TEST_CASE("two triangles glued along an edge") {
  SimplicialComplex k = fixtures::two_triangles();
  CHECK(k.vertex_labels() == std::vector<std::string>{"a", "b", "c", "d"});
  REQUIRE(k.facets().size() == 2);
  CHECK(k.facets()[0].members() == std::vector<int>{0, 1, 2});
  CHECK(k.facets()[1].members() == std::vector<int>{1, 2, 3});

  CHECK(f_vector(k) == std::vector<long long>{4, 5, 2});
  CHECK(euler_characteristic(k) == 1);
  CHECK(k.all_simplices().size() == 11);
  CHECK(cone_apex(k).has_value());

  CHECK_THROWS_AS(k.all_simplices(5), Error);
}

TEST_CASE("order complex of ex1") {
  FinitePoset p = fixtures::ex1();
  SimplicialComplex k = order_complex(p);
  CHECK(k.vertex_labels() == p.labels());
  CHECK(f_vector(k) == std::vector<long long>{8, 18, 12});
  CHECK(euler_characteristic(k) == 2);
  // 12 triangles plus the two edges through 4 that extend no further
  CHECK(k.facets().size() == 14);

  FinitePoset single = fixtures::single();
  SimplicialComplex ks = order_complex(single);
  CHECK(ks.dim() == 0);
  CHECK(f_vector(ks) == std::vector<long long>{1});
}

TEST_CASE("face poset of the two-triangle complex") {
  SimplicialComplex k = fixtures::two_triangles();
  FacePoset fp = face_poset(k);
  CHECK(fp.poset.size() == 11);
  CHECK(fp.simplices.size() == 11);

  auto bc = fp.poset.id_of("{b,c}");
  auto abc = fp.poset.id_of("{a,b,c}");
  auto bcd = fp.poset.id_of("{b,c,d}");
  auto a = fp.poset.id_of("{a}");
  REQUIRE(bc.has_value());
  REQUIRE(abc.has_value());
  CHECK(fp.poset.leq(*bc, *abc));
  CHECK(fp.poset.leq(*bc, *bcd));
  CHECK(fp.poset.leq(*a, *abc));
  CHECK(!fp.poset.comparable(*abc, *bcd));
  CHECK(mxl(fp.poset).count() == 2);
  CHECK(mnl(fp.poset).count() == 4);

  // order ideal below {a,b,c} has its 7 non-empty subsets
  CHECK(fp.poset.down_set(*abc).count() == 7);

  try {
    face_poset(k, 4);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::size_guard);
  }
}

TEST_CASE("crosscut complexes of the worked examples") {
  FinitePoset p = fixtures::ex1();
  SimplicialComplex g = crosscut_complex(p, mxl(p));
  CHECK(g.vertex_labels() == std::vector<std::string>{"5", "6", "7"});
  REQUIRE(g.facets().size() == 1);
  CHECK(g.facets()[0].count() == 3);

  // deleting element 4 does not change the crosscut complex
  FinitePoset pp = fixtures::ex1_minus_4();
  SimplicialComplex gp = crosscut_complex(pp, mxl(pp));
  CHECK(same_complex(g, gp));
  CHECK(g.canonical_key() == gp.canonical_key());

  FinitePoset e3 = fixtures::ex3();
  SimplicialComplex g3 = crosscut_complex(e3, mnl(e3));
  CHECK(g3.vertex_labels() == std::vector<std::string>{"0", "1"});
  REQUIRE(g3.facets().size() == 1);
  CHECK(g3.facets()[0].count() == 2);
  CHECK(cone_apex(g3).has_value());

  // isolated members of X survive: 4 is astral on its own only
  SimplicialComplex gm = crosscut_complex(p, ElementSet::of(8, {4, 5}));
  CHECK(gm.vertex_labels() == std::vector<std::string>{"4", "5"});
  CHECK(gm.facets().size() == 2);
  CHECK(gm.dim() == 0);

  CHECK_THROWS_AS(crosscut_complex(p, ElementSet(8)), Error);
}

TEST_CASE("closed stars") {
  SimplicialComplex k = fixtures::two_triangles();
  // b lies in both facets, so its closed star is everything
  SimplicialComplex stb = closed_star(k, ElementSet::of(4, {1}));
  CHECK(same_complex(stb, k));

  SimplicialComplex sta = closed_star(k, ElementSet::of(4, {0}));
  CHECK(sta.vertex_labels() == std::vector<std::string>{"a", "b", "c"});
  CHECK(sta.facets().size() == 1);

  // {a,d} is not a simplex
  CHECK_THROWS_AS(closed_star(k, ElementSet::of(4, {0, 3})), Error);
}

TEST_CASE("canonical keys ignore vertex numbering") {
  SimplicialComplex k1 = SimplicialComplex::from_faces(
      {"x", "y", "z"}, {ElementSet::of(3, {0, 1}), ElementSet::of(3, {1, 2})});
  SimplicialComplex k2 = SimplicialComplex::from_faces(
      {"z", "x", "y"}, {ElementSet::of(3, {0, 2}), ElementSet::of(3, {1, 2})});
  CHECK(same_complex(k1, k2));

  SimplicialComplex k3 = SimplicialComplex::from_faces(
      {"x", "y", "z"}, {ElementSet::of(3, {0, 1}), ElementSet::of(3, {0, 2})});
  CHECK(!same_complex(k1, k3));  // same shape, different labels
}

TEST_CASE("complex text round-trip") {
  SimplicialComplex k = fixtures::two_triangles();
  std::istringstream in(write_complex(k));
  SimplicialComplex k2 = read_complex(in);
  CHECK(same_complex(k, k2));
  CHECK(write_complex(k) == write_complex(k2));

  std::istringstream bad("facet:\n");
  CHECK_THROWS_AS(read_complex(bad), Error);
  std::istringstream junk("triangle: a b c\n");
  CHECK_THROWS_AS(read_complex(junk), Error);
}

TEST_CASE("barycentric subdivision via the face poset keeps the shape") {
  SimplicialComplex k = fixtures::two_triangles();
  SimplicialComplex sd = order_complex(face_poset(k).poset);
  CHECK(sd.vertex_count() == 11);
  CHECK(euler_characteristic(sd) == euler_characteristic(k));
}
