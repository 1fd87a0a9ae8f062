#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "pathpart/decpart.hpp"
#include "pathpart/morphisms.hpp"

using namespace pathpart;

namespace {

DecGraph k2_z2z3() {
  return DecGraph(Graph(2, {{0, 1}}),
                  {make_builtin("Z2"), make_builtin("Z3")}, {"a", "b"});
}

}  // namespace

TEST_CASE("morphism validation") {
  DecGraph dg = k2_z2z3();
  DecMorphism id = identity_morphism(dg);
  CHECK_NOTHROW(validate(id));

  DecMorphism swap{&dg, &dg, {1, 0}, {{0, 1}, {0, 1, 2}}};
  // Vertex swap would need Z2 -> Z3 injections; rejected.
  CHECK_THROWS_AS(validate(swap), std::invalid_argument);

  DecGraph p3(Graph(3, {{0, 1}, {1, 2}}),
              std::vector<FinGroup>(3, make_cyclic(2)));
  DecMorphism non_hom{&p3, &p3, {0, 2, 1}, {{0, 1}, {0, 1}, {0, 1}}};
  CHECK_THROWS_AS(validate(non_hom), std::invalid_argument);
}

TEST_CASE("automorphism group of the (Z2, Z3) edge") {
  DecGraph dg = k2_z2z3();
  AutGroupResult r = aut_group(dg);
  REQUIRE(r.order() == 2);
  CHECK(r.elements[0] == identity_morphism(dg));
  CHECK(r.elements[1].vmap == std::vector<int>{0, 1});
  CHECK(r.elements[1].fam[1] == std::vector<int>{0, 2, 1});
  CHECK(r.kernel == std::vector<int>{0, 1});
  CHECK(r.image_in_graph_aut.size() == 1);
  CHECK(groups_isomorphic(r.table, make_cyclic(2)));
}

TEST_CASE("induced maps are homomorphisms and functorial") {
  DecGraph dg = k2_z2z3();
  auto h = build(DecGraph(dg));
  AutGroupResult r = aut_group(dg);
  const DecMorphism& m = r.elements[1];
  // Rebind to the handle's own graph copy.
  DecMorphism mm{&h->decgraph(), &h->decgraph(), m.vmap, m.fam};
  PartialHom f = induced_hom(mm, *h, *h);
  HomVerdict v = check_hom(f, 4, 3);
  CHECK(v.pass);
  CHECK(v.complete);

  // phi o phi = identity, elementwise up to length 4.
  DecMorphism sq = compose(mm, mm);
  CHECK(sq == identity_morphism(h->decgraph()));
  PartialHom f2 = induced_hom(sq, *h, *h);
  for (const Elem& e : h->enum_elems(4)) {
    CHECK(f.map(f.map(e)) == f2.map(e));
    CHECK(f2.map(e) == e);
  }
}

TEST_CASE("check_hom rejects a fake homomorphism") {
  auto h = path_partial(Graph(2, {{0, 1}}));
  Elem a{CRWord(FPWord{{0, 1}})}, b{CRWord(FPWord{{1, 1}})};
  // Swap the two letters but keep longer words fixed: breaks H2.
  PartialHom fake{h.get(), h.get(), [a, b](const Elem& e) -> Elem {
                    if (e == a) return b;
                    if (e == b) return a;
                    return e;
                  }};
  HomVerdict v = check_hom(fake, 4, 3);
  CHECK_FALSE(v.pass);
  CHECK_FALSE(v.witness.empty());
}

TEST_CASE("truncated brute force on the path edge") {
  auto h = path_partial(Graph(2, {{0, 1}}));
  std::vector<LetterMap> maps = brute_aut_truncated(*h, 4);
  REQUIRE(maps.size() == 2);
  AutGroupResult r = aut_group(h->decgraph());
  std::vector<LetterMap> lifts;
  for (const DecMorphism& m : r.elements)
    lifts.push_back(letter_restriction(m));
  std::sort(maps.begin(), maps.end());
  std::sort(lifts.begin(), lifts.end());
  CHECK(maps == lifts);
}

TEST_CASE("letter restriction of the identity") {
  DecGraph dg = k2_z2z3();
  LetterMap phi = letter_restriction(identity_morphism(dg));
  REQUIRE(phi.size() == 3);  // one Z2 letter + two Z3 letters
  for (const auto& [l, img] : phi) CHECK(l == img);
}
