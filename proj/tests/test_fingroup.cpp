#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <vector>

#include "pathpart/fingroup.hpp"

using namespace pathpart;

namespace {

// Independent brute-force oracle: every bijection of {0..n-1} fixing 0 that
// commutes with the table.
std::vector<std::vector<int>> brute_automorphisms(const FinGroup& g) {
  int n = g.order();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::vector<int>> out;
  do {
    if (perm[0] != 0) continue;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (perm[g.mul(x, y)] != g.mul(perm[x], perm[y])) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("cyclic groups") {
  CHECK(make_cyclic(1).order() == 1);
  FinGroup z2 = make_cyclic(2);
  CHECK(z2.mul(1, 1) == 0);
  FinGroup z3 = make_cyclic(3);
  CHECK(z3.inv(1) == 2);
  CHECK(z3.elem_order(1) == 3);
  CHECK(z3.elem_order(0) == 1);
  CHECK_THROWS_AS(make_cyclic(0), std::invalid_argument);
}

TEST_CASE("table validation rejects non-groups") {
  // Identity not at 0.
  CHECK_THROWS_AS(make_from_table({{1, 0}, {0, 1}}), std::invalid_argument);
  // Non-associative magma with two-sided identity (indices 1,2 break it).
  CHECK_THROWS_AS(
      make_from_table({{0, 1, 2, 3, 4},
                       {1, 0, 3, 4, 2},
                       {2, 4, 0, 1, 3},
                       {3, 2, 4, 0, 1},
                       {4, 3, 1, 2, 0}}),
      std::invalid_argument);
  // Ragged table.
  CHECK_THROWS_AS(make_from_table({{0, 1}, {1}}), std::invalid_argument);
}

TEST_CASE("automorphisms agree with the permutation oracle") {
  for (const char* name : {"Z2", "Z3", "Z4", "V4", "S3"}) {
    FinGroup g = make_builtin(name);
    auto found = automorphisms(g);
    auto oracle = brute_automorphisms(g);
    REQUIRE(found.size() == oracle.size());
    std::set<std::vector<int>> a, b;
    for (const auto& m : found) a.insert(m.images);
    for (const auto& m : oracle) b.insert(m);
    CHECK(a == b);
  }
  CHECK(automorphisms(make_builtin("V4")).size() == 6);
  CHECK(automorphisms(make_builtin("S3")).size() == 6);
  CHECK(automorphisms(make_builtin("Z4")).size() == 2);
}

TEST_CASE("injective homomorphisms") {
  FinGroup z2 = make_builtin("Z2"), z3 = make_builtin("Z3"),
           z4 = make_builtin("Z4");
  auto maps = injective_homs(z2, z4);
  REQUIRE(maps.size() == 1);
  CHECK(maps[0].images == std::vector<int>{0, 2});
  CHECK(injective_homs(z2, z3).empty());  // Lagrange obstruction
  FinGroup s3 = make_builtin("S3");
  auto into_s3 = injective_homs(z3, s3);
  CHECK(into_s3.size() == 2);
  for (const auto& m : into_s3) {
    CHECK(is_homomorphism(m));
    CHECK(is_injective(m));
  }
}

TEST_CASE("isomorphism tests") {
  CHECK(groups_isomorphic(direct_product(make_cyclic(2), make_cyclic(2)),
                          make_builtin("V4")));
  CHECK_FALSE(groups_isomorphic(make_builtin("Z4"), make_builtin("V4")));
  CHECK_FALSE(groups_isomorphic(make_builtin("S3"), make_cyclic(6)));
  CHECK(groups_isomorphic(direct_product(make_cyclic(2), make_cyclic(3)),
                          make_cyclic(6)));
}

TEST_CASE("S3 structure") {
  FinGroup s3 = make_builtin("S3");
  std::multiset<int> orders;
  for (int x = 0; x < 6; ++x) orders.insert(s3.elem_order(x));
  CHECK(orders == std::multiset<int>{1, 2, 2, 2, 3, 3});
}

TEST_CASE("D8 structure") {
  FinGroup d8 = make_builtin("D8");
  REQUIRE(d8.order() == 8);
  std::map<std::string, int> by_label;
  for (int i = 0; i < 8; ++i) by_label[d8.label(i)] = i;
  int x = by_label.at("x"), t = by_label.at("t");
  CHECK(d8.elem_order(x) == 4);
  CHECK(d8.elem_order(t) == 2);
  // t x t = x^-1.
  CHECK(d8.mul(d8.mul(t, x), t) == d8.inv(x));
  CHECK(d8.label(d8.mul(t, x)) == "tx");
  CHECK_FALSE(groups_isomorphic(d8, direct_product(make_cyclic(4),
                                                   make_cyclic(2))));
}

TEST_CASE("subgroup machinery in D8") {
  FinGroup d8 = make_builtin("D8");
  std::map<std::string, int> by_label;
  for (int i = 0; i < 8; ++i) by_label[d8.label(i)] = i;
  int x2 = by_label.at("x2"), t = by_label.at("t"), tx = by_label.at("tx");

  std::set<int> center = subgroup_closure(d8, {x2});
  CHECK(center == std::set<int>{0, x2});

  std::set<int> v = subgroup_closure(d8, {x2, t});
  REQUIRE(v.size() == 4);
  std::vector<int> order;
  FinGroup vt = subgroup_table(d8, {v.begin(), v.end()}, &order);
  CHECK(groups_isomorphic(vt, make_builtin("V4")));
  CHECK(order[0] == 0);

  std::set<int> vp = subgroup_closure(d8, {x2, tx});
  FinGroup vpt = subgroup_table(d8, {vp.begin(), vp.end()});
  CHECK(groups_isomorphic(vpt, make_builtin("V4")));
  CHECK(v != vp);

  CHECK_THROWS_AS(subgroup_table(d8, {0, t, tx}), std::invalid_argument);
  CHECK_THROWS_AS(subgroup_table(d8, {t, x2}), std::invalid_argument);
}
