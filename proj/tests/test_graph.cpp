#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "pathpart/graph.hpp"

using namespace pathpart;

namespace {

// Independent oracle: all permutations preserving adjacency both ways.
std::set<std::vector<int>> brute_graph_autos(const Graph& g) {
  int n = g.num_vertices();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::set<std::vector<int>> out;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) ok = false;
    if (ok) out.insert(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);        // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);              // spokes
  }
  return g;
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g(3, {{0, 1}, {1, 2}});
  CHECK(g.num_edges() == 2);
  CHECK(g.degree(1) == 2);
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.connected());
  CHECK_FALSE(Graph(2).connected());
  CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 7), std::invalid_argument);
}

TEST_CASE("cliques") {
  Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(is_clique(k3, {0, 1, 2}));
  CHECK(is_clique(k3, {1}));
  CHECK(is_clique(k3, {}));
  Graph p3(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(is_clique(p3, {0, 1, 2}));
  CHECK(is_clique(p3, {0, 1}));
}

TEST_CASE("graph automorphisms agree with the permutation oracle") {
  std::vector<Graph> cases = {
      Graph(3, {{0, 1}, {1, 2}}),                     // P3
      Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}),     // C4
      Graph(4, {{0, 1}, {0, 2}, {0, 3}}),             // star
      Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}),  // C5
      Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}}),  // K4
      Graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}}),     // asymmetric-ish tree
  };
  for (const Graph& g : cases) {
    auto found = graph_automorphisms(g);
    auto oracle = brute_graph_autos(g);
    REQUIRE(found.size() == oracle.size());
    for (const GraphMap& m : found) CHECK(oracle.count(m.vmap) == 1);
  }
  CHECK(graph_automorphisms(Graph(3, {{0, 1}, {1, 2}})).size() == 2);
}

TEST_CASE("Petersen graph has 120 automorphisms") {
  CHECK(graph_automorphisms(petersen()).size() == 120);
}

TEST_CASE("isomorphism") {
  Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  Graph p5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK_FALSE(isomorphic(c5, p5).has_value());

  std::mt19937 rng(7);
  for (int iter = 0; iter < 20; ++iter) {
    int n = 2 + static_cast<int>(rng() % 6);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() & 1u) g.add_edge(u, v);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(n);
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    auto iso = isomorphic(g, h);
    REQUIRE(iso.has_value());
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        CHECK(g.adjacent(u, v) == h.adjacent(iso->vmap[u], iso->vmap[v]));
  }
}

TEST_CASE("automorphism group table") {
  Graph p3(3, {{0, 1}, {1, 2}});
  FinGroup t = automorphism_group_table(graph_automorphisms(p3));
  CHECK(groups_isomorphic(t, make_cyclic(2)));
  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  FinGroup d = automorphism_group_table(graph_automorphisms(c4));
  CHECK(groups_isomorphic(d, make_builtin("D8")));
}

TEST_CASE("realizer produces verified graphs") {
  FinGroup z2 = make_cyclic(2);
  auto gs = frucht_realize(z2, 2);
  REQUIRE(gs.size() == 2);
  for (const Graph& g : gs) {
    auto autos = graph_automorphisms(g);
    REQUIRE(autos.size() == 2);
    CHECK(groups_isomorphic(automorphism_group_table(autos), z2));
  }
  CHECK_FALSE(isomorphic(gs[0], gs[1]).has_value());
}
