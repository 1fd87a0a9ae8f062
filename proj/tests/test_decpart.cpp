#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "pathpart/decpart.hpp"
#include "pathpart/fingroup.hpp"
#include "pathpart/partial.hpp"

using namespace pathpart;

namespace {

// Independent counting oracle: vertex sequences with no immediate repeat,
// pairwise-adjacent support, distinct first/last vertex (for length >= 2),
// weighted by the number of non-identity group elements per step.
long long count_words(const DecGraph& dg, int len) {
  long long total = 0;
  std::vector<int> seq;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(seq.size()) == len) {
      if (len >= 2 && seq.front() == seq.back()) return;
      long long ways = 1;
      for (int v : seq) ways *= dg.at(v).order() - 1;
      total += ways;
      return;
    }
    for (int v = 0; v < dg.graph.num_vertices(); ++v) {
      if (!seq.empty() && seq.back() == v) continue;
      bool clique = true;
      for (int u : seq)
        if (u != v && !dg.graph.adjacent(u, v)) clique = false;
      if (!clique) continue;
      seq.push_back(v);
      self(self);
      seq.pop_back();
    }
  };
  rec(rec);
  return total;
}

long long count_at_length(const MGHandle& h, int len) {
  long long n = 0;
  for (const Elem& e : h.enum_elems(len))
    if (static_cast<int>(std::get<CRWord>(e).length()) == len) ++n;
  return n;
}

}  // namespace

TEST_CASE("single vertex") {
  auto h = path_partial(Graph(1));
  std::vector<Elem> elems = h->enum_elems(5);
  REQUIRE(elems.size() == 2);
  CHECK(elems[0] == h->unit());
  CHECK(elems[1] == Elem{CRWord(FPWord{{0, 1}})});
}

TEST_CASE("membership") {
  DecGraph dg(Graph(2, {{0, 1}}), {make_builtin("Z2"), make_builtin("Z3")});
  MGHandle h(dg);
  CHECK(h.contains_word({{0, 1}, {1, 2}}));
  // Equal first/last vertex: not cyclically reduced.
  CHECK_FALSE(h.contains_word({{1, 1}, {0, 1}, {1, 2}}));
  // Letters outside the decoration.
  CHECK_FALSE(h.contains_word({{0, 2}}));
  CHECK_FALSE(h.contains_word({{2, 1}}));

  // Edgeless pair: no common clique.
  MGHandle loose(DecGraph(Graph(2), {make_cyclic(2), make_cyclic(2)}));
  CHECK_FALSE(loose.contains_word({{0, 1}, {1, 1}}));
  CHECK(loose.contains_word({{0, 1}}));
}

TEST_CASE("domain condition on the edge") {
  auto h = path_partial(Graph(2, {{0, 1}}));
  Elem a{CRWord(FPWord{{0, 1}})}, b{CRWord(FPWord{{1, 1}})};
  Elem ab{CRWord(FPWord{{0, 1}, {1, 1}})};
  CHECK(h->in_domain({ab, ab}));
  CHECK_FALSE(h->in_domain({a, b, a}));  // full product not cyclically reduced
  CHECK(h->in_domain({a, b}));
  CHECK(h->product({a, b}) == ab);
  CHECK_FALSE(h->in_domain({ab, a}));  // (a b a) segment
  CHECK(h->inverse(ab) == Elem{CRWord(FPWord{{1, 1}, {0, 1}})});
}

TEST_CASE("element counts match the combinatorial oracle") {
  std::vector<DecGraph> cases;
  cases.emplace_back(Graph(2, {{0, 1}}),
                     std::vector<FinGroup>(2, make_cyclic(2)));
  cases.emplace_back(Graph(3, {{0, 1}, {1, 2}, {0, 2}}),
                     std::vector<FinGroup>(3, make_cyclic(2)));
  cases.emplace_back(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}),
                     std::vector<FinGroup>(4, make_cyclic(2)));
  cases.emplace_back(
      Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}}),
      std::vector<FinGroup>(4, make_cyclic(2)));
  cases.emplace_back(Graph(3, {{0, 1}, {1, 2}}),
                     std::vector<FinGroup>{make_builtin("Z3"),
                                           make_builtin("Z2"),
                                           make_builtin("V4")});
  cases.emplace_back(Graph(3, {{0, 1}, {1, 2}, {0, 2}}),
                     std::vector<FinGroup>{make_builtin("Z2"),
                                           make_builtin("Z3"),
                                           make_builtin("V4")});
  for (const DecGraph& dg : cases) {
    MGHandle h{DecGraph(dg)};
    for (int len = 1; len <= 5; ++len)
      CHECK(count_at_length(h, len) == count_words(dg, len));
  }
}

TEST_CASE("frozen counts for the (Z2, Z3) edge") {
  MGHandle h(DecGraph(Graph(2, {{0, 1}}),
                      {make_builtin("Z2"), make_builtin("Z3")}));
  CHECK(h.enum_elems(3).size() == 8);   // 1 + 3 + 4 + 0
  CHECK(h.enum_elems(4).size() == 16);  // ... + 8 at length 4
}

TEST_CASE("vertex labels and element rendering") {
  auto h = path_partial(Graph(2, {{0, 1}}), {"u", "w"});
  Elem ab{CRWord(FPWord{{0, 1}, {1, 1}})};
  CHECK(h->elem_str(ab) == "(u w)");
  CHECK(h->elem_str(h->unit()) == "()");
  CHECK(h->decgraph().vertex_by_label("w") == 1);
  CHECK_THROWS_AS(h->decgraph().vertex_by_label("x"), std::invalid_argument);

  MGHandle m(DecGraph(Graph(1), {make_builtin("Z3")}));
  CHECK(m.elem_str(Elem{CRWord(FPWord{{0, 2}})}) == "(a.2)");
}

TEST_CASE("trivial decorations are rejected") {
  CHECK_THROWS_AS(DecGraph(Graph(1), {make_cyclic(1)}), std::invalid_argument);
  CHECK_THROWS_AS(DecGraph(Graph(2), {make_cyclic(2)}), std::invalid_argument);
}
