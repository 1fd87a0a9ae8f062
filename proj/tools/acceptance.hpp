// Acceptance-suite driver: one deterministic pass/fail line per criterion.
// All bounds, seeds, sample counts and runtime limits are pinned here.
#ifndef PATHPART_TOOLS_ACCEPTANCE_HPP
#define PATHPART_TOOLS_ACCEPTANCE_HPP

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pathpart/analysis.hpp"
#include "pathpart/decpart.hpp"
#include "pathpart/fingroup.hpp"
#include "pathpart/graph.hpp"
#include "pathpart/json_io.hpp"
#include "pathpart/morphisms.hpp"
#include "pathpart/partial.hpp"
#include "pathpart/words.hpp"

namespace pathpart::acceptance {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  std::function<Outcome(const std::string& fixtures)> run;
};

inline Outcome ok(std::string detail) { return {true, std::move(detail)}; }
inline Outcome bad(std::string detail) { return {false, std::move(detail)}; }

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture: " + path);
  json j;
  in >> j;
  return j;
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// ---------------------------------------------------------------------------
// Shared helpers.

// All connected graphs on 1..max_n vertices, one representative per
// isomorphism class, in deterministic order.
inline std::vector<Graph> connected_graph_reps(int max_n) {
  std::vector<Graph> reps;
  for (int n = 1; n <= max_n; ++n) {
    int bits = n * (n - 1) / 2;
    for (long long mask = 0; mask < (1LL << bits); ++mask) {
      std::vector<std::pair<int, int>> edges;
      int b = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++b)
          if (mask & (1LL << b)) edges.emplace_back(u, v);
      Graph g(n, edges);
      if (!g.connected()) continue;
      bool dup = false;
      for (const Graph& r : reps)
        if (r.num_vertices() == n && isomorphic(r, g)) {
          dup = true;
          break;
        }
      if (!dup) reps.push_back(std::move(g));
    }
  }
  return reps;
}

inline DecGraph random_decgraph(std::mt19937& rng, int min_n, int max_n,
                                const std::vector<FinGroup>& pool) {
  int n = min_n + static_cast<int>(rng() % static_cast<unsigned>(
                                             max_n - min_n + 1));
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() & 1u) g.add_edge(u, v);
  std::vector<FinGroup> dec;
  for (int v = 0; v < n; ++v)
    dec.push_back(pool[rng() % pool.size()]);
  return DecGraph(std::move(g), std::move(dec));
}

// Order of the categorical automorphism group without building the table.
inline long long aut_order_bound(const DecGraph& dg) {
  long long total = 0;
  for (const GraphMap& s : graph_automorphisms(dg.graph)) {
    long long prod = 1;
    bool ok = true;
    for (int v = 0; v < dg.graph.num_vertices(); ++v) {
      auto isos = isomorphisms(dg.at(v), dg.at(s.vmap[v]));
      if (isos.empty()) {
        ok = false;
        break;
      }
      prod *= static_cast<long long>(isos.size());
    }
    if (ok) total += prod;
  }
  return total;
}

inline std::vector<LetterMap> sorted_lifts(const AutGroupResult& r) {
  std::vector<LetterMap> out;
  out.reserve(r.elements.size());
  for (const DecMorphism& m : r.elements) out.push_back(letter_restriction(m));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 1: automorphisms of the edge with groups (Z2, Z3). Exact facts,
// runtime limit 1 s.

inline Outcome crit_aut_k2(const std::string& fx) {
  constexpr double kTimeLimit = 1.0;
  Timer t;
  DecGraph dg = decgraph_from_json(load_json(fx + "/k2_z2z3.json"));
  int va = dg.vertex_by_label("a"), vb = dg.vertex_by_label("b");
  if (dg.at(va).order() != 2 || dg.at(vb).order() != 3)
    return bad("fixture decorations unexpected");
  AutGroupResult r = aut_group(dg);
  if (r.order() != 2)
    return bad("expected order 2, got " + std::to_string(r.order()));
  const DecMorphism& m = r.elements[1];
  if (m.vmap != std::vector<int>{0, 1})
    return bad("non-trivial element moves vertices");
  if (m.fam[vb] != std::vector<int>{0, 2, 1})
    return bad("non-trivial element is not inversion on the Z3 vertex");
  if (m.fam[va] != std::vector<int>{0, 1})
    return bad("non-trivial element moves the Z2 decoration");
  if (r.kernel.size() != 2) return bad("kernel is not all of the group");
  if (r.image_in_graph_aut.size() != 1 ||
      r.image_in_graph_aut[0] != std::vector<int>{0, 1})
    return bad("image in the graph automorphisms is not trivial");
  if (t.seconds() > kTimeLimit) return bad("runtime limit exceeded");
  return ok("order 2; kernel of order 2; trivial image on the graph");
}

// ---------------------------------------------------------------------------
// Criterion 2: for every connected graph on <= 5 vertices, the truncated
// brute-force automorphisms of the path partial group coincide map-for-map
// with the lifted graph automorphisms. Exact; runtime limit 300 s.

inline Outcome crit_path_aut(const std::string&) {
  constexpr int kMaxLen = 6;
  constexpr double kTimeLimit = 300.0;
  Timer t;
  std::vector<Graph> reps = connected_graph_reps(5);
  if (reps.size() != 31)
    return bad("expected 31 connected graphs up to isomorphism, got " +
               std::to_string(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const Graph& g = reps[i];
    auto h = path_partial(Graph(g));
    std::vector<LetterMap> oracle = brute_aut_truncated(*h, kMaxLen);
    std::size_t graph_auts = graph_automorphisms(g).size();
    if (oracle.size() != graph_auts)
      return bad("graph " + std::to_string(i) + ": oracle found " +
                 std::to_string(oracle.size()) + " maps, graph has " +
                 std::to_string(graph_auts) + " automorphisms");
    std::vector<LetterMap> lifts = sorted_lifts(aut_group(h->decgraph()));
    std::sort(oracle.begin(), oracle.end());
    if (oracle != lifts)
      return bad("graph " + std::to_string(i) +
                 ": oracle maps differ from the lifted automorphisms");
  }
  if (t.seconds() > kTimeLimit) return bad("runtime limit exceeded");
  return ok("31 graphs; oracle and lifted automorphism sets identical");
}

// ---------------------------------------------------------------------------
// Criterion 3: 10 seeded random decorated graphs (<= 5 vertices, decorations
// Z2/Z3/V4, automorphism order capped at 200 to keep the table finite at desk
// scale): the truncated brute-force search equals the induced maps.

inline Outcome crit_aut_random(const std::string&) {
  constexpr unsigned kSeed = 901;
  constexpr int kSamples = 10;
  constexpr int kMaxLen = 4;
  constexpr long long kAutCap = 200;
  std::mt19937 rng(kSeed);
  std::vector<FinGroup> pool = {make_builtin("Z2"), make_builtin("Z3"),
                                make_builtin("V4")};
  int done = 0, attempts = 0;
  while (done < kSamples) {
    if (++attempts > 500) return bad("sampler exhausted its attempt budget");
    DecGraph dg = random_decgraph(rng, 2, 5, pool);
    if (aut_order_bound(dg) > kAutCap) continue;
    auto h = build(DecGraph(dg));
    std::vector<LetterMap> oracle = brute_aut_truncated(*h, kMaxLen);
    std::vector<LetterMap> lifts = sorted_lifts(aut_group(dg));
    std::sort(oracle.begin(), oracle.end());
    if (oracle != lifts)
      return bad("sample " + std::to_string(done) +
                 ": oracle maps differ from the induced maps (" +
                 std::to_string(oracle.size()) + " vs " +
                 std::to_string(lifts.size()) + ")");
    ++done;
  }
  return ok("10 samples; truncated oracle equals the induced maps");
}

// ---------------------------------------------------------------------------
// Criterion 4: 20 seeded random decorated graphs (<= 8 vertices, decorations
// Z2/Z3/Z4/V4/S3): the maximal-subgroup graph is isomorphic to the input
// graph.

inline Outcome crit_recover(const std::string&) {
  constexpr unsigned kSeed = 704;
  constexpr int kSamples = 20;
  std::mt19937 rng(kSeed);
  std::vector<FinGroup> pool = {make_builtin("Z2"), make_builtin("Z3"),
                                make_builtin("Z4"), make_builtin("V4"),
                                make_builtin("S3")};
  for (int i = 0; i < kSamples; ++i) {
    DecGraph dg = random_decgraph(rng, 2, 8, pool);
    if (!recover_check(dg))
      return bad("sample " + std::to_string(i) + " (" +
                 std::to_string(dg.graph.num_vertices()) +
                 " vertices): no isomorphism between the recovered graph and "
                 "the input");
  }
  return ok("20 samples; recovered graph isomorphic to the input every time");
}

// ---------------------------------------------------------------------------
// Criterion 5: the path partial group of a single edge. Exact element list at
// length 6, two order-2 maximal subgroups, and the alternating word has
// unbounded powers with |(ab)^n| = 2n.

inline Outcome crit_path_k2(const std::string&) {
  auto h = path_partial(Graph(2, {{0, 1}}), {"a", "b"});
  auto alt = [](int first, int len) {
    FPWord w;
    for (int i = 0; i < len; ++i) w.push_back({(first + i) % 2, 1});
    return w;
  };
  std::vector<Elem> expected = {Elem{CRWord{}}};
  for (int len : {1, 2, 4, 6}) {
    expected.push_back(Elem{CRWord(alt(0, len))});
    expected.push_back(Elem{CRWord(alt(1, len))});
  }
  // Enumeration order is by length then lexicographic; both starting vertices
  // appear at each admissible length (1, 2, 4, 6), 9 elements in total.
  std::vector<Elem> got = h->enum_elems(6);
  if (got != expected)
    return bad("element list at length 6 has " + std::to_string(got.size()) +
               " entries or wrong order (expected the 9 alternating words)");

  auto recs = maximal_finite_subgroups(*h);
  if (recs.size() != 2) return bad("expected two maximal subgroup records");
  for (const auto& r : recs)
    if (r.table.order() != 2 || r.elements.size() != 2)
      return bad("maximal subgroup record is not of order 2");
  if (!(recs[0].elements[1] == Elem{CRWord(alt(0, 1))} &&
        recs[1].elements[1] == Elem{CRWord(alt(1, 1))}))
    return bad("maximal subgroup records are not the two vertex groups");

  Elem ab{CRWord(alt(0, 2))};
  bool found = false;
  for (const OrderInfo& info : classify_orders(*h, AnalysisBounds{2, 12})) {
    if (info.elem == ab) {
      found = true;
      if (info.cls != OrderClass::kInfiniteOrIndeterminate)
        return bad("(a b) classified finite");
    }
  }
  if (!found) return bad("(a b) not reached by the order classifier");

  Decoration dec = h->decgraph().decoration();
  for (int n = 1; n <= 5; ++n) {
    FPWord pw;
    for (int i = 0; i < n; ++i) {
      pw.push_back({0, 1});
      pw.push_back({1, 1});
    }
    if (reduce(pw, dec).size() != static_cast<std::size_t>(2 * n))
      return bad("|(a b)^n| != 2n at n = " + std::to_string(n));
  }
  return ok("9 elements at length 6; two order-2 subgroups; (a b) unbounded");
}

// ---------------------------------------------------------------------------
// Criterion 6: the colimit V <- Z -> V' of Klein subgroups of D8. Exact
// domain facts, maximal subgroups, and both subgroup-graph variants.

inline Outcome crit_colimit_d8(const std::string& fx) {
  GroupDiagram d = diagram_from_json(load_json(fx + "/d8_colimit.json"));
  if (d.nodes.size() != 3 || d.arrows.size() != 2)
    return bad("fixture diagram has the wrong shape");
  auto c = colimit_of_groups(d);
  if (c->num_classes() != 6)
    return bad("expected 6 classes, got " + std::to_string(c->num_classes()));

  Elem x2{c->class_of(0, 1)};
  Elem tt{c->class_of(0, 2)};
  Elem tx{c->class_of(1, 3)};
  if (!c->in_domain({x2, x2})) return bad("(x2, x2) should be multipliable");
  if (c->in_domain({tt, tx}))
    return bad("(t, tx) should not be multipliable");

  auto recs = maximal_finite_subgroups(*c);
  if (recs.size() != 2)
    return bad("expected exactly two maximal subgroups, got " +
               std::to_string(recs.size()));
  FinGroup v4 = make_builtin("V4");
  std::vector<std::vector<Elem>> expected_sets;
  for (int node : {0, 1}) {
    std::vector<Elem> s;
    for (int x = 0; x < 4; ++x) s.push_back(Elem{c->class_of(node, x)});
    std::sort(s.begin(), s.end());
    expected_sets.push_back(std::move(s));
  }
  for (const auto& r : recs) {
    if (!groups_isomorphic(r.table, v4))
      return bad("maximal subgroup is not a Klein group");
    std::vector<Elem> s = r.elements;
    std::sort(s.begin(), s.end());
    bool match = false;
    for (const auto& e : expected_sets) match = match || (s == e);
    if (!match) return bad("maximal subgroup is not one of V, V'");
  }
  Graph weak = maxsub_graph(*c, recs);
  Graph strong = strong_maxsub_graph(*c, recs);
  if (weak.num_edges() != 1)
    return bad("existential subgroup graph should have the edge");
  if (strong.num_edges() != 0)
    return bad("universal subgroup graph should be edgeless");
  return ok("V and V' recovered; edge present weakly, absent strongly");
}

// ---------------------------------------------------------------------------
// Criterion 7: the axiom checker passes on the corpus with a complete
// enumeration and fails the corrupted fixture on P2 with a replayable
// counterexample.  Bounds are pinned per handle: (element size 5, word
// length 4) everywhere except the two triangle handles, whose domains grow
// too fast for a complete sweep at those bounds; they are pinned at (4, 4)
// and (4, 3) respectively, the largest bounds that enumerate completely
// within the default word cap.

inline Outcome crit_axioms(const std::string& fx) {
  struct Entry {
    std::string name;
    std::shared_ptr<PartialGroup> handle;
    int elem_bound = 5;
    int word_bound = 4;
  };
  std::vector<Entry> corpus;
  corpus.push_back({"group S3", from_group(make_builtin("S3"))});
  corpus.push_back({"free on one generator", free_on_one()});
  corpus.push_back(
      {"D8 colimit",
       colimit_of_groups(diagram_from_json(load_json(fx + "/d8_colimit.json")))});
  corpus.push_back({"path/K2", path_partial(Graph(2, {{0, 1}}))});
  corpus.push_back({"path/P3", path_partial(Graph(3, {{0, 1}, {1, 2}}))});
  corpus.push_back({"path/K3",
                    path_partial(Graph(3, {{0, 1}, {1, 2}, {0, 2}})), 4, 4});
  corpus.push_back(
      {"K2 with (Z2, Z3)",
       build(DecGraph(Graph(2, {{0, 1}}),
                      {make_builtin("Z2"), make_builtin("Z3")}))});
  corpus.push_back(
      {"P3 with (Z3, Z2, V4)",
       build(DecGraph(Graph(3, {{0, 1}, {1, 2}}),
                      {make_builtin("Z3"), make_builtin("Z2"),
                       make_builtin("V4")}))});
  corpus.push_back(
      {"K3 with (Z2, Z2, Z3)",
       build(DecGraph(Graph(3, {{0, 1}, {1, 2}, {0, 2}}),
                      {make_builtin("Z2"), make_builtin("Z2"),
                       make_builtin("Z3")})),
       4, 3});
  for (const auto& [name, h, eb, wb] : corpus) {
    AxiomReport rep = check_axioms(*h, eb, wb);
    if (!rep.all_pass()) {
      std::string why;
      for (const AxiomVerdict* v : {&rep.d1, &rep.d2, &rep.p1, &rep.p2, &rep.p3})
        if (!v->pass) why = v->counterexample;
      return bad(name + " fails the axiom check: " + why);
    }
    if (!rep.complete) return bad(name + ": enumeration hit the cap");
  }

  auto corrupted = handle_from_json(load_json(fx + "/corrupted.json"));
  AxiomReport rep = check_axioms(*corrupted, 5, 4);
  if (rep.p2.pass) return bad("corrupted fixture passes P2");
  if (rep.p2.witness.size() < 2) return bad("no replayable witness recorded");
  const ElemWord& w = rep.p2.witness[0];
  const ElemWord& contracted = rep.p2.witness[1];
  bool replays = !corrupted->in_domain(contracted) ||
                 !(corrupted->product(contracted) == corrupted->product(w));
  if (!replays) return bad("witness does not replay through the handle");
  return ok("9 handles pass; corrupted fixture fails P2 with replayable "
            "witness");
}

// ---------------------------------------------------------------------------
// Criterion 8: simplicial identities and inner-horn filling on truncated
// nerves; trivial conjugation certificate on every connected test graph with
// >= 2 vertices; self-equivalence count 2 for the single edge.

inline Outcome crit_nerve_normalizer(const std::string&) {
  constexpr int kDim = 3, kNerveElemBound = 3, kNormalizerBound = 4;
  auto p3 = path_partial(Graph(3, {{0, 1}, {1, 2}}));
  std::string err = verify_nerve(*p3, nerve(*p3, kDim, kNerveElemBound));
  if (!err.empty()) return bad("path/P3 nerve: " + err);
  auto z2 = from_group(make_cyclic(2));
  err = verify_nerve(*z2, nerve(*z2, kDim, 0));
  if (!err.empty()) return bad("Z2 nerve: " + err);

  int checked = 0;
  for (const Graph& g : connected_graph_reps(5)) {
    if (g.num_vertices() < 2) continue;
    auto h = path_partial(Graph(g));
    std::vector<Elem> nz = normalizer(*h, kNormalizerBound);
    if (!(nz.size() == 1 && nz[0] == h->unit()))
      return bad("non-trivial conjugation certificate on a graph with " +
                 std::to_string(g.num_vertices()) + " vertices");
    ++checked;
  }
  auto k2 = path_partial(Graph(2, {{0, 1}}));
  int selfeq = homotopy_selfequiv_order(*k2, kNormalizerBound);
  if (selfeq != 2)
    return bad("self-equivalence count for the edge is " +
               std::to_string(selfeq));
  return ok("nerves verified to dim 3; " + std::to_string(checked) +
            " graphs with trivial certificate; edge count 2");
}

// ---------------------------------------------------------------------------
// Criterion 9: realizer demonstration. For each target group, three pairwise
// non-isomorphic graphs whose automorphism groups -- and the automorphism
// groups of their path partial groups -- are isomorphic to the target.
// Runtime limit 120 s.

inline Outcome crit_realize(const std::string&) {
  constexpr int kCount = 3, kMaxVertices = 400;
  constexpr double kTimeLimit = 120.0;
  Timer t;
  std::vector<std::pair<std::string, FinGroup>> targets;
  targets.emplace_back("trivial", make_cyclic(1));
  targets.emplace_back("Z2", make_cyclic(2));
  targets.emplace_back("Z3", make_cyclic(3));
  targets.emplace_back("S3", make_builtin("S3"));
  std::string sizes;
  for (const auto& [name, h] : targets) {
    std::vector<Graph> gs = frucht_realize(h, kCount, kMaxVertices);
    if (static_cast<int>(gs.size()) != kCount)
      return bad(name + ": realizer returned " + std::to_string(gs.size()) +
                 " graphs");
    for (int i = 0; i < kCount; ++i) {
      auto autos = graph_automorphisms(gs[i], kMaxVertices);
      if (!groups_isomorphic(automorphism_group_table(autos), h))
        return bad(name + ": graph " + std::to_string(i) +
                   " has the wrong automorphism group");
      for (int j = 0; j < i; ++j)
        if (isomorphic(gs[j], gs[i], kMaxVertices))
          return bad(name + ": graphs " + std::to_string(j) + " and " +
                     std::to_string(i) + " are isomorphic");
      AutGroupResult ar = aut_group(path_partial(Graph(gs[i]))->decgraph(),
                                    kMaxVertices);
      if (!groups_isomorphic(ar.table, h))
        return bad(name + ": path partial group of graph " +
                   std::to_string(i) + " has the wrong automorphism group");
      sizes += (sizes.empty() ? "" : ",") + std::to_string(gs[i].num_vertices());
    }
  }
  if (t.seconds() > kTimeLimit) return bad("runtime limit exceeded");
  return ok("4 targets x 3 graphs verified (vertex counts " + sizes + ")");
}

// ---------------------------------------------------------------------------
// Criterion 10: the 3-path with uniform Z3 decoration has automorphism group
// of order 2^3 * 2 = 16, and graph automorphisms lift with identity families
// as a section.

inline Outcome crit_wreath(const std::string&) {
  FinGroup z3 = make_builtin("Z3");
  DecGraph dg(Graph(3, {{0, 1}, {1, 2}}), {z3, z3, z3});
  AutGroupResult r = aut_group(dg);
  if (r.order() != 16)
    return bad("expected order 16, got " + std::to_string(r.order()));
  if (r.kernel.size() != 8)
    return bad("kernel order is " + std::to_string(r.kernel.size()));
  if (r.image_in_graph_aut.size() != 2)
    return bad("image has " + std::to_string(r.image_in_graph_aut.size()) +
               " vertex maps");
  auto lift = [&](const std::vector<int>& vmap) {
    DecMorphism m{&dg, &dg, vmap, {}};
    for (int v = 0; v < 3; ++v) m.fam.push_back({0, 1, 2});
    return m;
  };
  auto find = [&](const DecMorphism& m) {
    for (const DecMorphism& e : r.elements)
      if (e == m) return true;
    return false;
  };
  for (const auto& vmap : r.image_in_graph_aut)
    if (!find(lift(vmap)))
      return bad("identity-family lift missing for a graph automorphism");
  for (const auto& v1 : r.image_in_graph_aut)
    for (const auto& v2 : r.image_in_graph_aut) {
      std::vector<int> comp(3);
      for (int v = 0; v < 3; ++v) comp[v] = v1[v2[v]];
      DecMorphism lhs = compose(lift(v1), lift(v2));
      if (!(lhs == lift(comp)))
        return bad("identity-family lifts do not compose as a section");
    }
  return ok("order 16 = 8 x 2; identity-family lifts form a section");
}

// ---------------------------------------------------------------------------
// Criterion 11: word-algebra oracles. 10^4 seeded random words for reduction
// properties; exhaustive agreement of the cyclic-reducedness shortcut with
// literal rotation enumeration for words of length <= 8 over 3 vertices.

inline Outcome crit_words(const std::string&) {
  constexpr unsigned kSeed = 1111;
  constexpr int kRandomWords = 10'000;
  std::vector<FinGroup> groups = {make_builtin("Z2"), make_builtin("Z3"),
                                  make_builtin("V4")};
  Decoration dec = [&groups](int v) -> const FinGroup& { return groups[v]; };
  std::mt19937 rng(kSeed);
  for (int iter = 0; iter < kRandomWords; ++iter) {
    int len = static_cast<int>(rng() % 13);
    FPWord w;
    for (int i = 0; i < len; ++i) {
      int v = static_cast<int>(rng() % 3);
      int e = 1 + static_cast<int>(rng() % (groups[v].order() - 1));
      w.push_back({v, e});
    }
    FPWord r = reduce(w, dec);
    if (reduce(r, dec) != r)
      return bad("reduction is not idempotent at iteration " +
                 std::to_string(iter));
    FPWord cancel = w;
    FPWord inv = invert(w, dec);
    cancel.insert(cancel.end(), inv.begin(), inv.end());
    if (!reduce(cancel, dec).empty())
      return bad("w * w^-1 does not reduce to the empty word at iteration " +
                 std::to_string(iter));
    std::size_t cut = rng() % (w.size() + 1);
    FPWord u(w.begin(), w.begin() + cut), v2(w.begin() + cut, w.end());
    FPWord glued = reduce(u, dec);
    FPWord rv = reduce(v2, dec);
    glued.insert(glued.end(), rv.begin(), rv.end());
    if (reduce(glued, dec) != r)
      return bad("reduction does not transport across concatenation at "
                 "iteration " + std::to_string(iter));
  }

  // Exhaustive rotation oracle.
  long long checked = 0;
  for (const auto& orders : {std::vector<int>{2, 2, 2},
                             std::vector<int>{2, 3, 3}}) {
    std::vector<Letter> alphabet;
    for (int v = 0; v < 3; ++v)
      for (int e = 1; e < orders[v]; ++e) alphabet.push_back({v, e});
    int na = static_cast<int>(alphabet.size());
    FPWord w;
    auto rec = [&](auto&& self) -> bool {
      bool literal = true;
      for (std::size_t s = 0; s < std::max<std::size_t>(w.size(), 1); ++s) {
        FPWord rot(w.begin() + s, w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + s);
        if (!is_reduced(rot)) {
          literal = false;
          break;
        }
      }
      if (is_cyclically_reduced(w) != literal) return false;
      ++checked;
      if (w.size() == 8) return true;
      for (int i = 0; i < na; ++i) {
        w.push_back(alphabet[i]);
        bool okk = self(self);
        w.pop_back();
        if (!okk) return false;
      }
      return true;
    };
    if (!rec(rec))
      return bad("cyclic-reducedness shortcut disagrees with the rotation "
                 "oracle");
  }
  return ok("10000 random words; " + std::to_string(checked) +
            " exhaustive rotation checks agree");
}

// ---------------------------------------------------------------------------

inline std::vector<Criterion> criteria() {
  return {
      {"aut-k2", "automorphisms of the (Z2, Z3)-decorated edge", crit_aut_k2},
      {"path-aut", "path partial groups over connected graphs on <= 5 vertices",
       crit_path_aut},
      {"aut-random", "automorphism oracle agreement on random decorated graphs",
       crit_aut_random},
      {"recover", "graph recovery from maximal finite subgroups", crit_recover},
      {"path-k2", "path partial group of a single edge", crit_path_k2},
      {"colimit-d8", "Klein-subgroup colimit inside D8", crit_colimit_d8},
      {"axioms", "axiom checker corpus and corrupted negative fixture",
       crit_axioms},
      {"nerve-normalizer", "nerve identities, horn filling and conjugation "
                           "certificates", crit_nerve_normalizer},
      {"realize", "graphs with prescribed automorphism groups", crit_realize},
      {"wreath", "wreath-type decomposition on the uniform Z3 path",
       crit_wreath},
      {"words", "word-algebra oracle suite", crit_words},
  };
}

inline int run_suite(const std::string& filter, const std::string& fixtures,
                     std::ostream& out) {
  bool all = true;
  int ran = 0;
  for (const Criterion& c : criteria()) {
    if (!filter.empty() && c.id.find(filter) == std::string::npos &&
        c.title.find(filter) == std::string::npos)
      continue;
    ++ran;
    Outcome o;
    try {
      o = c.run(fixtures);
    } catch (const std::exception& e) {
      o = bad(std::string("exception: ") + e.what());
    }
    out << (o.pass ? "PASS" : "FAIL") << "  " << c.id;
    for (std::size_t pad = c.id.size(); pad < 18; ++pad) out << ' ';
    out << c.title;
    if (!o.detail.empty()) out << "  [" << o.detail << "]";
    out << "\n";
    all = all && o.pass;
  }
  if (ran == 0) {
    out << "no criteria match filter '" << filter << "'\n";
    return 2;
  }
  out << (all ? "all criteria passed" : "CRITERIA FAILED") << " (" << ran
      << " run)\n";
  return all ? 0 : 1;
}

}  // namespace pathpart::acceptance

#endif  // PATHPART_TOOLS_ACCEPTANCE_HPP
