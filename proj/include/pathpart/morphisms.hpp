// Decorated-graph morphisms, their induced partial-group homomorphisms, the
// categorical automorphism group, and an independent truncated brute-force
// automorphism search over the partial group itself.
#ifndef PATHPART_MORPHISMS_HPP
#define PATHPART_MORPHISMS_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathpart/decpart.hpp"
#include "pathpart/fingroup.hpp"
#include "pathpart/graph.hpp"
#include "pathpart/partial.hpp"

namespace pathpart {

// Graph homomorphism plus an injective group homomorphism per vertex.
struct DecMorphism {
  const DecGraph* source = nullptr;
  const DecGraph* target = nullptr;
  std::vector<int> vmap;                    // vertex -> vertex
  std::vector<std::vector<int>> fam;        // per-vertex image arrays

  bool operator==(const DecMorphism& o) const {
    return vmap == o.vmap && fam == o.fam;
  }
  bool operator<(const DecMorphism& o) const {
    if (vmap != o.vmap) return vmap < o.vmap;
    return fam < o.fam;
  }
};

inline void validate(const DecMorphism& m) {
  GraphMap gm{&m.source->graph, &m.target->graph, m.vmap};
  if (!is_graph_hom(gm))
    throw std::invalid_argument("dec morphism: vertex map is not a graph homomorphism");
  int n = m.source->graph.num_vertices();
  if (static_cast<int>(m.fam.size()) != n)
    throw std::invalid_argument("dec morphism: family size mismatch");
  for (int v = 0; v < n; ++v) {
    GroupMap f{&m.source->at(v), &m.target->at(m.vmap[v]), m.fam[v]};
    if (!is_homomorphism(f) || !is_injective(f))
      throw std::invalid_argument(
          "dec morphism: family map at vertex " + std::to_string(v) +
          " is not an injective homomorphism");
  }
}

inline DecMorphism identity_morphism(const DecGraph& dg) {
  DecMorphism m{&dg, &dg, {}, {}};
  int n = dg.graph.num_vertices();
  for (int v = 0; v < n; ++v) {
    m.vmap.push_back(v);
    std::vector<int> img(dg.at(v).order());
    for (int x = 0; x < dg.at(v).order(); ++x) img[x] = x;
    m.fam.push_back(std::move(img));
  }
  return m;
}

// m2 after m1.
inline DecMorphism compose(const DecMorphism& m2, const DecMorphism& m1) {
  DecMorphism r{m1.source, m2.target, {}, {}};
  int n = m1.source->graph.num_vertices();
  for (int v = 0; v < n; ++v) {
    int w = m1.vmap[v];
    r.vmap.push_back(m2.vmap[w]);
    std::vector<int> img;
    img.reserve(m1.fam[v].size());
    for (int x : m1.fam[v]) img.push_back(m2.fam[w][x]);
    r.fam.push_back(std::move(img));
  }
  return r;
}

// Computable homomorphism between partial-group handles.
struct PartialHom {
  const PartialGroup* source = nullptr;
  const PartialGroup* target = nullptr;
  std::function<Elem(const Elem&)> map;

  ElemWord apply(const ElemWord& w) const {
    ElemWord out;
    out.reserve(w.size());
    for (const Elem& e : w) out.push_back(map(e));
    return out;
  }
};

// Letterwise map (v, g) -> (vmap(v), fam_v(g)) on CRWords.
inline PartialHom induced_hom(const DecMorphism& m, const MGHandle& src,
                              const MGHandle& dst) {
  validate(m);
  DecMorphism copy = m;
  return PartialHom{
      &src, &dst, [copy](const Elem& e) -> Elem {
        const FPWord& w = std::get<CRWord>(e).letters();
        FPWord out;
        out.reserve(w.size());
        for (const Letter& l : w)
          out.push_back({copy.vmap[l.vertex], copy.fam[l.vertex][l.elem]});
        return Elem{CRWord(std::move(out))};
      }};
}

struct HomVerdict {
  bool pass = true;
  std::string counterexample;
  std::vector<ElemWord> witness;
  bool complete = true;
};

// Verifies H1 (domain words map into domain words) and H2 (products commute
// with the map) on all enumerated domain words up to the bounds.
inline HomVerdict check_hom(const PartialHom& f, int max_elem_size,
                            int max_word_len,
                            std::size_t enum_cap = 500'000) {
  HomVerdict v;
  std::vector<Elem> elems = f.source->enum_elems(max_elem_size);
  std::vector<ElemWord> domain = detail::enum_domain_words(
      *f.source, elems, max_word_len, enum_cap, &v.complete);
  for (const ElemWord& w : domain) {
    ElemWord img = f.apply(w);
    for (const Elem& e : img)
      if (!f.target->contains(e)) {
        v.pass = false;
        v.counterexample = "image element leaves the target alphabet on " +
                           detail::word_desc(*f.source, w);
        v.witness = {w};
        return v;
      }
    if (!f.target->in_domain(img)) {
      v.pass = false;
      v.counterexample = "H1 fails: image of domain word leaves the domain on " +
                         detail::word_desc(*f.source, w);
      v.witness = {w, img};
      return v;
    }
    if (!(f.target->product(img) == f.map(f.source->product(w)))) {
      v.pass = false;
      v.counterexample = "H2 fails: products do not commute with the map on " +
                         detail::word_desc(*f.source, w);
      v.witness = {w, img};
      return v;
    }
  }
  return v;
}

// Automorphism group of a decorated graph: pairs of a graph automorphism and
// a family of group isomorphisms H_v -> H_{sigma(v)}, with composition
// table, kernel (identity vertex map) and image in the graph automorphisms.
struct AutGroupResult {
  std::vector<DecMorphism> elements;   // identity first, then sorted
  FinGroup table;                      // composition table
  std::vector<int> kernel;             // indices with identity vertex map
  std::vector<std::vector<int>> image_in_graph_aut;  // distinct vertex maps

  int order() const { return static_cast<int>(elements.size()); }
};

inline AutGroupResult aut_group(const DecGraph& dg, int max_vertices = 128) {
  std::vector<GraphMap> gautos = graph_automorphisms(dg.graph, max_vertices);
  int n = dg.graph.num_vertices();
  std::vector<DecMorphism> elements;
  for (const GraphMap& sigma : gautos) {
    // Isomorphism choices per vertex; empty at any vertex kills this sigma.
    std::vector<std::vector<GroupMap>> choices(n);
    bool feasible = true;
    for (int v = 0; v < n; ++v) {
      choices[v] = isomorphisms(dg.at(v), dg.at(sigma.vmap[v]));
      if (choices[v].empty()) { feasible = false; break; }
    }
    if (!feasible) continue;
    std::vector<int> pick(n, 0);
    while (true) {
      DecMorphism m{&dg, &dg, sigma.vmap, {}};
      for (int v = 0; v < n; ++v) m.fam.push_back(choices[v][pick[v]].images);
      elements.push_back(std::move(m));
      int v = n - 1;
      while (v >= 0 && pick[v] + 1 == static_cast<int>(choices[v].size())) {
        pick[v] = 0;
        --v;
      }
      if (v < 0) break;
      ++pick[v];
    }
  }
  std::sort(elements.begin(), elements.end());
  DecMorphism id = identity_morphism(dg);
  auto it = std::find(elements.begin(), elements.end(), id);
  if (it == elements.end())
    throw std::runtime_error("aut_group: identity not found");
  std::rotate(elements.begin(), it, it + 1);

  int order = static_cast<int>(elements.size());
  auto index_of = [&](const DecMorphism& m) {
    for (int i = 0; i < order; ++i)
      if (elements[i] == m) return i;
    throw std::runtime_error("aut_group: not closed under composition");
  };
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      table[i][j] = index_of(compose(elements[i], elements[j]));

  AutGroupResult res{std::move(elements), FinGroup(std::move(table)), {}, {}};
  std::vector<int> idmap(n);
  for (int v = 0; v < n; ++v) idmap[v] = v;
  std::set<std::vector<int>> images;
  for (int i = 0; i < res.order(); ++i) {
    if (res.elements[i].vmap == idmap) res.kernel.push_back(i);
    images.insert(res.elements[i].vmap);
  }
  res.image_in_graph_aut.assign(images.begin(), images.end());
  return res;
}

// A truncated automorphism candidate: a bijection of the length-1 alphabet.
using LetterMap = std::map<Letter, Letter>;

namespace detail {

inline Elem letter_elem(const Letter& l) { return Elem{CRWord(FPWord{l})}; }

// Applies a letter map to an element letterwise and reduces the image as a
// free-product word (letterwise images of inner segments need not be domain
// words even when the whole image is an element); nullopt when the result is
// not an element of the handle.
inline std::optional<Elem> apply_letter_map(const MGHandle& h,
                                            const LetterMap& phi,
                                            const Elem& e) {
  const FPWord& w = std::get<CRWord>(e).letters();
  FPWord img;
  img.reserve(w.size());
  for (const Letter& l : w) {
    auto it = phi.find(l);
    if (it == phi.end()) return std::nullopt;
    img.push_back(it->second);
  }
  FPWord red = reduce(img, h.decgraph().decoration());
  if (!h.contains_word(red)) return std::nullopt;
  return Elem{CRWord(std::move(red))};
}

}  // namespace detail

// Independent oracle for the automorphism group: backtracking over bijections
// of the length-1 alphabet, consistency-checked against domain membership and
// products of the partial group only (no decorated-graph reasoning). The
// surviving maps are exactly those whose letterwise extension permutes the
// elements up to max_len and preserves domain membership iff-wise, products,
// inverses, and the unit on words of up to 3 elements within the length
// budget.
inline std::vector<LetterMap> brute_aut_truncated(const MGHandle& h,
                                                  int max_len) {
  std::vector<Letter> letters;
  for (const Elem& e : h.enum_elems(1)) {
    const FPWord& w = std::get<CRWord>(e).letters();
    if (w.size() == 1) letters.push_back(w[0]);
  }
  std::sort(letters.begin(), letters.end());
  int nl = static_cast<int>(letters.size());

  std::vector<Elem> elems = h.enum_elems(max_len);
  std::set<Elem> elem_set(elems.begin(), elems.end());

  // Pair domain/product data used for incremental pruning.
  auto pair_in_domain = [&](const Letter& x, const Letter& y) {
    return h.in_domain({detail::letter_elem(x), detail::letter_elem(y)});
  };
  auto pair_product = [&](const Letter& x, const Letter& y) {
    return h.product({detail::letter_elem(x), detail::letter_elem(y)});
  };

  std::vector<LetterMap> found;
  std::vector<int> image(nl, -1);
  std::vector<char> used(nl, 0);

  auto full_check = [&](const LetterMap& phi) -> bool {
    // The extension must permute the truncated element set.
    std::set<Elem> image_set;
    std::map<std::string, Elem> fwd;  // keyed element -> image
    for (const Elem& e : elems) {
      auto img = detail::apply_letter_map(h, phi, e);
      if (!img || !elem_set.count(*img)) return false;
      if (!image_set.insert(*img).second) return false;
      fwd.emplace(elem_key(e), *img);
    }
    auto phi_of = [&](const Elem& e) { return fwd.at(elem_key(e)); };
    // Unit and inverses.
    if (!(phi_of(h.unit()) == h.unit())) return false;
    for (const Elem& e : elems)
      if (!(phi_of(h.inverse(e)) == h.inverse(phi_of(e)))) return false;
    // Domain membership (iff) and products on 2- and 3-element words whose
    // total length stays within the enumeration budget.
    std::vector<std::vector<const Elem*>> by_len(max_len + 1);
    for (const Elem& e : elems) {
      std::size_t len = std::get<CRWord>(e).length();
      if (len >= 1) by_len[len].push_back(&e);
    }
    auto check_tuple = [&](const ElemWord& w) -> bool {
      ElemWord img;
      img.reserve(w.size());
      for (const Elem& e : w) img.push_back(phi_of(e));
      bool din = h.in_domain(w);
      if (din != h.in_domain(img)) return false;
      if (din && !(h.product(img) == phi_of(h.product(w)))) return false;
      return true;
    };
    for (int l1 = 1; l1 <= max_len; ++l1)
      for (int l2 = 1; l1 + l2 <= max_len; ++l2) {
        for (const Elem* a : by_len[l1])
          for (const Elem* b : by_len[l2])
            if (!check_tuple({*a, *b})) return false;
        for (int l3 = 1; l1 + l2 + l3 <= max_len; ++l3)
          for (const Elem* a : by_len[l1])
            for (const Elem* b : by_len[l2])
              for (const Elem* c : by_len[l3])
                if (!check_tuple({*a, *b, *c})) return false;
      }
    return true;
  };

  auto consistent = [&](int i) -> bool {
    const Letter& x = letters[i];
    const Letter& fx = letters[image[i]];
    for (int j = 0; j <= i; ++j) {
      if (image[j] < 0) continue;
      const Letter& y = letters[j];
      const Letter& fy = letters[image[j]];
      for (auto [p, q, fp, fq] :
           {std::array<const Letter*, 4>{&x, &y, &fx, &fy},
            std::array<const Letter*, 4>{&y, &x, &fy, &fx}}) {
        bool din = pair_in_domain(*p, *q);
        if (din != pair_in_domain(*fp, *fq)) return false;
        if (!din) continue;
        Elem prod = pair_product(*p, *q);
        Elem iprod = pair_product(*fp, *fq);
        const FPWord& pw = std::get<CRWord>(prod).letters();
        const FPWord& ipw = std::get<CRWord>(iprod).letters();
        if (pw.size() != ipw.size()) return false;
        if (pw.empty()) continue;  // both the unit
        if (pw.size() == 1) {
          // Product is a letter; its image is forced when assigned.
          auto pos = std::lower_bound(letters.begin(), letters.end(), pw[0]);
          int k = static_cast<int>(pos - letters.begin());
          if (image[k] >= 0 && !(letters[image[k]] == ipw[0])) return false;
        }
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, int i) -> void {
    if (i == nl) {
      LetterMap phi;
      for (int k = 0; k < nl; ++k) phi[letters[k]] = letters[image[k]];
      if (full_check(phi)) found.push_back(std::move(phi));
      return;
    }
    for (int cand = 0; cand < nl; ++cand) {
      if (used[cand]) continue;
      image[i] = cand;
      used[cand] = 1;
      if (consistent(i)) self(self, i + 1);
      image[i] = -1;
      used[cand] = 0;
    }
  };
  rec(rec, 0);
  return found;
}

// Restriction of an induced automorphism to the length-1 alphabet, for
// comparison with the oracle output.
inline LetterMap letter_restriction(const DecMorphism& m) {
  LetterMap phi;
  int n = m.source->graph.num_vertices();
  for (int v = 0; v < n; ++v)
    for (int g = 1; g < m.source->at(v).order(); ++g)
      phi[{v, g}] = {m.vmap[v], m.fam[v][g]};
  return phi;
}

}  // namespace pathpart

#endif  // PATHPART_MORPHISMS_HPP
