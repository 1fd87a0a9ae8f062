// The partial group of a decorated graph: cyclically reduced words with
// clique support, domain cut out by the segment condition, product by
// reduced form. The clique-poset colimit is never materialized; elements are
// represented directly as words.
#ifndef PATHPART_DECPART_HPP
#define PATHPART_DECPART_HPP

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathpart/graph.hpp"
#include "pathpart/partial.hpp"
#include "pathpart/words.hpp"

namespace pathpart {

// Simple graph plus a non-trivial finite group on every vertex.
struct DecGraph {
  Graph graph;
  std::vector<FinGroup> dec;  // indexed by vertex
  std::vector<std::string> vertex_labels;

  DecGraph(Graph g, std::vector<FinGroup> d,
           std::vector<std::string> labels = {})
      : graph(std::move(g)), dec(std::move(d)), vertex_labels(std::move(labels)) {
    if (static_cast<int>(dec.size()) != graph.num_vertices())
      throw std::invalid_argument("decorated graph: decoration count mismatch");
    for (const FinGroup& h : dec)
      if (h.order() < 2)
        throw std::invalid_argument("decorated graph: trivial decoration rejected");
    if (!vertex_labels.empty() &&
        static_cast<int>(vertex_labels.size()) != graph.num_vertices())
      throw std::invalid_argument("decorated graph: label count mismatch");
  }

  const FinGroup& at(int v) const { return dec.at(v); }

  Decoration decoration() const {
    return [this](int v) -> const FinGroup& { return dec.at(v); };
  }

  std::string vertex_label(int v) const {
    if (v >= 0 && v < static_cast<int>(vertex_labels.size()))
      return vertex_labels[v];
    return std::string(1, static_cast<char>('a' + v));
  }

  int vertex_by_label(const std::string& name) const {
    for (int v = 0; v < graph.num_vertices(); ++v)
      if (vertex_label(v) == name) return v;
    throw std::invalid_argument("unknown vertex label: " + name);
  }
};

// Partial group of the decorated graph. Elements are CRWords whose support
// is pairwise adjacent (equivalently, contained in some clique).
class MGHandle : public PartialGroup {
 public:
  explicit MGHandle(DecGraph dg) : dg_(std::make_shared<DecGraph>(std::move(dg))) {}

  const DecGraph& decgraph() const { return *dg_; }

  bool support_is_clique(const FPWord& w) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (w[i].vertex == w[j].vertex) continue;
        if (!dg_->graph.adjacent(w[i].vertex, w[j].vertex)) return false;
      }
    return true;
  }

  bool contains_word(const FPWord& w) const {
    for (const Letter& l : w) {
      if (l.vertex < 0 || l.vertex >= dg_->graph.num_vertices()) return false;
      if (l.elem <= 0 || l.elem >= dg_->at(l.vertex).order()) return false;
    }
    if (!is_cyclically_reduced(w)) return false;
    return support_is_clique(w);
  }

  Elem unit() const override { return Elem{CRWord{}}; }

  bool contains(const Elem& e) const override {
    if (!std::holds_alternative<CRWord>(e)) return false;
    return contains_word(std::get<CRWord>(e).letters());
  }

  // Condition: union of supports pairwise adjacent, and every contiguous
  // segment multiplies to a cyclically reduced word.
  bool in_domain(const ElemWord& w) const override {
    Decoration dec = dg_->decoration();
    std::vector<const FPWord*> entries;
    entries.reserve(w.size());
    for (const Elem& e : w) {
      if (!std::holds_alternative<CRWord>(e)) return false;
      entries.push_back(&std::get<CRWord>(e).letters());
    }
    // Pairwise-adjacent union of supports.
    {
      FPWord all;
      for (const FPWord* u : entries)
        all.insert(all.end(), u->begin(), u->end());
      if (!support_is_clique(all)) return false;
    }
    // Segment products, reusing each prefix reduction.
    int n = static_cast<int>(entries.size());
    for (int i = 0; i < n; ++i) {
      FPWord acc;
      for (int j = i; j < n; ++j) {
        acc.insert(acc.end(), entries[j]->begin(), entries[j]->end());
        acc = reduce(acc, dec);
        if (!is_cyclically_reduced(acc)) return false;
      }
    }
    return true;
  }

  Elem product(const ElemWord& w) const override {
    Decoration dec = dg_->decoration();
    FPWord cat;
    for (const Elem& e : w) {
      const FPWord& u = std::get<CRWord>(e).letters();
      cat.insert(cat.end(), u.begin(), u.end());
    }
    return Elem{CRWord(reduce(cat, dec))};
  }

  Elem inverse(const Elem& e) const override {
    return Elem{CRWord(invert(std::get<CRWord>(e).letters(), dg_->decoration()))};
  }

  // All contained CRWords of length <= bound, by length then lexicographic
  // on (vertex, elem).
  std::vector<Elem> enum_elems(int bound) const override {
    std::vector<Elem> out = {unit()};
    std::vector<FPWord> frontier = {FPWord{}};
    for (int len = 1; len <= bound; ++len) {
      std::vector<FPWord> next;
      for (const FPWord& w : frontier) {
        for (int v = 0; v < dg_->graph.num_vertices(); ++v) {
          if (!w.empty() && w.back().vertex == v) continue;
          bool clique = true;
          for (const Letter& l : w)
            if (l.vertex != v && !dg_->graph.adjacent(l.vertex, v)) {
              clique = false;
              break;
            }
          if (!clique) continue;
          for (int g = 1; g < dg_->at(v).order(); ++g) {
            FPWord cand = w;
            cand.push_back({v, g});
            next.push_back(std::move(cand));
          }
        }
      }
      std::sort(next.begin(), next.end());
      for (const FPWord& w : next)
        if (is_cyclically_reduced(w)) out.push_back(Elem{CRWord(w)});
      frontier = std::move(next);
    }
    return out;
  }

  std::string describe() const override {
    return "M(G,H) on " + std::to_string(dg_->graph.num_vertices()) + " vertices";
  }

  std::string elem_str(const Elem& e) const override {
    const FPWord& w = std::get<CRWord>(e).letters();
    if (w.empty()) return "()";
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += " ";
      s += dg_->vertex_label(w[i].vertex);
      if (dg_->at(w[i].vertex).order() > 2)
        s += "." + std::to_string(w[i].elem);
    }
    return s + ")";
  }

 private:
  std::shared_ptr<DecGraph> dg_;
};

inline std::shared_ptr<MGHandle> build(DecGraph dg) {
  return std::make_shared<MGHandle>(std::move(dg));
}

// Path partial group: every decoration Z2.
inline std::shared_ptr<MGHandle> path_partial(Graph g,
                                              std::vector<std::string> labels = {}) {
  std::vector<FinGroup> dec(g.num_vertices(), make_cyclic(2));
  return build(DecGraph(std::move(g), std::move(dec), std::move(labels)));
}

}  // namespace pathpart

#endif  // PATHPART_DECPART_HPP
