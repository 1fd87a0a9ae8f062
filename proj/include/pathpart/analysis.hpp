// Structural invariants of a partial group: finite-order elements, maximal
// finite subgroups and their graph, graph recovery, the truncated nerve, and
// the normalizer certificate.
#ifndef PATHPART_ANALYSIS_HPP
#define PATHPART_ANALYSIS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathpart/decpart.hpp"
#include "pathpart/graph.hpp"
#include "pathpart/morphisms.hpp"
#include "pathpart/partial.hpp"

namespace pathpart {

struct AnalysisBounds {
  int elem_bound = 2;    // enumeration size for subgroup candidates
  int power_bound = 12;  // max powers before classifying indeterminate
};

enum class OrderClass { kFinite, kInfiniteOrIndeterminate };

struct OrderInfo {
  Elem elem;
  OrderClass cls = OrderClass::kFinite;
  int order = 0;  // valid when finite
};

// Classifies each enumerated element by its power sequence: finite when it
// returns to the unit within the power bound; otherwise infinite or
// indeterminate at the bound (the power leaves the domain or keeps growing).
inline std::vector<OrderInfo> classify_orders(const PartialGroup& p,
                                              const AnalysisBounds& b) {
  std::vector<OrderInfo> out;
  for (const Elem& e : p.enum_elems(b.elem_bound)) {
    OrderInfo info{e, OrderClass::kInfiniteOrIndeterminate, 0};
    Elem acc = e;  // acc = e^m at step m
    for (int m = 1; m <= b.power_bound; ++m) {
      if (acc == p.unit()) {
        info.cls = OrderClass::kFinite;
        info.order = m;
        break;
      }
      if (m == b.power_bound) break;
      if (!p.in_domain({acc, e})) break;
      acc = p.product({acc, e});
    }
    out.push_back(std::move(info));
  }
  return out;
}

inline std::vector<Elem> finite_order_elements(const PartialGroup& p,
                                               const AnalysisBounds& b) {
  std::vector<Elem> out;
  for (const OrderInfo& i : classify_orders(p, b))
    if (i.cls == OrderClass::kFinite) out.push_back(i.elem);
  return out;
}

// A finite subgroup with its induced table.
struct SubgroupRecord {
  std::vector<Elem> elements;  // unit first, rest canonical order
  FinGroup table;
};

namespace detail {

// Closure of a seed set under inversion and pairwise in-domain products.
// Returns nullopt when a required product leaves the domain or the closure
// exceeds the cap.
inline std::optional<std::vector<Elem>> partial_closure(const PartialGroup& p,
                                                        std::vector<Elem> seed,
                                                        std::size_t cap = 64) {
  std::set<Elem> out(seed.begin(), seed.end());
  out.insert(p.unit());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Elem> snapshot(out.begin(), out.end());
    for (const Elem& x : snapshot) {
      if (out.insert(p.inverse(x)).second) changed = true;
      for (const Elem& y : snapshot) {
        if (!p.in_domain({x, y})) return std::nullopt;
        if (out.insert(p.product({x, y})).second) changed = true;
      }
      if (out.size() > cap) return std::nullopt;
    }
  }
  return std::vector<Elem>(out.begin(), out.end());
}

}  // namespace detail

// Maximal (under inclusion) finite subgroups among closures of finite-order
// elements, grown by pairwise merges. For M(G,H) handles this terminates at
// the decorating groups.
inline std::vector<SubgroupRecord> maximal_finite_subgroups(
    const PartialGroup& p, const AnalysisBounds& b = {}) {
  std::vector<std::vector<Elem>> subs;
  auto add_unique = [&](std::vector<Elem> s) {
    std::sort(s.begin(), s.end());
    for (const auto& t : subs)
      if (t == s) return false;
    subs.push_back(std::move(s));
    return true;
  };
  for (const Elem& e : finite_order_elements(p, b)) {
    if (e == p.unit()) continue;
    auto cl = detail::partial_closure(p, {e});
    if (cl && is_subgroup(p, *cl)) add_unique(*cl);
  }
  // Pairwise merges until stable.
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < subs.size() && !merged; ++i)
      for (std::size_t j = i + 1; j < subs.size() && !merged; ++j) {
        std::vector<Elem> both = subs[i];
        both.insert(both.end(), subs[j].begin(), subs[j].end());
        auto cl = detail::partial_closure(p, both);
        if (cl && is_subgroup(p, *cl)) {
          std::vector<Elem> c = *cl;
          std::sort(c.begin(), c.end());
          if (c != subs[i] && c != subs[j]) {
            subs.erase(subs.begin() + j);
            subs.erase(subs.begin() + i);
            add_unique(std::move(c));
            merged = true;
          }
        }
      }
  }
  // Drop non-maximal and trivial records.
  std::vector<SubgroupRecord> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].size() < 2) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < subs.size(); ++j)
      if (i != j && std::includes(subs[j].begin(), subs[j].end(),
                                  subs[i].begin(), subs[i].end()))
        maximal = false;
    if (!maximal) continue;
    std::vector<Elem> order;
    FinGroup table = induced_table(p, subs[i], &order);
    out.push_back(SubgroupRecord{std::move(order), std::move(table)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b2) {
    return a.elements < b2.elements;
  });
  return out;
}

// Graph on the maximal finite subgroup records: adjacent when some pair of
// non-identity elements forms a domain word.
inline Graph maxsub_graph(const PartialGroup& p,
                          const std::vector<SubgroupRecord>& records) {
  int n = static_cast<int>(records.size());
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool adj = false;
      for (std::size_t a = 1; a < records[i].elements.size() && !adj; ++a)
        for (std::size_t b2 = 1; b2 < records[j].elements.size() && !adj; ++b2)
          if (p.in_domain({records[i].elements[a], records[j].elements[b2]}))
            adj = true;
      if (adj) g.add_edge(i, j);
    }
  return g;
}

// The "stronger" variant: adjacent when every pair of non-identity elements
// forms a domain word.
inline Graph strong_maxsub_graph(const PartialGroup& p,
                                 const std::vector<SubgroupRecord>& records) {
  int n = static_cast<int>(records.size());
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool adj = true;
      for (std::size_t a = 1; a < records[i].elements.size() && adj; ++a)
        for (std::size_t b2 = 1; b2 < records[j].elements.size() && adj; ++b2)
          if (!p.in_domain({records[i].elements[a], records[j].elements[b2]}))
            adj = false;
      if (adj) g.add_edge(i, j);
    }
  return g;
}

inline Graph maxsub_graph(const PartialGroup& p, const AnalysisBounds& b = {}) {
  return maxsub_graph(p, maximal_finite_subgroups(p, b));
}

inline Graph strong_maxsub_graph(const PartialGroup& p,
                                 const AnalysisBounds& b = {}) {
  return strong_maxsub_graph(p, maximal_finite_subgroups(p, b));
}

// Recovery of the underlying graph from the partial group alone.
inline std::optional<GraphMap> recover_check(const DecGraph& dg,
                                             const AnalysisBounds& b = {}) {
  MGHandle h{dg};
  Graph recovered = maxsub_graph(h, b);
  return isomorphic(recovered, dg.graph);
}

// Truncated nerve: k-simplices are the domain words of length k, degenerate
// entries included; faces multiply adjacent entries (dropping ends), and
// degeneracies insert the unit.
struct NerveTruncation {
  int dim = 0;
  std::vector<std::vector<ElemWord>> simplices;  // simplices[k]

  // d_i on a stored k-simplex.
  static ElemWord face(const PartialGroup& p, const ElemWord& w, int i) {
    int k = static_cast<int>(w.size());
    ElemWord out;
    if (i == 0) {
      out.assign(w.begin() + 1, w.end());
    } else if (i == k) {
      out.assign(w.begin(), w.end() - 1);
    } else {
      out.assign(w.begin(), w.begin() + (i - 1));
      out.push_back(p.product({w[i - 1], w[i]}));
      out.insert(out.end(), w.begin() + i + 1, w.end());
    }
    return out;
  }

  static ElemWord degeneracy(const PartialGroup& p, const ElemWord& w, int i) {
    ElemWord out(w.begin(), w.begin() + i);
    out.push_back(p.unit());
    out.insert(out.end(), w.begin() + i, w.end());
    return out;
  }
};

inline NerveTruncation nerve(const PartialGroup& p, int dim, int elem_bound) {
  NerveTruncation n;
  n.dim = dim;
  std::vector<Elem> elems = p.enum_elems(elem_bound);  // includes the unit
  n.simplices.resize(dim + 1);
  n.simplices[0] = {ElemWord{}};
  std::vector<ElemWord> frontier = {{}};
  for (int k = 1; k <= dim; ++k) {
    std::vector<ElemWord> next;
    for (const ElemWord& w : frontier)
      for (const Elem& e : elems) {
        ElemWord cand = w;
        cand.push_back(e);
        if (p.in_domain(cand)) next.push_back(std::move(cand));
      }
    n.simplices[k] = next;
    frontier = std::move(next);
  }
  return n;
}

// Exhaustive simplicial-identity and inner-horn checks on a truncation.
// Returns an explanatory message on the first violation, empty on success.
inline std::string verify_nerve(const PartialGroup& p,
                                const NerveTruncation& n) {
  using NT = NerveTruncation;
  for (int k = 2; k <= n.dim; ++k)
    for (const ElemWord& w : n.simplices[k]) {
      // d_i d_j = d_{j-1} d_i for i < j.
      for (int j = 1; j <= k; ++j)
        for (int i = 0; i < j; ++i) {
          ElemWord a = NT::face(p, NT::face(p, w, j), i);
          ElemWord b = NT::face(p, NT::face(p, w, i), j - 1);
          if (!(a == b))
            return "d_i d_j identity fails at (" + std::to_string(i) + "," +
                   std::to_string(j) + ") on " + detail::word_desc(p, w);
        }
    }
  for (int k = 0; k <= n.dim; ++k)
    for (const ElemWord& w : n.simplices[k]) {
      // s_i s_j = s_{j+1} s_i for i <= j, while results stay in the bound.
      if (k + 2 <= n.dim) {
        for (int j = 0; j <= k; ++j)
          for (int i = 0; i <= j; ++i) {
            ElemWord a = NT::degeneracy(p, NT::degeneracy(p, w, j), i);
            ElemWord b = NT::degeneracy(p, NT::degeneracy(p, w, i), j + 1);
            if (!(a == b))
              return "s_i s_j identity fails on " + detail::word_desc(p, w);
          }
      }
      // d_i s_j relations.
      if (k + 1 <= n.dim) {
        for (int j = 0; j <= k; ++j) {
          ElemWord sjw = NT::degeneracy(p, w, j);
          if (!p.in_domain(sjw))
            return "degenerate simplex leaves the domain on " +
                   detail::word_desc(p, w);
          for (int i = 0; i <= k + 1; ++i) {
            ElemWord lhs = NT::face(p, sjw, i);
            ElemWord rhs;
            if (i == j || i == j + 1) {
              rhs = w;
            } else if (i < j) {
              rhs = NT::degeneracy(p, NT::face(p, w, i), j - 1);
            } else {
              rhs = NT::degeneracy(p, NT::face(p, w, i - 1), j);
            }
            if (!(lhs == rhs))
              return "d_i s_j identity fails at (" + std::to_string(i) + "," +
                     std::to_string(j) + ") on " + detail::word_desc(p, w);
          }
        }
      }
    }
  // Inner horns at dimension 2: every composable pair has a filler with the
  // right outer faces.
  if (n.dim >= 2) {
    std::set<ElemWord> two(n.simplices[2].begin(), n.simplices[2].end());
    for (const ElemWord& x : n.simplices[1])
      for (const ElemWord& y : n.simplices[1]) {
        ElemWord pair = {x[0], y[0]};
        if (!p.in_domain(pair)) continue;
        if (!two.count(pair))
          return "inner horn without stored filler: " +
                 detail::word_desc(p, pair);
        if (!(NT::face(p, pair, 2) == x) || !(NT::face(p, pair, 0) == y))
          return "filler faces mismatch on " + detail::word_desc(p, pair);
      }
  }
  return {};
}

// Over-approximation certificate for the normalizer: all enumerated eta such
// that (eta, mu, eta^-1) is a domain word for every enumerated mu. True
// normalizer elements always qualify, so a result of {unit} certifies
// triviality among the enumerated elements.
inline std::vector<Elem> normalizer(const PartialGroup& p, int elem_bound) {
  std::vector<Elem> elems = p.enum_elems(elem_bound);
  std::vector<Elem> out;
  for (const Elem& eta : elems) {
    Elem eta_inv = p.inverse(eta);
    bool ok = true;
    for (const Elem& mu : elems)
      if (!p.in_domain({eta, mu, eta_inv})) { ok = false; break; }
    if (ok) out.push_back(eta);
  }
  return out;
}

// |E(M)| via the exact sequence N -> Aut -> E -> 1: equals |Aut| when the
// normalizer certificate is trivial. Refuses otherwise.
inline int homotopy_selfequiv_order(const MGHandle& h, int elem_bound,
                                    int max_vertices = 128) {
  std::vector<Elem> nz = normalizer(h, elem_bound);
  if (!(nz.size() == 1 && nz[0] == h.unit()))
    throw std::runtime_error(
        "normalizer certificate is non-trivial at this bound; the "
        "self-equivalence group requires the quotient and is out of "
        "certified scope");
  return aut_group(h.decgraph(), max_vertices).order();
}

}  // namespace pathpart

#endif  // PATHPART_ANALYSIS_HPP
