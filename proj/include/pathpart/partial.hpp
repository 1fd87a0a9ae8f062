// Generic partial-group handles, the bounded axiom checker, and the basic
// constructions: groups as partial groups, the free partial group on one
// generator, and colimits of finite-group injection diagrams.
#ifndef PATHPART_PARTIAL_HPP
#define PATHPART_PARTIAL_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "pathpart/fingroup.hpp"
#include "pathpart/words.hpp"

namespace pathpart {

// Canonical element token. Group and colimit handles use the integer
// alternative (element index / equivalence-class id); word handles use CRWord.
using Elem = std::variant<long long, CRWord>;
using ElemWord = std::vector<Elem>;

inline std::string elem_key(const Elem& e) {
  if (std::holds_alternative<long long>(e))
    return "#" + std::to_string(std::get<long long>(e));
  return word_str(std::get<CRWord>(e).letters());
}

// Intensional partial group: membership tests, bounded enumerators, domain
// test, product, inversion, unit. Implementations are immutable after
// construction.
class PartialGroup {
 public:
  virtual ~PartialGroup() = default;

  virtual Elem unit() const = 0;
  virtual bool contains(const Elem& e) const = 0;
  // Precondition: every entry satisfies contains().
  virtual bool in_domain(const ElemWord& w) const = 0;
  virtual Elem product(const ElemWord& w) const = 0;
  virtual Elem inverse(const Elem& e) const = 0;
  // All elements of "size" up to the bound (word length for word-based
  // handles; ignored by finite handles). Deterministic order, unit first.
  virtual std::vector<Elem> enum_elems(int bound) const = 0;
  virtual std::string describe() const = 0;

  virtual std::string elem_str(const Elem& e) const { return elem_key(e); }

  Elem checked_product(const ElemWord& w) const {
    if (!in_domain(w))
      throw std::invalid_argument(describe() +
                                  ": product called on out-of-domain word");
    return product(w);
  }

  ElemWord invert_word(const ElemWord& w) const {
    ElemWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      out.push_back(inverse(*it));
    return out;
  }
};

// ---------------------------------------------------------------------------
// Groups as partial groups: the domain is the whole word monoid.

class GroupHandle : public PartialGroup {
 public:
  explicit GroupHandle(FinGroup g) : group_(std::move(g)) {}

  const FinGroup& group() const { return group_; }

  Elem unit() const override { return Elem{0LL}; }

  bool contains(const Elem& e) const override {
    if (!std::holds_alternative<long long>(e)) return false;
    long long x = std::get<long long>(e);
    return x >= 0 && x < group_.order();
  }

  bool in_domain(const ElemWord&) const override { return true; }

  Elem product(const ElemWord& w) const override {
    int acc = 0;
    for (const Elem& e : w) acc = group_.mul(acc, static_cast<int>(std::get<long long>(e)));
    return Elem{static_cast<long long>(acc)};
  }

  Elem inverse(const Elem& e) const override {
    return Elem{static_cast<long long>(group_.inv(static_cast<int>(std::get<long long>(e))))};
  }

  std::vector<Elem> enum_elems(int) const override {
    std::vector<Elem> out;
    for (int i = 0; i < group_.order(); ++i) out.push_back(Elem{static_cast<long long>(i)});
    return out;
  }

  std::string describe() const override {
    return "group of order " + std::to_string(group_.order());
  }

  std::string elem_str(const Elem& e) const override {
    return group_.label(static_cast<int>(std::get<long long>(e)));
  }

 private:
  FinGroup group_;
};

inline std::shared_ptr<PartialGroup> from_group(FinGroup g) {
  return std::make_shared<GroupHandle>(std::move(g));
}

// ---------------------------------------------------------------------------
// Free partial group on one generator: elements {1, a, a^-1}, domain the
// words whose non-degenerate core alternates a and a^-1.

class FreeOnOneHandle : public PartialGroup {
 public:
  static constexpr long long kUnit = 0, kGen = 1, kGenInv = 2;

  Elem unit() const override { return Elem{kUnit}; }

  bool contains(const Elem& e) const override {
    if (!std::holds_alternative<long long>(e)) return false;
    long long x = std::get<long long>(e);
    return x >= 0 && x <= 2;
  }

  bool in_domain(const ElemWord& w) const override {
    long long prev = kUnit;
    for (const Elem& e : w) {
      long long x = std::get<long long>(e);
      if (x == kUnit) continue;
      if (prev != kUnit && x == prev) return false;
      prev = x;
    }
    return true;
  }

  Elem product(const ElemWord& w) const override {
    int balance = 0;
    for (const Elem& e : w) {
      long long x = std::get<long long>(e);
      if (x == kGen) ++balance;
      if (x == kGenInv) --balance;
    }
    if (balance == 0) return Elem{kUnit};
    return Elem{balance > 0 ? kGen : kGenInv};
  }

  Elem inverse(const Elem& e) const override {
    long long x = std::get<long long>(e);
    if (x == kUnit) return Elem{kUnit};
    return Elem{x == kGen ? kGenInv : kGen};
  }

  std::vector<Elem> enum_elems(int) const override {
    return {Elem{kUnit}, Elem{kGen}, Elem{kGenInv}};
  }

  std::string describe() const override { return "free partial group on one generator"; }

  std::string elem_str(const Elem& e) const override {
    switch (std::get<long long>(e)) {
      case kGen: return "a";
      case kGenInv: return "a^-1";
      default: return "1";
    }
  }
};

inline std::shared_ptr<PartialGroup> free_on_one() {
  return std::make_shared<FreeOnOneHandle>();
}

// ---------------------------------------------------------------------------
// Colimit of a finite diagram of finite groups along injective homomorphisms.

struct GroupDiagram {
  std::vector<FinGroup> nodes;
  // (source node, target node, image array of a GroupMap source -> target).
  struct Arrow {
    int src = 0;
    int dst = 0;
    std::vector<int> images;
  };
  std::vector<Arrow> arrows;
};

// Elements are equivalence classes of (node, element) pairs under the arrow
// identifications; a word is multipliable iff all entries have
// representatives in one common node, and the product is evaluated there.
class ColimitHandle : public PartialGroup {
 public:
  explicit ColimitHandle(GroupDiagram d) : diagram_(std::move(d)) {
    int n = static_cast<int>(diagram_.nodes.size());
    if (n == 0) throw std::invalid_argument("colimit: empty diagram");
    offsets_.resize(n + 1, 0);
    for (int i = 0; i < n; ++i)
      offsets_[i + 1] = offsets_[i] + diagram_.nodes[i].order();
    int total = offsets_[n];
    parent_.resize(total);
    for (int i = 0; i < total; ++i) parent_[i] = i;

    for (const auto& a : diagram_.arrows) {
      const FinGroup& src = diagram_.nodes.at(a.src);
      const FinGroup& dst = diagram_.nodes.at(a.dst);
      GroupMap m{&src, &dst, a.images};
      if (!is_homomorphism(m) || !is_injective(m))
        throw std::invalid_argument("colimit: arrow is not an injective homomorphism");
      for (int x = 0; x < src.order(); ++x)
        unite(pair_id(a.src, x), pair_id(a.dst, a.images[x]));
    }
    // Canonical class ids ordered by least (node, element) representative.
    std::map<int, long long> root_to_class;
    for (int i = 0; i < total; ++i) {
      int r = find(i);
      if (!root_to_class.count(r)) {
        long long id = static_cast<long long>(root_to_class.size());
        root_to_class[r] = id;
        class_rep_.push_back(i);
      }
    }
    // Re-walk in pair order so class ids follow the least representative.
    class_of_pair_.resize(total);
    std::map<int, long long> assigned;
    class_rep_.clear();
    for (int i = 0; i < total; ++i) {
      int r = find(i);
      auto it = assigned.find(r);
      if (it == assigned.end()) {
        it = assigned.emplace(r, static_cast<long long>(assigned.size())).first;
        class_rep_.push_back(i);
      }
      class_of_pair_[i] = it->second;
    }
    // Per-node element -> class and class -> representative-in-node maps.
    int classes = static_cast<int>(class_rep_.size());
    rep_in_node_.assign(n, std::vector<int>(classes, -1));
    for (int node = 0; node < n; ++node)
      for (int x = 0; x < diagram_.nodes[node].order(); ++x)
        rep_in_node_[node][class_of_pair_[pair_id(node, x)]] = x;
  }

  const GroupDiagram& diagram() const { return diagram_; }
  int num_classes() const { return static_cast<int>(class_rep_.size()); }

  long long class_of(int node, int elem) const {
    return class_of_pair_[pair_id(node, elem)];
  }

  Elem unit() const override { return Elem{class_of_pair_[pair_id(0, 0)]}; }

  bool contains(const Elem& e) const override {
    if (!std::holds_alternative<long long>(e)) return false;
    long long x = std::get<long long>(e);
    return x >= 0 && x < num_classes();
  }

  bool in_domain(const ElemWord& w) const override {
    return witness_node(w).has_value();
  }

  Elem product(const ElemWord& w) const override {
    auto node = witness_node(w);
    if (!node) throw std::invalid_argument("colimit: word has no witnessing node");
    const FinGroup& g = diagram_.nodes[*node];
    int acc = 0;
    for (const Elem& e : w)
      acc = g.mul(acc, rep_in_node_[*node][std::get<long long>(e)]);
    return Elem{class_of(*node, acc)};
  }

  Elem inverse(const Elem& e) const override {
    long long c = std::get<long long>(e);
    int pair = class_rep_[c];
    auto [node, x] = pair_of(pair);
    return Elem{class_of(node, diagram_.nodes[node].inv(x))};
  }

  std::vector<Elem> enum_elems(int) const override {
    std::vector<Elem> out;
    for (long long c = 0; c < num_classes(); ++c) out.push_back(Elem{c});
    return out;
  }

  std::string describe() const override {
    return "colimit of " + std::to_string(diagram_.nodes.size()) +
           " finite groups (" + std::to_string(num_classes()) + " classes)";
  }

  std::string elem_str(const Elem& e) const override {
    long long c = std::get<long long>(e);
    auto [node, x] = pair_of(class_rep_[c]);
    return "[" + diagram_.nodes[node].label(x) + "@" + std::to_string(node) + "]";
  }

  // All nodes containing representatives of every entry of w; used by the
  // witness-independence test.
  std::vector<int> witness_nodes(const ElemWord& w) const {
    std::vector<int> out;
    for (int node = 0; node < static_cast<int>(diagram_.nodes.size()); ++node) {
      bool ok = true;
      for (const Elem& e : w)
        if (rep_in_node_[node][std::get<long long>(e)] < 0) { ok = false; break; }
      if (ok) out.push_back(node);
    }
    return out;
  }

  // Product evaluated in a specific witnessing node.
  Elem product_in_node(const ElemWord& w, int node) const {
    const FinGroup& g = diagram_.nodes[node];
    int acc = 0;
    for (const Elem& e : w) acc = g.mul(acc, rep_in_node_[node][std::get<long long>(e)]);
    return Elem{class_of(node, acc)};
  }

 private:
  int pair_id(int node, int elem) const { return offsets_[node] + elem; }
  std::pair<int, int> pair_of(int pair) const {
    int node = 0;
    while (offsets_[node + 1] <= pair) ++node;
    return {node, pair - offsets_[node]};
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

  std::optional<int> witness_node(const ElemWord& w) const {
    auto nodes = witness_nodes(w);
    if (nodes.empty()) return std::nullopt;
    return nodes.front();
  }

  GroupDiagram diagram_;
  std::vector<int> offsets_;
  mutable std::vector<int> parent_;
  std::vector<long long> class_of_pair_;
  std::vector<int> class_rep_;
  std::vector<std::vector<int>> rep_in_node_;
};

inline std::shared_ptr<ColimitHandle> colimit_of_groups(GroupDiagram d) {
  return std::make_shared<ColimitHandle>(std::move(d));
}

// ---------------------------------------------------------------------------
// Bounded axiom checking.

struct AxiomVerdict {
  bool pass = true;
  // Human-readable counterexample; empty when passing.
  std::string counterexample;
  // The offending word(s), replayable through the handle.
  std::vector<ElemWord> witness;
};

struct AxiomReport {
  AxiomVerdict d1, d2, p1, p2, p3;
  bool complete = true;  // false when enumeration hit a size cap
  int num_elements = 0;
  int num_domain_words = 0;

  bool all_pass() const {
    return d1.pass && d2.pass && p1.pass && p2.pass && p3.pass;
  }
};

namespace detail {

inline std::string word_desc(const PartialGroup& p, const ElemWord& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += p.elem_str(w[i]);
  }
  return s + "]";
}

// All non-degenerate domain words over `elems` up to max_len, grown
// incrementally (D2 makes every prefix of a domain word a domain word, so
// extension misses nothing).
inline std::vector<ElemWord> enum_domain_words(const PartialGroup& p,
                                               const std::vector<Elem>& elems,
                                               int max_len,
                                               std::size_t cap,
                                               bool* complete) {
  std::vector<Elem> letters;
  for (const Elem& e : elems)
    if (!(e == p.unit())) letters.push_back(e);
  std::vector<ElemWord> out = {{}};
  std::vector<ElemWord> frontier = {{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<ElemWord> next;
    for (const ElemWord& w : frontier) {
      for (const Elem& e : letters) {
        ElemWord cand = w;
        cand.push_back(e);
        if (p.in_domain(cand)) {
          next.push_back(cand);
          if (out.size() + next.size() > cap) {
            if (complete) *complete = false;
            for (auto& x : next) out.push_back(std::move(x));
            return out;
          }
        }
      }
    }
    for (const auto& w : next) out.push_back(w);
    frontier = std::move(next);
  }
  return out;
}

}  // namespace detail

// Checks D1, D2, P1, P2, P3 by bounded enumeration. Elements are enumerated
// at max_elem_size; the domain is explored over non-degenerate words up to
// max_word_len, with unit insertion covered by the P2 splittings (the middle
// segment may be empty).
inline AxiomReport check_axioms(const PartialGroup& p, int max_elem_size,
                                int max_word_len,
                                std::size_t enum_cap = 2'000'000) {
  AxiomReport rep;
  std::vector<Elem> elems = p.enum_elems(max_elem_size);
  rep.num_elements = static_cast<int>(elems.size());

  auto fail = [&](AxiomVerdict& v, std::string msg, std::vector<ElemWord> ws) {
    if (!v.pass) return;
    v.pass = false;
    v.counterexample = std::move(msg);
    v.witness = std::move(ws);
  };

  // D1: every element is a domain word of length 1.
  for (const Elem& e : elems) {
    if (!p.contains(e)) {
      fail(rep.d1, "enumerated element fails contains(): " + p.elem_str(e),
           {{e}});
      break;
    }
    if (!p.in_domain({e})) {
      fail(rep.d1, "element not in domain as length-1 word: " + p.elem_str(e),
           {{e}});
      break;
    }
  }

  // P1: the product restricts to the identity on elements.
  for (const Elem& e : elems) {
    if (!(p.product({e}) == e)) {
      fail(rep.p1, "product of length-1 word differs from the element: " +
                       p.elem_str(e),
           {{e}});
      break;
    }
  }

  std::vector<ElemWord> domain =
      detail::enum_domain_words(p, elems, max_word_len, enum_cap, &rep.complete);
  rep.num_domain_words = static_cast<int>(domain.size());

  for (const ElemWord& w : domain) {
    // D2: both halves of every split are domain words.
    if (rep.d2.pass) {
      for (std::size_t cut = 0; cut <= w.size(); ++cut) {
        ElemWord u(w.begin(), w.begin() + cut);
        ElemWord v(w.begin() + cut, w.end());
        if (!p.in_domain(u) || !p.in_domain(v)) {
          fail(rep.d2, "split of domain word leaves the domain: " +
                           detail::word_desc(p, w) + " at position " +
                           std::to_string(cut),
               {w, u, v});
          break;
        }
      }
    }
    // P2: contracting any segment (possibly empty, which inserts the unit)
    // stays in the domain and preserves the product.
    if (rep.p2.pass) {
      Elem full = p.product(w);
      for (std::size_t i = 0; i <= w.size() && rep.p2.pass; ++i) {
        for (std::size_t j = i; j <= w.size(); ++j) {
          ElemWord mid(w.begin() + i, w.begin() + j);
          if (!p.in_domain(mid)) continue;  // cannot contract this segment
          ElemWord contracted(w.begin(), w.begin() + i);
          contracted.push_back(p.product(mid));
          contracted.insert(contracted.end(), w.begin() + j, w.end());
          if (!p.in_domain(contracted)) {
            fail(rep.p2, "contracted word leaves the domain: " +
                             detail::word_desc(p, w) + " -> " +
                             detail::word_desc(p, contracted),
                 {w, contracted});
            break;
          }
          if (!(p.product(contracted) == full)) {
            fail(rep.p2, "product changes under contraction: " +
                             detail::word_desc(p, w) + " -> " +
                             detail::word_desc(p, contracted),
                 {w, contracted});
            break;
          }
        }
      }
    }
    // P3: (w^-1, w) is a domain word multiplying to the unit.
    if (rep.p3.pass) {
      ElemWord inv = p.invert_word(w);
      ElemWord cat = inv;
      cat.insert(cat.end(), w.begin(), w.end());
      if (!p.in_domain(cat)) {
        fail(rep.p3, "(w^-1, w) not in domain for " + detail::word_desc(p, w),
             {w, cat});
      } else if (!(p.product(cat) == p.unit())) {
        fail(rep.p3, "product of (w^-1, w) is not the unit for " +
                         detail::word_desc(p, w),
             {w, cat});
      }
    }
  }
  return rep;
}

// True iff s is a subgroup: closed under inversion, every word over s up to
// length max(3, |s|+1) lies in the domain with product in s, and the induced
// binary operation is a valid group table.
inline bool is_subgroup(const PartialGroup& p, const std::vector<Elem>& s) {
  std::vector<Elem> elems = s;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  auto index_of = [&](const Elem& e) -> int {
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == e) return static_cast<int>(i);
    return -1;
  };
  if (index_of(p.unit()) < 0) return false;
  for (const Elem& e : elems)
    if (index_of(p.inverse(e)) < 0) return false;

  // DFS over all words up to length max(3, |s|+1); every word must lie in
  // the domain with product inside s. A budget keeps pathological inputs
  // from exploding; at desk scale it is never hit.
  int max_len = std::max<int>(3, static_cast<int>(elems.size()) + 1);
  long long budget = 2'000'000;
  ElemWord word;
  auto dfs = [&](auto&& self) -> bool {
    if (static_cast<int>(word.size()) == max_len || budget <= 0) return true;
    for (const Elem& e : elems) {
      word.push_back(e);
      --budget;
      bool ok = p.in_domain(word) && index_of(p.product(word)) >= 0 &&
                self(self);
      word.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  if (!dfs(dfs)) return false;

  // Move the unit to index 0 and validate the induced table as a group.
  int u = index_of(p.unit());
  std::swap(elems[0], elems[u]);
  int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int k = index_of(p.product({elems[i], elems[j]}));
      if (k < 0) return false;
      table[i][j] = k;
    }
  try {
    FinGroup g(table);
    (void)g;
  } catch (const std::invalid_argument&) {
    return false;
  }
  return true;
}

// Induced multiplication table of a subgroup, with the unit at index 0 and
// elements otherwise in canonical order. Throws when s is not a subgroup.
inline FinGroup induced_table(const PartialGroup& p, std::vector<Elem> elems,
                              std::vector<Elem>* order_out = nullptr) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  auto it = std::find(elems.begin(), elems.end(), p.unit());
  if (it == elems.end()) throw std::invalid_argument("subgroup lacks the unit");
  std::rotate(elems.begin(), it, it + 1);
  int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(p.elem_str(elems[i]));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elem prod = p.checked_product({elems[i], elems[j]});
      auto pos = std::find(elems.begin(), elems.end(), prod);
      if (pos == elems.end())
        throw std::invalid_argument("set not closed under the product");
      table[i][j] = static_cast<int>(pos - elems.begin());
    }
  if (order_out) *order_out = elems;
  return FinGroup(std::move(table), std::move(labels));
}

}  // namespace pathpart

#endif  // PATHPART_PARTIAL_HPP
