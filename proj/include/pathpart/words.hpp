// Free-product word algebra over a decorated vertex set: reduced form,
// cyclic-reduction predicates, inversion and support.
#ifndef PATHPART_WORDS_HPP
#define PATHPART_WORDS_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathpart/fingroup.hpp"

namespace pathpart {

// A single non-identity symbol: element `elem` of the decorating group at
// `vertex`. elem == 0 (the identity) is never a letter.
struct Letter {
  int vertex = 0;
  int elem = 0;

  auto operator<=>(const Letter&) const = default;
};

using FPWord = std::vector<Letter>;

// Decoration lookup used by the word operations.
using Decoration = std::function<const FinGroup&(int vertex)>;

inline bool is_reduced(const FPWord& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i].vertex == w[i + 1].vertex) return false;
  return true;
}

// Reduced and every cyclic permutation reduced. For reduced words this
// collapses to the first/last vertex test; see the oracle in the test suite.
inline bool is_cyclically_reduced(const FPWord& w) {
  if (!is_reduced(w)) return false;
  if (w.size() >= 2 && w.front().vertex == w.back().vertex) return false;
  return true;
}

inline void check_letter(const Letter& l, const Decoration& dec) {
  const FinGroup& g = dec(l.vertex);
  if (l.elem <= 0 || l.elem >= g.order())
    throw std::invalid_argument("letter element " + std::to_string(l.elem) +
                                " out of range at vertex " +
                                std::to_string(l.vertex));
}

// Single left-to-right stack pass; merges same-vertex neighbours through the
// group table and drops identity results. Idempotent, and unique by the
// normal form for free products.
inline FPWord reduce(const FPWord& w, const Decoration& dec) {
  FPWord out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    check_letter(l, dec);
    if (!out.empty() && out.back().vertex == l.vertex) {
      const FinGroup& g = dec(l.vertex);
      int merged = g.mul(out.back().elem, l.elem);
      out.pop_back();
      if (merged != 0) out.push_back({l.vertex, merged});
    } else {
      out.push_back(l);
    }
  }
  return out;
}

// Reverse the sequence and invert each letter in its vertex group.
inline FPWord invert(const FPWord& w, const Decoration& dec) {
  FPWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    check_letter(*it, dec);
    out.push_back({it->vertex, dec(it->vertex).inv(it->elem)});
  }
  return out;
}

inline std::vector<int> support(const FPWord& w) {
  std::vector<int> vs;
  for (const Letter& l : w) {
    bool seen = false;
    for (int v : vs)
      if (v == l.vertex) { seen = true; break; }
    if (!seen) vs.push_back(l.vertex);
  }
  std::sort(vs.begin(), vs.end());
  return vs;
}

// Validated cyclically reduced word. Construction rejects violations rather
// than normalizing, so alphabet membership stays explicit.
class CRWord {
 public:
  CRWord() = default;

  explicit CRWord(FPWord letters) : letters_(std::move(letters)) {
    for (const Letter& l : letters_)
      if (l.elem <= 0)
        throw std::invalid_argument("CRWord: identity or negative letter");
    if (!is_reduced(letters_))
      throw std::invalid_argument("CRWord: word is not reduced");
    if (!is_cyclically_reduced(letters_))
      throw std::invalid_argument("CRWord: word is not cyclically reduced");
  }

  const FPWord& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  auto operator<=>(const CRWord&) const = default;

 private:
  FPWord letters_;
};

// Word literal syntax: "a.1 b.2" = (vertex a, elem 1)(vertex b, elem 2);
// ".elem" omitted defaults to 1. Vertex names resolve through `lookup`.
inline FPWord parse_word(const std::string& text,
                         const std::function<int(const std::string&)>& lookup) {
  FPWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::string name = tok;
    int elem = 1;
    if (auto dot = tok.rfind('.'); dot != std::string::npos) {
      name = tok.substr(0, dot);
      try {
        elem = std::stoi(tok.substr(dot + 1));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad word token: " + tok);
      }
    }
    w.push_back({lookup(name), elem});
  }
  return w;
}

inline std::string word_str(const FPWord& w) {
  if (w.empty()) return "()";
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += "v" + std::to_string(w[i].vertex) + "." + std::to_string(w[i].elem);
  }
  return s + ")";
}

}  // namespace pathpart

#endif  // PATHPART_WORDS_HPP
