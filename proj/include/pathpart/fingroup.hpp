// Finite groups as explicit multiplication tables, with automorphism and
// injective-homomorphism enumeration.
#ifndef PATHPART_FINGROUP_HPP
#define PATHPART_FINGROUP_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathpart {

// Immutable finite group on {0..n-1} with identity fixed at index 0.
// The table is checked exhaustively at construction.
class FinGroup {
 public:
  explicit FinGroup(std::vector<std::vector<int>> table,
                    std::vector<std::string> labels = {})
      : table_(std::move(table)), labels_(std::move(labels)) {
    validate();
  }

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int x, int y) const { return table_[x][y]; }
  int inv(int x) const { return inv_[x]; }

  const std::vector<std::vector<int>>& table() const { return table_; }

  std::string label(int x) const {
    if (x >= 0 && x < static_cast<int>(labels_.size())) return labels_[x];
    return std::to_string(x);
  }
  const std::vector<std::string>& labels() const { return labels_; }

  int elem_order(int x) const {
    int p = x, k = 1;
    while (p != 0) {
      p = mul(p, x);
      ++k;
    }
    return k;
  }

  bool operator==(const FinGroup& o) const { return table_ == o.table_; }

 private:
  void validate() {
    int n = order();
    if (n == 0) throw std::invalid_argument("group: empty table");
    for (const auto& row : table_) {
      if (static_cast<int>(row.size()) != n)
        throw std::invalid_argument("group: table is not square");
      for (int v : row)
        if (v < 0 || v >= n)
          throw std::invalid_argument("group: table entry out of range");
    }
    for (int x = 0; x < n; ++x)
      if (table_[0][x] != x || table_[x][0] != x)
        throw std::invalid_argument("group: no identity at index 0");
    inv_.assign(n, -1);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y)
        if (table_[x][y] == 0 && table_[y][x] == 0) {
          inv_[x] = y;
          break;
        }
      if (inv_[x] < 0)
        throw std::invalid_argument("group: no inverse for element " +
                                    std::to_string(x));
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (table_[table_[x][y]][z] != table_[x][table_[y][z]])
            throw std::invalid_argument("group: not associative at (" +
                                        std::to_string(x) + "," +
                                        std::to_string(y) + "," +
                                        std::to_string(z) + ")");
    if (!labels_.empty()) {
      if (static_cast<int>(labels_.size()) != n)
        throw std::invalid_argument("group: label count mismatch");
      std::set<std::string> seen(labels_.begin(), labels_.end());
      if (static_cast<int>(seen.size()) != n)
        throw std::invalid_argument("group: duplicate labels");
    }
  }

  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
};

// Homomorphism between explicit groups, stored as an image array.
struct GroupMap {
  const FinGroup* source = nullptr;
  const FinGroup* target = nullptr;
  std::vector<int> images;

  int operator()(int x) const { return images[x]; }

  bool operator==(const GroupMap& o) const { return images == o.images; }
  bool operator<(const GroupMap& o) const { return images < o.images; }
};

inline bool is_homomorphism(const GroupMap& m) {
  int n = m.source->order();
  if (static_cast<int>(m.images.size()) != n) return false;
  if (m.images[0] != 0) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (m.images[m.source->mul(x, y)] != m.target->mul(m.images[x], m.images[y]))
        return false;
  return true;
}

inline bool is_injective(const GroupMap& m) {
  std::set<int> seen(m.images.begin(), m.images.end());
  return seen.size() == m.images.size();
}

inline GroupMap identity_map(const FinGroup& g) {
  GroupMap m{&g, &g, {}};
  m.images.resize(g.order());
  for (int i = 0; i < g.order(); ++i) m.images[i] = i;
  return m;
}

// m2 after m1.
inline GroupMap compose(const GroupMap& m2, const GroupMap& m1) {
  GroupMap r{m1.source, m2.target, {}};
  r.images.reserve(m1.images.size());
  for (int x : m1.images) r.images.push_back(m2.images[x]);
  return r;
}

inline FinGroup make_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("make_cyclic: n must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    labels.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g" + std::to_string(i)));
  return FinGroup(std::move(t), std::move(labels));
}

inline FinGroup make_from_table(std::vector<std::vector<int>> table,
                                std::vector<std::string> labels = {}) {
  return FinGroup(std::move(table), std::move(labels));
}

inline FinGroup direct_product(const FinGroup& a, const FinGroup& b) {
  int na = a.order(), nb = b.order(), n = na * nb;
  auto idx = [nb](int x, int y) { return x * nb + y; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          t[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
  std::vector<std::string> labels;
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y)
      labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
  return FinGroup(std::move(t), std::move(labels));
}

namespace detail {

// Greedy generating sequence: add elements until closure covers the group.
inline std::vector<int> generating_sequence(const FinGroup& g);

// Backtracking over generator images with partial-homomorphism closure.
// Every consistent assignment is extended to a full image array; callback
// receives each complete homomorphism found.
template <typename Fn>
void search_homs(const FinGroup& a, const FinGroup& b, bool injective_only,
                 Fn&& emit) {
  std::vector<int> gens = generating_sequence(a);
  int na = a.order();

  // images[x] = -1 means undefined.
  std::vector<int> images(na, -1);
  images[0] = 0;

  // Close the partial map under products of defined elements; returns false
  // on conflict or (when injective_only) on collision.
  auto close = [&](std::vector<int>& img) -> bool {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 0; x < na; ++x) {
        if (img[x] < 0) continue;
        for (int y = 0; y < na; ++y) {
          if (img[y] < 0) continue;
          int xy = a.mul(x, y);
          int t = b.mul(img[x], img[y]);
          if (img[xy] < 0) {
            img[xy] = t;
            changed = true;
          } else if (img[xy] != t) {
            return false;
          }
        }
      }
    }
    if (injective_only) {
      std::vector<char> used(b.order(), 0);
      for (int x = 0; x < na; ++x) {
        if (img[x] < 0) continue;
        if (used[img[x]]) return false;
        used[img[x]] = 1;
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, std::size_t gi, std::vector<int> img) -> void {
    // Skip generators already determined by closure.
    while (gi < gens.size() && img[gens[gi]] >= 0) ++gi;
    if (gi == gens.size()) {
      bool total = true;
      for (int x = 0; x < na; ++x)
        if (img[x] < 0) { total = false; break; }
      if (total) emit(img);
      return;
    }
    int gen = gens[gi];
    int gen_order = a.elem_order(gen);
    for (int cand = 0; cand < b.order(); ++cand) {
      if (b.elem_order(cand) == gen_order ||
          (!injective_only && gen_order % b.elem_order(cand) == 0)) {
        std::vector<int> next = img;
        next[gen] = cand;
        if (close(next)) self(self, gi + 1, std::move(next));
      }
    }
  };
  rec(rec, 0, images);
}

inline std::vector<int> generating_sequence(const FinGroup& g) {
  std::vector<int> gens;
  std::vector<char> in_closure(g.order(), 0);
  in_closure[0] = 1;
  int covered = 1;
  while (covered < g.order()) {
    int pick = -1;
    for (int x = 0; x < g.order(); ++x)
      if (!in_closure[x]) { pick = x; break; }
    gens.push_back(pick);
    // Re-close from scratch with the enlarged generator set.
    std::fill(in_closure.begin(), in_closure.end(), 0);
    in_closure[0] = 1;
    std::vector<int> frontier = {0};
    for (int s : gens) {
      if (!in_closure[s]) { in_closure[s] = 1; frontier.push_back(s); }
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 0; x < g.order(); ++x) {
        if (!in_closure[x]) continue;
        for (int s : gens) {
          int y = g.mul(x, s);
          if (!in_closure[y]) { in_closure[y] = 1; changed = true; }
          int z = g.mul(x, g.inv(s));
          if (!in_closure[z]) { in_closure[z] = 1; changed = true; }
        }
      }
    }
    covered = 0;
    for (char c : in_closure) covered += c;
  }
  return gens;
}

}  // namespace detail

inline std::vector<GroupMap> automorphisms(const FinGroup& g) {
  std::vector<GroupMap> out;
  detail::search_homs(g, g, /*injective_only=*/true,
                      [&](const std::vector<int>& img) {
                        out.push_back(GroupMap{&g, &g, img});
                      });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<GroupMap> injective_homs(const FinGroup& a,
                                            const FinGroup& b) {
  if (b.order() % a.order() != 0) return {};  // Lagrange obstruction
  std::vector<GroupMap> out;
  detail::search_homs(a, b, /*injective_only=*/true,
                      [&](const std::vector<int>& img) {
                        out.push_back(GroupMap{&a, &b, img});
                      });
  std::sort(out.begin(), out.end());
  return out;
}

// All isomorphisms a -> b (empty when none exists).
inline std::vector<GroupMap> isomorphisms(const FinGroup& a,
                                          const FinGroup& b) {
  if (a.order() != b.order()) return {};
  return injective_homs(a, b);
}

inline bool groups_isomorphic(const FinGroup& a, const FinGroup& b) {
  return !isomorphisms(a, b).empty();
}

inline std::set<int> subgroup_closure(const FinGroup& g,
                                      const std::set<int>& seed) {
  std::set<int> out = {0};
  std::vector<int> frontier = {0};
  for (int s : seed)
    if (out.insert(s).second) frontier.push_back(s);
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    int xi = g.inv(x);
    if (out.insert(xi).second) frontier.push_back(xi);
    for (int y : std::vector<int>(out.begin(), out.end())) {
      for (int p : {g.mul(x, y), g.mul(y, x)})
        if (out.insert(p).second) frontier.push_back(p);
    }
  }
  return out;
}

// Induced table of a subgroup given by element indices; the identity moves
// to index 0 and `order_out`, when given, receives the element order used.
inline FinGroup subgroup_table(const FinGroup& g, std::vector<int> elems,
                               std::vector<int>* order_out = nullptr) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  auto it = std::find(elems.begin(), elems.end(), 0);
  if (it == elems.end())
    throw std::invalid_argument("subgroup_table: identity missing");
  std::rotate(elems.begin(), it, it + 1);
  int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int x : elems) labels.push_back(g.label(x));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int p = g.mul(elems[i], elems[j]);
      auto pos = std::find(elems.begin(), elems.end(), p);
      if (pos == elems.end())
        throw std::invalid_argument("subgroup_table: set not closed");
      t[i][j] = static_cast<int>(pos - elems.begin());
    }
  if (order_out) *order_out = elems;
  return FinGroup(std::move(t), std::move(labels));
}

// Named built-ins: "Z1".."Zn", "V4", "S3", "D8".
inline FinGroup make_builtin(const std::string& name) {
  if (name.size() >= 2 && name[0] == 'Z') {
    int n = std::stoi(name.substr(1));
    return make_cyclic(n);
  }
  if (name == "V4") {
    FinGroup v = direct_product(make_cyclic(2), make_cyclic(2));
    return FinGroup(v.table(), {"1", "i", "j", "k"});
  }
  if (name == "S3") {
    // Permutations of {0,1,2}, identity first.
    std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        std::array<int, 3> c;
        for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
        for (int k = 0; k < 6; ++k)
          if (perms[k] == c) { t[i][j] = k; break; }
      }
    return FinGroup(std::move(t), {"e", "(01)", "(12)", "(02)", "(012)", "(021)"});
  }
  if (name == "D8") {
    // x^4 = t^2 = 1, t x t = x^-1; element x^i t^j at index j*4 + i.
    auto idx = [](int i, int j) { return j * 4 + i; };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int i1 = 0; i1 < 4; ++i1)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int i2 = 0; i2 < 4; ++i2)
          for (int j2 = 0; j2 < 2; ++j2) {
            // (x^i1 t^j1)(x^i2 t^j2) = x^(i1 + i2*(-1)^j1) t^(j1+j2)
            int i = ((i1 + (j1 ? -i2 : i2)) % 4 + 4) % 4;
            int j = (j1 + j2) % 2;
            t[idx(i1, j1)][idx(i2, j2)] = idx(i, j);
          }
    // Index j*4+i holds x^i t^j; with t x t = x^-1 we have x^i t = t x^(4-i),
    // so the t-side labels run t, tx3, tx2, tx.
    return FinGroup(std::move(t),
                    {"1", "x", "x2", "x3", "t", "tx3", "tx2", "tx"});
  }
  throw std::invalid_argument("unknown builtin group: " + name);
}

}  // namespace pathpart

#endif  // PATHPART_FINGROUP_HPP
