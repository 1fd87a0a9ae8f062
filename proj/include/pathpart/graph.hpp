// Simple undirected graphs: cliques, automorphism/isomorphism search and a
// Frucht-style realizer for prescribed automorphism groups.
#ifndef PATHPART_GRAPH_HPP
#define PATHPART_GRAPH_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pathpart/fingroup.hpp"

namespace pathpart {

// Vertices are dense integers 0..n-1; edges a set of 2-element subsets.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : adj_(n, std::vector<char>(n, 0)) {}

  Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int num_vertices() const { return static_cast<int>(adj_.size()); }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("graph: self-loop rejected");
    adj_[u][v] = adj_[v][u] = 1;
  }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && adj_[u][v];
  }

  int degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (char a : adj_[v]) d += a;
    return d;
  }

  int num_edges() const {
    int e = 0;
    for (int u = 0; u < num_vertices(); ++u)
      for (int v = u + 1; v < num_vertices(); ++v) e += adj_[u][v];
    return e;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < num_vertices(); ++u)
      for (int v = u + 1; v < num_vertices(); ++v)
        if (adj_[u][v]) es.emplace_back(u, v);
    return es;
  }

  bool connected() const {
    if (num_vertices() == 0) return true;
    std::vector<char> seen(num_vertices(), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < num_vertices(); ++v)
        if (adj_[u][v] && !seen[v]) {
          seen[v] = 1;
          ++count;
          stack.push_back(v);
        }
    }
    return count == num_vertices();
  }

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= num_vertices())
      throw std::invalid_argument("graph: unknown vertex id " +
                                  std::to_string(v));
  }

  std::vector<std::vector<char>> adj_;
};

// Adjacency-preserving vertex map.
struct GraphMap {
  const Graph* source = nullptr;
  const Graph* target = nullptr;
  std::vector<int> vmap;

  int operator()(int v) const { return vmap[v]; }
  bool operator==(const GraphMap& o) const { return vmap == o.vmap; }
  bool operator<(const GraphMap& o) const { return vmap < o.vmap; }
};

inline bool is_graph_hom(const GraphMap& m) {
  for (auto [u, v] : m.source->edges())
    if (!m.target->adjacent(m.vmap[u], m.vmap[v])) return false;
  return true;
}

inline GraphMap identity_graph_map(const Graph& g) {
  GraphMap m{&g, &g, {}};
  m.vmap.resize(g.num_vertices());
  for (int i = 0; i < g.num_vertices(); ++i) m.vmap[i] = i;
  return m;
}

inline GraphMap compose(const GraphMap& m2, const GraphMap& m1) {
  GraphMap r{m1.source, m2.target, {}};
  r.vmap.reserve(m1.vmap.size());
  for (int v : m1.vmap) r.vmap.push_back(m2.vmap[v]);
  return r;
}

inline bool is_clique(const Graph& g, const std::vector<int>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j]) continue;
      if (!g.adjacent(s[i], s[j])) return false;
    }
  // Validate ids even for small sets.
  for (int v : s) (void)g.degree(v);
  return true;
}

namespace detail {

// Iterated neighbourhood-colour refinement (1-WL). Returns a colour per
// vertex; automorphisms preserve colours, so cells bound the search.
inline std::vector<int> wl_colors(const Graph& g) {
  int n = g.num_vertices();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  for (int round = 0; round < n; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> sig_to_color;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      for (int u = 0; u < n; ++u)
        if (g.adjacent(v, u)) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      auto key = std::make_pair(color[v], std::move(nb));
      auto [it, inserted] = sig_to_color.emplace(std::move(key),
                                                 static_cast<int>(sig_to_color.size()));
      next[v] = it->second;
    }
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

// Backtracking enumeration of isomorphisms a -> b respecting WL colours.
// emit returns false to stop the search early.
template <typename Fn>
void search_isos(const Graph& a, const Graph& b, Fn&& emit) {
  int n = a.num_vertices();
  if (n != b.num_vertices() || a.num_edges() != b.num_edges()) return;
  std::vector<int> ca = wl_colors(a), cb = wl_colors(b);
  // Colour class sizes must match (colour ids are computed per graph, so
  // compare by multiset of (colour signature) sizes via sorted histograms).
  {
    std::vector<int> ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    std::vector<int> sa, sb;
    for (int i = 0; i < n;) {
      int j = i;
      while (j < n && ha[j] == ha[i]) ++j;
      sa.push_back(j - i);
      i = j;
    }
    for (int i = 0; i < n;) {
      int j = i;
      while (j < n && hb[j] == hb[i]) ++j;
      sb.push_back(j - i);
      i = j;
    }
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return;
  }

  // Order source vertices: most-constrained (rarest colour) first helps, but
  // plain id order with colour pruning is adequate at this scale when colours
  // are near-discrete. Use increasing cell size.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<int> cell_size(n, 0);
  {
    std::map<int, int> counts;
    for (int c : ca) counts[c]++;
    for (int v = 0; v < n; ++v) cell_size[v] = counts[ca[v]];
  }
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (cell_size[x] != cell_size[y]) return cell_size[x] < cell_size[y];
    return x < y;
  });

  std::vector<int> vmap(n, -1);
  std::vector<char> used(n, 0);
  bool stop = false;

  // Colour correspondence is discovered on the fly: a colour of `a` may map
  // to any colour of `b` of the same class size, fixed at first use.
  std::map<int, int> color_map;
  std::map<int, int> color_map_count;
  std::map<int, int> size_a, size_b;
  for (int c : ca) size_a[c]++;
  for (int c : cb) size_b[c]++;

  auto rec = [&](auto&& self, int depth) -> void {
    if (stop) return;
    if (depth == n) {
      GraphMap m{&a, &b, vmap};
      if (!emit(m)) stop = true;
      return;
    }
    int v = order[depth];
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      if (size_a[ca[v]] != size_b[cb[w]]) continue;
      auto it = color_map.find(ca[v]);
      bool new_color = (it == color_map.end());
      if (!new_color && it->second != cb[w]) continue;
      // Edge consistency against already-mapped vertices, both directions.
      bool ok = true;
      for (int d = 0; d < depth; ++d) {
        int u = order[d];
        if (a.adjacent(v, u) != b.adjacent(w, vmap[u])) { ok = false; break; }
      }
      if (!ok) continue;
      vmap[v] = w;
      used[w] = 1;
      if (new_color) color_map[ca[v]] = cb[w];
      color_map_count[ca[v]]++;
      self(self, depth + 1);
      color_map_count[ca[v]]--;
      if (new_color && color_map_count[ca[v]] == 0) color_map.erase(ca[v]);
      vmap[v] = -1;
      used[w] = 0;
      if (stop) return;
    }
  };
  rec(rec, 0);
}

}  // namespace detail

inline std::vector<GraphMap> graph_automorphisms(const Graph& g,
                                                 int max_vertices = 128) {
  if (g.num_vertices() > max_vertices)
    throw std::runtime_error("graph automorphism search limit exceeded");
  std::vector<GraphMap> out;
  detail::search_isos(g, g, [&](const GraphMap& m) {
    out.push_back(m);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::optional<GraphMap> isomorphic(const Graph& a, const Graph& b,
                                          int max_vertices = 128) {
  if (a.num_vertices() > max_vertices || b.num_vertices() > max_vertices)
    throw std::runtime_error("graph isomorphism search limit exceeded");
  std::optional<GraphMap> found;
  detail::search_isos(a, b, [&](const GraphMap& m) {
    found = m;
    return false;
  });
  if (found) {
    // Verify edge-exactness in both directions.
    const auto& vmap = found->vmap;
    for (int u = 0; u < a.num_vertices(); ++u)
      for (int v = u + 1; v < a.num_vertices(); ++v)
        if (a.adjacent(u, v) != b.adjacent(vmap[u], vmap[v]))
          throw std::runtime_error("isomorphism verification failed");
  }
  return found;
}

// FinGroup built from a composition table of graph automorphisms; identity
// is moved to index 0.
inline FinGroup automorphism_group_table(const std::vector<GraphMap>& autos) {
  int n = static_cast<int>(autos.size());
  if (n == 0) throw std::invalid_argument("empty automorphism list");
  std::vector<GraphMap> sorted = autos;
  std::sort(sorted.begin(), sorted.end());
  GraphMap id = identity_graph_map(*sorted[0].source);
  auto it = std::find(sorted.begin(), sorted.end(), id);
  if (it == sorted.end())
    throw std::invalid_argument("automorphism list lacks the identity");
  std::rotate(sorted.begin(), it, it + 1);
  auto index_of = [&](const GraphMap& m) {
    for (int i = 0; i < n; ++i)
      if (sorted[i] == m) return i;
    throw std::runtime_error("automorphism set not closed under composition");
  };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = index_of(compose(sorted[i], sorted[j]));
  return FinGroup(std::move(t));
}

namespace detail {

// Cayley graph of h on a minimal generating set, with each generator-coloured
// arc (g, g*s_k) replaced by the gadget
//   g -- p -- q -- g*s_k,  tail of length 2k+1+pad at p, 2k+2+pad at q.
// Distinct tail lengths per colour kill unwanted symmetries and record arc
// direction; `pad` varies the construction to get non-isomorphic graphs.
inline Graph frucht_candidate(const FinGroup& h, int pad) {
  std::vector<int> gens = generating_sequence(h);
  int n = h.order();
  int m = static_cast<int>(gens.size());
  std::vector<std::pair<int, int>> edges;
  int next = n;  // fresh vertex ids beyond the Cayley vertices
  auto add_path = [&](int from, int len) {
    int cur = from;
    for (int i = 0; i < len; ++i) {
      edges.emplace_back(cur, next);
      cur = next++;
    }
    return cur;
  };
  for (int k = 0; k < m; ++k) {
    for (int g = 0; g < n; ++g) {
      int gs = h.mul(g, gens[k]);
      int p = next++;
      int q = next++;
      edges.emplace_back(g, p);
      edges.emplace_back(p, q);
      edges.emplace_back(q, gs);
      add_path(p, 2 * (m * pad + k) + 1);
      add_path(q, 2 * (m * pad + k) + 2);
    }
  }
  return Graph(next, edges);
}

// Deterministic enumeration of rigid graphs used when |h| = 1: scan graphs
// on 6..8 vertices in a fixed order and keep those with trivial automorphism
// group.
template <typename Fn>
void rigid_candidates(Fn&& emit) {
  for (int n = 6; n <= 8; ++n) {
    int bits = n * (n - 1) / 2;
    for (long long mask = 0; mask < (1LL << bits); ++mask) {
      std::vector<std::pair<int, int>> edges;
      int b = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++b)
          if (mask & (1LL << b)) edges.emplace_back(u, v);
      Graph g(n, edges);
      if (!g.connected()) continue;
      if (!emit(g)) return;
    }
  }
}

}  // namespace detail

// Produces `count` pairwise non-isomorphic graphs, each with automorphism
// group isomorphic to h. Candidates come from the gadget construction (or a
// rigid-graph scan for the trivial group) and every candidate is verified by
// the automorphism search before being returned.
inline std::vector<Graph> frucht_realize(const FinGroup& h, int count,
                                         int max_vertices = 256) {
  if (count < 1) throw std::invalid_argument("frucht_realize: count < 1");
  std::vector<Graph> out;
  auto accept = [&](const Graph& g) {
    auto autos = graph_automorphisms(g, max_vertices);
    if (static_cast<int>(autos.size()) != h.order()) return false;
    if (!groups_isomorphic(automorphism_group_table(autos), h)) return false;
    for (const Graph& prev : out)
      if (isomorphic(prev, g, max_vertices)) return false;
    out.push_back(g);
    return true;
  };
  if (h.order() == 1) {
    detail::rigid_candidates([&](const Graph& g) {
      accept(g);
      return static_cast<int>(out.size()) < count;
    });
  } else {
    for (int pad = 0; pad < 8 * count && static_cast<int>(out.size()) < count;
         ++pad) {
      Graph g = detail::frucht_candidate(h, pad);
      if (g.num_vertices() > max_vertices) break;
      accept(g);
    }
  }
  if (static_cast<int>(out.size()) < count)
    throw std::runtime_error("frucht_realize: verification limit exceeded");
  return out;
}

}  // namespace pathpart

#endif  // PATHPART_GRAPH_HPP
