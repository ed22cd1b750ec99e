#pragma once

// Shared test helpers: small named graphs, brute-force oracles and an
// isomorphism-class corpus of all graphs on few vertices.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pivotminor/decomposition.hpp"
#include "pivotminor/graph.hpp"

namespace fixtures {

using pivotminor::Edge;
using pivotminor::Graph;
using pivotminor::Vertex;
using pivotminor::VertexSet;
using pivotminor::WeightedTree;

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.n());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

/// Upper-triangle bits (graph6 order) of g under the given vertex order.
inline std::vector<bool> bits_under(const Graph& g, const std::vector<int>& order) {
  std::vector<bool> out;
  for (int j = 1; j < g.n(); ++j)
    for (int i = 0; i < j; ++i) out.push_back(g.adjacent(order[i], order[j]));
  return out;
}

/// Brute-force canonical key: least encoding over all n! orders.
inline std::vector<bool> brute_canonical(const Graph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.n()));
  std::iota(order.begin(), order.end(), 0);
  std::vector<bool> best = bits_under(g, order);
  while (std::next_permutation(order.begin(), order.end())) best = std::min(best, bits_under(g, order));
  return best;
}

inline bool brute_isomorphic(const Graph& g, const Graph& h) {
  return g.n() == h.n() && brute_canonical(g) == brute_canonical(h);
}

/// Reference graph6 encoder written straight from the format description.
inline std::string reference_graph6(const Graph& g) {
  std::string out;
  const long n = g.n();
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    const int groups = n <= 258047 ? 3 : 6;
    out.append(groups == 3 ? 1 : 2, '~');
    for (int i = groups - 1; i >= 0; --i) out.push_back(static_cast<char>(63 + ((n >> (6 * i)) & 63)));
  }
  std::string bits;
  for (int j = 1; j < g.n(); ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? '1' : '0');
  while (bits.size() % 6 != 0) bits.push_back('0');
  for (std::size_t i = 0; i < bits.size(); i += 6) out.push_back(static_cast<char>(63 + std::stoi(bits.substr(i, 6), nullptr, 2)));
  return out;
}

/// One representative per isomorphism class of graphs on exactly n vertices,
/// built by extending every class on n-1 vertices by a new vertex with every
/// possible neighbourhood.
inline std::vector<Graph> all_graphs(int n) {
  std::vector<Graph> reps{Graph(1)};
  if (n == 0) return {Graph(0)};
  for (int size = 2; size <= n; ++size) {
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& base : reps) {
      for (std::uint32_t mask = 0; mask < (1u << (size - 1)); ++mask) {
        Graph g(size);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (int u = 0; u < size - 1; ++u)
          if (mask >> u & 1) g.add_edge(u, size - 1);
        if (seen.insert(pivotminor::canonical_form(g)).second) next.push_back(std::move(g));
      }
    }
    reps = std::move(next);
  }
  return reps;
}

inline std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n))
    if (pivotminor::is_connected(g)) out.push_back(std::move(g));
  return out;
}

/// Local complementation at v: toggles every pair of neighbours of v.
inline Graph local_complement(const Graph& g, Vertex v) {
  Graph out = g;
  const VertexSet nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j) out.toggle_edge(nb[i], nb[j]);
  return out;
}

/// Independent pivot oracle: G*u*v*u equals the pivot including its label swap.
inline Graph pivot_by_local_complements(const Graph& g, Vertex u, Vertex v) {
  return local_complement(local_complement(local_complement(g, u), v), u);
}

/// Every induced C_k by brute force over k-subsets (small graphs only).
inline bool brute_has_induced_cycle(const Graph& g, int k) {
  const int n = g.n();
  if (k > n) return false;
  std::vector<int> pick(static_cast<std::size_t>(n), 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    VertexSet s;
    for (int v = 0; v < n; ++v)
      if (pick[v]) s.push_back(v);
    if (pivotminor::is_cycle_graph(pivotminor::induced_subgraph(g, s).graph, k)) return true;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

/// Generalized fan with the given interval lengths: main path 0..sum, center sum+1.
inline Graph fan_graph(const std::vector<int>& intervals) {
  int len = 0;
  for (int a : intervals) len += a;
  const Vertex center = len + 1;
  Graph g(len + 2);
  for (int i = 0; i < len; ++i) g.add_edge(i, i + 1);
  g.add_edge(center, 0);
  int pos = 0;
  for (int a : intervals) {
    pos += a;
    g.add_edge(center, pos);
  }
  return g;
}

inline VertexSet iota_set(int n) {
  VertexSet out(static_cast<std::size_t>(n));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

/// C4 a,b,c,d with one pendant on each cycle vertex: every pendant forces its
/// cycle neighbour into any dominating tree, and C4 is not a tree.
inline Graph c4_with_pendants() {
  Graph g(8);
  for (int i = 0; i < 4; ++i) {
    g.add_edge(i, (i + 1) % 4);
    g.add_edge(i, i + 4);
  }
  return g;
}

/// Exhaustive search for the strict induced-subtree skeleton contract: an
/// induced subtree T containing the root and r: V -> V(T) with r(root)=root,
/// r(u) a neighbour of u otherwise, and adjacent vertices mapped to related
/// nodes. Graphs with at most ~10 vertices.
inline bool strict_dominating_tree_exists(const Graph& g, Vertex root) {
  const int n = g.n();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> root & 1)) continue;
    VertexSet tv;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) tv.push_back(v);
    const Graph t = pivotminor::induced_subgraph(g, tv).graph;
    if (!pivotminor::is_connected(t) || t.edge_count() + 1 != tv.size()) continue;
    // parent pointers of T rooted at root, for ancestor tests
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    parent[root] = -1;
    std::vector<Vertex> queue{root};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Vertex w : g.neighbors(queue[i]))
        if ((mask >> w & 1) && parent[w] == -2) {
          parent[w] = queue[i];
          queue.push_back(w);
        }
    auto related = [&](Vertex a, Vertex b) {
      for (Vertex x = a; x >= 0; x = parent[x])
        if (x == b) return true;
      for (Vertex x = b; x >= 0; x = parent[x])
        if (x == a) return true;
      return false;
    };
    std::vector<VertexSet> options(static_cast<std::size_t>(n));
    bool feasible = true;
    for (Vertex u = 0; u < n; ++u) {
      if (u == root) {
        options[u] = {root};
        continue;
      }
      for (Vertex w : g.neighbors(u))
        if (mask >> w & 1) options[u].push_back(w);
      if (options[u].empty()) feasible = false;
    }
    if (!feasible) continue;
    std::vector<Vertex> r(static_cast<std::size_t>(n), -1);
    std::function<bool(int)> assign = [&](int u) {
      if (u == n) return true;
      for (Vertex c : options[u]) {
        bool ok = true;
        for (Vertex w : g.neighbors(u))
          if (w < u && !related(c, r[w])) ok = false;
        if (!ok) continue;
        r[u] = c;
        if (assign(u + 1)) return true;
      }
      return false;
    };
    if (assign(0)) return true;
  }
  return false;
}

/// One parent array per unlabelled rooted tree on n nodes (node 0 is the root).
inline std::vector<std::vector<int>> rooted_trees(int n) {
  std::vector<std::vector<int>> out;
  std::set<std::string> seen;
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::function<std::string(const std::vector<int>&, int)> code = [&](const std::vector<int>& par, int v) {
    std::vector<std::string> kids;
    for (int c = 0; c < n; ++c)
      if (par[c] == v) kids.push_back(code(par, c));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
  };
  std::function<void(int)> grow = [&](int v) {
    if (v == n) {
      if (seen.insert(code(parent, 0)).second) out.push_back(parent);
      return;
    }
    for (int p = 0; p < v; ++p) {
      parent[v] = p;
      grow(v + 1);
    }
  };
  if (n >= 1) grow(1);
  return out;
}

/// Random spanning tree plus G(n, p) edges on top; always connected.
inline Graph random_connected(int n, double p, std::mt19937_64& rng) {
  Graph g = random_graph(n, p, rng);
  for (int v = 1; v < n; ++v) g.add_edge(v, static_cast<Vertex>(rng() % v));
  return g;
}

/// C_s with its first t vertices partially complemented.
inline Graph st_cycle(int s, int t) {
  VertexSet prefix(static_cast<std::size_t>(t));
  std::iota(prefix.begin(), prefix.end(), 0);
  return pivotminor::partial_complement(cycle_graph(s), prefix);
}

// Tree-split oracles: every root path, and for every node set A the largest B
// unrelated to all of A.
inline bool oracle_has_path(const WeightedTree& t) {
  for (int v = 0; v < static_cast<int>(t.parent.size()); ++v) {
    std::int64_t w = 0;
    for (int x = v; x >= 0; x = t.parent[x]) w += t.weight[x];
    if (4 * w >= t.total) return true;
  }
  return false;
}

inline bool is_ancestor(const WeightedTree& t, int a, int v) {
  for (int x = v; x >= 0; x = t.parent[x])
    if (x == a) return true;
  return false;
}

// For every A, the best B is everything unrelated to all of A.
inline bool oracle_has_split(const WeightedTree& t) {
  const int n = static_cast<int>(t.parent.size());
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::int64_t wa = 0;
    std::int64_t wb = 0;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) {
        wa += t.weight[v];
        continue;
      }
      bool free = true;
      for (int a = 0; a < n && free; ++a)
        if ((mask >> a & 1) && (is_ancestor(t, a, v) || is_ancestor(t, v, a))) free = false;
      if (free) wb += t.weight[v];
    }
    if (4 * wa >= t.total && 4 * wb >= t.total) return true;
  }
  return false;
}


}  // namespace fixtures
