#include "pivotminor/decomposition.hpp"

#include <algorithm>
#include <future>
#include <numeric>

namespace pivotminor {

VertexSet Skeleton::tree_vertices() const {
  VertexSet out;
  for (Vertex v = 0; v < static_cast<Vertex>(parent.size()); ++v) {
    if (in_tree(v)) out.push_back(v);
  }
  return out;
}

VertexSet Skeleton::root_path(Vertex v) const {
  VertexSet out;
  for (Vertex x = v; x >= 0; x = parent[x]) out.push_back(x);
  std::reverse(out.begin(), out.end());
  return out;
}

VertexSet Skeleton::preimage(std::span<const Vertex> nodes) const {
  std::vector<char> want(rmap.size(), 0);
  for (Vertex t : nodes) want.at(static_cast<std::size_t>(t)) = 1;
  VertexSet out;
  for (Vertex v = 0; v < static_cast<Vertex>(rmap.size()); ++v) {
    if (want[rmap[v]]) out.push_back(v);
  }
  return out;
}

namespace {

// Components of g restricted to `mask`, each listed in increasing order, the
// list ordered by smallest member.
std::vector<VertexSet> components_within(const Graph& g, const Row& mask) {
  Row left = mask;
  std::vector<VertexSet> out;
  for (auto s = left.find_first(); s != Row::npos; s = left.find_first()) {
    VertexSet comp;
    Row frontier(mask.size());
    frontier.set(s);
    left.reset(s);
    while (frontier.any()) {
      const auto v = frontier.find_first();
      frontier.reset(v);
      comp.push_back(static_cast<Vertex>(v));
      const Row fresh = g.row(static_cast<Vertex>(v)) & left;
      left -= fresh;
      frontier |= fresh;
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

Skeleton dominating_skeleton(const Graph& g, Vertex root) {
  const int n = g.n();
  if (root < 0 || root >= n) throw PreconditionError("dominating_skeleton: root out of range");
  if (!is_connected(g)) throw PreconditionError("dominating_skeleton: graph is disconnected");

  Skeleton s;
  s.root = root;
  s.parent.assign(static_cast<std::size_t>(n), -1);
  s.rmap.assign(static_cast<std::size_t>(n), -1);
  s.rmap[root] = root;

  struct Task {
    Vertex t;
    Row territory;
  };
  Row all(static_cast<std::size_t>(n));
  all.set();
  all.reset(root);
  std::vector<Task> stack{{root, all}};
  while (!stack.empty()) {
    Task task = std::move(stack.back());
    stack.pop_back();
    const Row attached = g.row(task.t) & task.territory;
    for (auto x = attached.find_first(); x != Row::npos; x = attached.find_next(x)) s.rmap[x] = task.t;

    std::vector<Row> handed(static_cast<std::size_t>(n));
    VertexSet connectors;
    for (const VertexSet& q : components_within(g, task.territory - attached)) {
      Vertex best = -1;
      for (Vertex v : q) {
        const Row touch = g.row(v) & attached;
        const auto c = touch.find_first();
        if (c != Row::npos && (best < 0 || static_cast<Vertex>(c) < best)) best = static_cast<Vertex>(c);
      }
      if (best < 0) throw Error("dominating_skeleton: territory component with no boundary vertex");
      if (handed[best].empty()) {
        handed[best].resize(static_cast<std::size_t>(n));
        connectors.push_back(best);
      }
      for (Vertex v : q) handed[best].set(v);
    }
    std::sort(connectors.begin(), connectors.end());
    // Pushed in reverse so children are processed in increasing order.
    for (auto it = connectors.rbegin(); it != connectors.rend(); ++it) {
      s.parent[*it] = task.t;
      stack.push_back({*it, std::move(handed[*it])});
    }
  }
  return s;
}

Verdict check_skeleton(const Graph& g, const Skeleton& s) {
  const int n = g.n();
  if (static_cast<int>(s.parent.size()) != n || static_cast<int>(s.rmap.size()) != n) {
    return Verdict::fail("skeleton: arrays do not match the graph size");
  }
  if (s.root < 0 || s.root >= n) return Verdict::fail("skeleton: root out of range");
  if (s.parent[s.root] != -1) return Verdict::fail("skeleton: root has a parent");

  // Euler-tour intervals for ancestor tests; also detects cycles in `parent`.
  std::vector<std::vector<Vertex>> children(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    const Vertex p = s.parent[v];
    if (p < -1 || p >= n) return Verdict::fail("skeleton: parent of " + std::to_string(v) + " out of range");
    if (p >= 0) {
      if (!g.adjacent(v, p)) {
        return Verdict::fail("skeleton: tree edge " + std::to_string(p) + "-" + std::to_string(v) + " is not a host edge");
      }
      children[p].push_back(v);
    }
  }
  std::vector<int> tin(static_cast<std::size_t>(n), -1);
  std::vector<int> tout(static_cast<std::size_t>(n), -1);
  int clock = 0;
  std::vector<std::pair<Vertex, std::size_t>> stack{{s.root, 0}};
  tin[s.root] = clock++;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < children[v].size()) {
      const Vertex c = children[v][next++];
      tin[c] = clock++;
      stack.push_back({c, 0});
    } else {
      tout[v] = clock++;
      stack.pop_back();
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (s.parent[v] >= 0 && tin[v] < 0) return Verdict::fail("skeleton: vertex " + std::to_string(v) + " is not below the root");
  }
  auto related = [&](Vertex a, Vertex b) {
    return (tin[a] <= tin[b] && tout[b] <= tout[a]) || (tin[b] <= tin[a] && tout[a] <= tout[b]);
  };

  // Root paths are induced iff no tree vertex sees a proper ancestor other than its parent.
  for (Vertex v = 0; v < n; ++v) {
    if (tin[v] < 0 || v == s.root) continue;
    for (Vertex a = s.parent[s.parent[v]]; a >= 0; a = s.parent[a]) {
      if (g.adjacent(v, a)) {
        return Verdict::fail("skeleton: root path to " + std::to_string(v) + " has chord to " + std::to_string(a));
      }
    }
  }

  if (s.rmap[s.root] != s.root) return Verdict::fail("skeleton: rmap(root) is not the root");
  for (Vertex v = 0; v < n; ++v) {
    const Vertex r = s.rmap[v];
    if (r < 0 || r >= n || tin[r] < 0) return Verdict::fail("skeleton: rmap(" + std::to_string(v) + ") is not a tree vertex");
    if (v != s.root && !g.adjacent(v, r)) {
      return Verdict::fail("skeleton: rmap(" + std::to_string(v) + ")=" + std::to_string(r) + " is not a neighbour");
    }
  }
  for (auto [x, y] : g.edges()) {
    if (!related(s.rmap[x], s.rmap[y])) {
      return Verdict::fail("skeleton: edge " + std::to_string(x) + "-" + std::to_string(y) + " maps to unrelated " +
                           std::to_string(s.rmap[x]) + "," + std::to_string(s.rmap[y]));
    }
  }
  return Verdict::pass();
}

int WeightedTree::root() const {
  for (int v = 0; v < static_cast<int>(parent.size()); ++v) {
    if (parent[v] < 0) return v;
  }
  return -1;
}

namespace {

struct TreeShape {
  int root = -1;
  std::vector<std::vector<int>> children;
  std::vector<int> order;  // BFS order from the root
};

TreeShape shape_of(const WeightedTree& t) {
  const int n = static_cast<int>(t.parent.size());
  TreeShape sh;
  sh.children.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    if (t.parent[v] < 0) {
      if (sh.root >= 0) throw PreconditionError("weighted tree: more than one root");
      sh.root = v;
    } else if (t.parent[v] >= n) {
      throw PreconditionError("weighted tree: parent out of range");
    } else {
      sh.children[t.parent[v]].push_back(v);
    }
  }
  if (sh.root < 0) throw PreconditionError("weighted tree: no root");
  sh.order.push_back(sh.root);
  for (std::size_t i = 0; i < sh.order.size(); ++i) {
    for (int c : sh.children[sh.order[i]]) sh.order.push_back(c);
  }
  if (static_cast<int>(sh.order.size()) != n) throw PreconditionError("weighted tree: parent links contain a cycle");
  return sh;
}

}  // namespace

Verdict check_weighted_tree(const WeightedTree& t) {
  if (t.parent.empty()) return Verdict::fail("weighted tree: empty");
  if (t.weight.size() != t.parent.size()) return Verdict::fail("weighted tree: weight array has the wrong size");
  try {
    (void)shape_of(t);
  } catch (const PreconditionError& e) {
    return Verdict::fail(e.what());
  }
  std::int64_t sum = 0;
  for (auto w : t.weight) {
    if (w < 0) return Verdict::fail("weighted tree: negative weight");
    sum += w;
  }
  if (t.total <= 0 || sum != t.total) {
    return Verdict::fail("weighted tree: weights sum to " + std::to_string(sum) + ", expected " + std::to_string(t.total));
  }
  return Verdict::pass();
}

TreeSplit heavy_path_or_unrelated(const WeightedTree& t) {
  if (const Verdict v = check_weighted_tree(t); !v) throw PreconditionError(v.diagnostic);
  const TreeShape sh = shape_of(t);
  const int n = static_cast<int>(t.parent.size());
  auto quarter = [&](std::int64_t w) { return 4 * w >= t.total; };

  std::vector<std::int64_t> down(static_cast<std::size_t>(n), 0);  // weight of root..v
  int heaviest = sh.root;
  for (int v : sh.order) {
    down[v] = t.weight[v] + (t.parent[v] >= 0 ? down[t.parent[v]] : 0);
    if (down[v] > down[heaviest]) heaviest = v;
  }
  if (quarter(down[heaviest])) {
    RootPath p;
    for (int v = heaviest; v >= 0; v = t.parent[v]) p.nodes.push_back(v);
    std::reverse(p.nodes.begin(), p.nodes.end());
    p.weight = down[heaviest];
    return p;
  }

  std::vector<std::int64_t> sub(t.weight.begin(), t.weight.end());
  for (auto it = sh.order.rbegin(); it != sh.order.rend(); ++it) {
    if (t.parent[*it] >= 0) sub[t.parent[*it]] += sub[*it];
  }
  auto subtree = [&](int v) {
    std::vector<int> out{v};
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (int c : sh.children[out[i]]) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  // Core leaves: heavy-subtree nodes without a heavy child, in BFS order.
  std::vector<int> core_leaves;
  for (int v : sh.order) {
    if (!quarter(sub[v])) continue;
    const bool leaf = std::none_of(sh.children[v].begin(), sh.children[v].end(), [&](int c) { return quarter(sub[c]); });
    if (leaf) core_leaves.push_back(v);
  }
  if (core_leaves.size() >= 2) {
    UnrelatedSets u;
    u.a = subtree(core_leaves[0]);
    u.b = subtree(core_leaves[1]);
    u.weight_a = sub[core_leaves[0]];
    u.weight_b = sub[core_leaves[1]];
    return u;
  }

  // The core is the root path to its single leaf; everything else hangs off it
  // in light, pairwise unrelated subtrees.
  std::vector<int> fringe;
  for (int v = core_leaves.front(); v >= 0; v = t.parent[v]) {
    for (int c : sh.children[v]) {
      if (!quarter(sub[c])) fringe.push_back(c);
    }
  }
  UnrelatedSets u;
  std::size_t i = 0;
  for (; i < fringe.size() && !quarter(u.weight_a); ++i) {
    const auto part = subtree(fringe[i]);
    u.a.insert(u.a.end(), part.begin(), part.end());
    u.weight_a += sub[fringe[i]];
  }
  for (; i < fringe.size(); ++i) {
    const auto part = subtree(fringe[i]);
    u.b.insert(u.b.end(), part.begin(), part.end());
    u.weight_b += sub[fringe[i]];
  }
  std::sort(u.a.begin(), u.a.end());
  std::sort(u.b.begin(), u.b.end());
  if (!quarter(u.weight_a) || !quarter(u.weight_b)) throw Error("heavy_path_or_unrelated: fringe packing fell short");
  return u;
}

Verdict check_tree_split(const WeightedTree& t, const TreeSplit& split) {
  if (const Verdict v = check_weighted_tree(t); !v) return v;
  const int n = static_cast<int>(t.parent.size());
  auto in_range = [&](int v) { return v >= 0 && v < n; };
  if (const auto* p = std::get_if<RootPath>(&split)) {
    if (p->nodes.empty() || !in_range(p->nodes.front()) || t.parent[p->nodes.front()] != -1) {
      return Verdict::fail("root path: does not start at the root");
    }
    std::int64_t w = t.weight[p->nodes.front()];
    for (std::size_t i = 1; i < p->nodes.size(); ++i) {
      if (!in_range(p->nodes[i]) || t.parent[p->nodes[i]] != p->nodes[i - 1]) return Verdict::fail("root path: broken at position " + std::to_string(i));
      w += t.weight[p->nodes[i]];
    }
    if (w != p->weight) return Verdict::fail("root path: recorded weight is wrong");
    if (4 * w < t.total) return Verdict::fail("root path: weight below 1/4");
    return Verdict::pass();
  }
  const auto& u = std::get<UnrelatedSets>(split);
  if (u.a.empty() || u.b.empty()) return Verdict::fail("unrelated sets: a side is empty");
  std::vector<int> side(static_cast<std::size_t>(n), 0);
  std::int64_t wa = 0;
  std::int64_t wb = 0;
  for (int v : u.a) {
    if (!in_range(v) || side[v]) return Verdict::fail("unrelated sets: bad or repeated node in A");
    side[v] = 1;
    wa += t.weight[v];
  }
  for (int v : u.b) {
    if (!in_range(v) || side[v]) return Verdict::fail("unrelated sets: bad or repeated node in B");
    side[v] = 2;
    wb += t.weight[v];
  }
  if (wa != u.weight_a || wb != u.weight_b) return Verdict::fail("unrelated sets: recorded weights are wrong");
  if (4 * wa < t.total || 4 * wb < t.total) return Verdict::fail("unrelated sets: a side weighs below 1/4");
  // Related pairs lie on one root path, so walking ancestors from each node suffices.
  for (int v = 0; v < n; ++v) {
    if (!side[v]) continue;
    for (int a = t.parent[v]; a >= 0; a = t.parent[a]) {
      if (side[a] && side[a] != side[v]) {
        return Verdict::fail("unrelated sets: " + std::to_string(a) + " is an ancestor of " + std::to_string(v));
      }
    }
  }
  return Verdict::pass();
}

SkeletonTree skeleton_tree(const Skeleton& s) {
  SkeletonTree out;
  out.vertex = s.tree_vertices();
  std::vector<int> node_of(s.parent.size(), -1);
  for (int i = 0; i < static_cast<int>(out.vertex.size()); ++i) node_of[out.vertex[i]] = i;
  out.tree.parent.resize(out.vertex.size());
  out.tree.weight.assign(out.vertex.size(), 0);
  for (int i = 0; i < static_cast<int>(out.vertex.size()); ++i) {
    const Vertex p = s.parent[out.vertex[i]];
    out.tree.parent[i] = p >= 0 ? node_of[p] : -1;
  }
  for (Vertex r : s.rmap) ++out.tree.weight[node_of[r]];
  out.tree.total = static_cast<std::int64_t>(s.rmap.size());
  return out;
}

PieceOrPair connected_or_purepair(const Graph& g) {
  const int n = g.n();
  if (n < 1) throw PreconditionError("connected_or_purepair: empty graph");
  std::vector<VertexSet> parts = components(g);
  for (const VertexSet& c : parts) {
    if (3 * static_cast<int>(c.size()) >= n) return c;
  }
  PurePair p;
  p.kind = PairKind::anticomplete;
  for (const VertexSet& c : parts) {
    VertexSet& into = 3 * static_cast<int>(p.a.size()) >= n ? p.b : p.a;
    into.insert(into.end(), c.begin(), c.end());
  }
  std::sort(p.a.begin(), p.a.end());
  std::sort(p.b.begin(), p.b.end());
  return p;
}

TrimResult stable_trim(const Graph& g, std::span<const Vertex> u, double eps) {
  const VertexSet set = checked_vertex_set(g, u);
  TrimResult out;
  if (set.empty()) return out;
  Row mask(static_cast<std::size_t>(g.n()));
  for (Vertex v : set) mask.set(v);
  const double size = static_cast<double>(set.size());
  std::size_t twice_edges = 0;
  std::vector<std::size_t> deg;
  for (Vertex v : set) {
    deg.push_back((g.row(v) & mask).count());
    twice_edges += deg.back();
  }
  constexpr double slack = 1e-9;
  out.stable = static_cast<double>(twice_edges) / 2 <= eps * size * (size - 1) / 2 + slack;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (static_cast<double>(deg[i]) <= 2 * eps * size + slack) out.kept.push_back(set[i]);
  }

  if (2 * out.kept.size() < set.size()) {
    out.post = Verdict::fail("stable_trim: kept " + std::to_string(out.kept.size()) + " of " + std::to_string(set.size()));
  } else {
    Row keep(static_cast<std::size_t>(g.n()));
    for (Vertex v : out.kept) keep.set(v);
    const double bound = 4 * eps * static_cast<double>(out.kept.size()) + slack;
    for (Vertex v : out.kept) {
      if (static_cast<double>((g.row(v) & keep).count()) > bound) {
        out.post = Verdict::fail("stable_trim: vertex " + std::to_string(v) + " exceeds the 4ε|U'| degree bound");
        break;
      }
    }
  }
  return out;
}

namespace {

VertexSet greedy_sparse(const Graph& g, double alpha) {
  const int n = g.n();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  int size = n;
  while (size > 0) {
    Vertex worst = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v] && (worst < 0 || deg[v] > deg[worst])) worst = v;
    }
    if (deg[worst] <= alpha * size) break;
    alive[worst] = 0;
    --size;
    for (Vertex w : g.neighbors(worst)) {
      if (alive[w]) --deg[w];
    }
  }
  VertexSet out;
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) out.push_back(v);
  }
  return out;
}

}  // namespace

Restriction restriction_finder(const Graph& g, double alpha) {
  if (!(alpha > 0 && alpha < 1)) throw PreconditionError("restriction_finder: alpha must lie in (0,1)");
  if (g.n() == 0) throw PreconditionError("restriction_finder: empty graph");
  auto on_complement = std::async(std::launch::async, [&g, alpha] { return greedy_sparse(complement(g), alpha); });
  VertexSet direct = greedy_sparse(g, alpha);
  VertexSet comp = on_complement.get();
  Restriction r = comp.size() > direct.size() ? Restriction{std::move(comp), Side::complement}
                                               : Restriction{std::move(direct), Side::direct};

  const Graph view = r.side == Side::direct ? induced_subgraph(g, r.u).graph : complement(induced_subgraph(g, r.u).graph);
  if (view.max_degree() > alpha * static_cast<double>(r.u.size())) throw Error("restriction_finder: degree bound violated");
  return r;
}

std::string_view to_string(Side side) { return side == Side::direct ? "direct" : "complement"; }

}  // namespace pivotminor
