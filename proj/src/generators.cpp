#include "pivotminor/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace pivotminor::gen {

namespace {

// Platform-independent draws: std::uniform_*_distribution is not.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
  /// Uniform in [0, bound), rejection sampled.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
      const std::uint64_t x = eng();
      if (x < limit) return x % bound;
    }
  }
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
};

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace

Graph gnp(int n, double p, std::uint64_t seed) {
  require(n >= 0, "gnp: n must be nonnegative");
  require(p >= 0 && p <= 1, "gnp: p must lie in [0,1]");
  Rng rng(seed);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.unit() < p) g.add_edge(u, v);
  return g;
}

Graph caterpillar(int n, int max_leaf, std::uint64_t seed) {
  require(n >= 1, "caterpillar: n must be positive");
  require(max_leaf >= 0, "caterpillar: max_leaf must be nonnegative");
  Rng rng(seed);
  std::vector<Edge> edges;
  int next = 1;
  Vertex spine = 0;
  while (next < n) {
    const int leaves = std::min(rng.range(0, max_leaf), n - next);
    for (int j = 0; j < leaves; ++j) edges.emplace_back(spine, next++);
    if (next < n) {
      edges.emplace_back(spine, next);
      spine = next++;
    }
  }
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  for (auto& [u, v] : edges) {
    u = perm[u];
    v = perm[v];
  }
  return Graph::from_edges(n, edges);
}

Graph long_cycle(int n) {
  require(n >= 3, "long_cycle: n must be at least 3");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph anti_hole(int n) { return complement(long_cycle(n)); }

Graph fan(const std::vector<int>& intervals) {
  require(!intervals.empty(), "fan: need at least one interval");
  int len = 0;
  for (int a : intervals) {
    require(a >= 1, "fan: interval lengths must be positive");
    len += a;
  }
  Graph g(len + 2);
  const Vertex center = len + 1;
  for (Vertex v = 0; v < len; ++v) g.add_edge(v, v + 1);
  g.add_edge(center, 0);
  int at = 0;
  for (int a : intervals) {
    at += a;
    g.add_edge(center, at);
  }
  return g;
}

Graph bounded_degree(int n, int d, std::uint64_t seed) {
  require(n >= 0 && d >= 0, "bounded_degree: n and d must be nonnegative");
  Graph g(n);
  if (n < 2) return g;
  Rng rng(seed);
  const long attempts = static_cast<long>(n) * d / 2;
  for (long t = 0; t < attempts; ++t) {
    const Vertex u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    const Vertex v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    if (u != v && g.degree(u) < d && g.degree(v) < d) g.add_edge(u, v);
  }
  return g;
}

Graph planted_path(int s, int extra, int reach, double p_off, int cap, std::uint64_t seed) {
  require(s >= 1 && extra >= 0 && reach >= 1, "planted_path: bad sizes");
  require(cap >= 3, "planted_path: cap must be at least 3");
  require(static_cast<long>(s) * (cap - 2) + 2 >= extra, "planted_path: not enough room on the path for the extra vertices");
  Rng rng(seed);
  Graph g(s + extra);
  for (Vertex i = 0; i + 1 < s; ++i) g.add_edge(i, i + 1);
  // Free path slots; every extra vertex still to come keeps one in reserve.
  long free = 0;
  for (Vertex i = 0; i < s; ++i) free += cap - g.degree(i);
  for (Vertex u = s; u < s + extra; ++u) {
    const long reserve = s + extra - 1 - u;
    const int a = rng.range(0, s - 1);
    const int c = rng.range(1, reach);
    for (int t = 0; t < c && free > reserve + 1; ++t) {
      const Vertex x = std::min(s - 1, a + rng.range(0, 3 * reach - 1));
      if (g.degree(x) < cap && !g.adjacent(u, x)) {
        g.add_edge(u, x);
        --free;
      }
    }
    if (g.degree(u) == 0) {
      Vertex x = a;
      while (g.degree(x) >= cap) x = (x + 1) % s;
      g.add_edge(u, x);
      --free;
    }
  }
  for (Vertex u = s; u < s + extra; ++u)
    for (Vertex v = u + 1; v < s + extra; ++v)
      if (rng.unit() < p_off && g.degree(u) < cap && g.degree(v) < cap) g.add_edge(u, v);
  return g;
}

}  // namespace pivotminor::gen
