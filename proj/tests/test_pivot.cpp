#include <doctest.h>

#include "fixtures.hpp"
#include "pivotminor/pivot.hpp"

using namespace pivotminor;
using namespace fixtures;

namespace {

bool is_bipartite(const Graph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.n()), -1);
  for (Vertex s = 0; s < g.n(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          stack.push_back(w);
        } else if (colour[w] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

Witness parity_round(const Graph& g, int k, Vertex u, Vertex v) {
  Witness w = empty_witness(g, k);
  w.ops = {Step::make_pivot(u, v), Step::make_delete(u), Step::make_delete(v)};
  return w;
}

}  // namespace

TEST_CASE("pivot examples") {
  CHECK(pivot(complete_graph(3), 0, 1) == complete_graph(3));

  // a-b-c pivoted on ab: no classes to toggle, only the swap of a and b
  const Graph p3 = path_graph(3);
  const Graph q = pivot(p3, 0, 1);
  CHECK(q.edge_count() == 2);
  CHECK(q.adjacent(0, 1));
  CHECK(q.adjacent(0, 2));
  CHECK_FALSE(q.adjacent(1, 2));

  // C4 a,b,c,d pivoted on ab becomes the path c-a-b-d
  const Graph c4 = cycle_graph(4);
  Graph expected(4);
  expected.add_edge(2, 0);
  expected.add_edge(0, 1);
  expected.add_edge(1, 3);
  CHECK(pivot(c4, 0, 1) == expected);
  CHECK(pivot_by_local_complements(c4, 0, 1) == expected);

  CHECK_THROWS_AS(pivot(c4, 0, 2), PreconditionError);
  CHECK_THROWS_AS(pivot(c4, 0, 0), PreconditionError);
  CHECK_THROWS_AS(pivot(c4, 0, 9), PreconditionError);
}

TEST_CASE("pivot algebra on random samples") {
  std::mt19937_64 rng(2024);
  int samples = 0;
  while (samples < 2000) {
    const int n = 2 + static_cast<int>(rng() % 40);
    const Graph g = random_graph(n, 0.05 + 0.9 * (rng() % 100) / 100.0, rng);
    const auto edges = g.edges();
    if (edges.empty()) continue;
    const auto [u, v] = edges[rng() % edges.size()];
    const Graph h = pivot(g, u, v);
    REQUIRE(h == pivot_by_local_complements(g, u, v));
    REQUIRE(pivot(h, u, v) == g);
    REQUIRE(pivot(g, v, u) == h);
    const Vertex w = static_cast<Vertex>(rng() % n);
    if (w != u && w != v) {
      Graph lhs = h;
      lhs.isolate(w);
      Graph gw = g;
      gw.isolate(w);
      REQUIRE(lhs == pivot(gw, u, v));
    }
    ++samples;
  }
}

TEST_CASE("pivot keeps bipartite graphs bipartite") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + trial % 20;
    Graph g(n);
    for (int u = 0; u < n; u += 2)
      for (int v = 1; v < n; v += 2)
        if (rng() % 3 == 0) g.add_edge(u, v);
    const auto edges = g.edges();
    if (edges.empty()) continue;
    const auto [u, v] = edges[rng() % edges.size()];
    CHECK(is_bipartite(pivot(g, u, v)));
  }
}

TEST_CASE("apply_witness") {
  const Graph c6 = cycle_graph(6);
  const Subgraph same = apply_witness(c6, empty_witness(c6, 6));
  CHECK(same.graph == c6);

  const Subgraph c4 = apply_witness(c6, parity_round(c6, 4, 0, 1));
  CHECK(small_isomorphic(c4.graph, cycle_graph(4)));
  CHECK(c4.original == VertexSet{2, 3, 4, 5});

  Witness bad = empty_witness(c6, 4);
  bad.ops = {Step::make_delete(5), Step::make_pivot(0, 2)};
  try {
    apply_witness(c6, bad);
    FAIL("expected a witness error");
  } catch (const WitnessError& e) {
    CHECK(e.step() == 1);
  }

  Witness dead = empty_witness(c6, 4);
  dead.ops = {Step::make_delete(1), Step::make_pivot(0, 1)};
  try {
    apply_witness(c6, dead);
    FAIL("expected a witness error");
  } catch (const WitnessError& e) {
    CHECK(e.step() == 1);
  }

  CHECK_THROWS_AS(apply_witness(cycle_graph(7), empty_witness(c6, 6)), PreconditionError);
}

TEST_CASE("verify_ck_witness") {
  const Graph c7 = cycle_graph(7);
  Witness w = parity_round(c7, 5, 3, 4);
  CHECK(verify_ck_witness(c7, w).ok);

  Witness truncated = w;
  truncated.ops.pop_back();
  CHECK_FALSE(verify_ck_witness(c7, truncated).ok);

  const Verdict wrong = verify_ck_witness(cycle_graph(8), w);
  CHECK_FALSE(wrong.ok);
  CHECK(wrong.diagnostic.find("fingerprint") != std::string::npos);

  Witness wrong_k = w;
  wrong_k.k = 4;
  CHECK_FALSE(verify_ck_witness(c7, wrong_k).ok);
}

TEST_CASE("normalize_witness") {
  const Graph c7 = cycle_graph(7);
  Witness w = empty_witness(c7, 5);
  w.ops = {Step::make_delete(5), Step::make_pivot(0, 1)};
  const Witness n = normalize_witness(w);
  CHECK(n.ops == std::vector<Step>{Step::make_pivot(0, 1), Step::make_delete(5)});
  const Subgraph a = apply_witness(c7, w);
  const Subgraph b = apply_witness(c7, n);
  CHECK(a.graph == b.graph);
  CHECK(a.original == b.original);

  CHECK(normalize_witness(n) == n);
  CHECK(normalize_witness(empty_witness(c7, 5)) == empty_witness(c7, 5));

  Witness broken = empty_witness(c7, 5);
  broken.ops = {Step::make_pivot(0, 3)};
  CHECK_THROWS_AS(normalize_witness(broken), WitnessError);

  // random interleaved witnesses normalize to the same replay result
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(12, 0.4, rng);
    Replay replay(g);
    Witness rw = empty_witness(g, 3);
    for (int step = 0; step < 8; ++step) {
      const auto live = replay.live_vertices();
      if (live.size() < 3) break;
      const auto edges = replay.graph().edges();
      Step s = Step::make_delete(live[rng() % live.size()]);
      if (rng() % 2 && !edges.empty()) {
        const auto e = edges[rng() % edges.size()];
        s = Step::make_pivot(e.first, e.second);
      }
      replay.apply(s);
      rw.ops.push_back(s);
    }
    const Witness nw = normalize_witness(rw);
    const Subgraph x = apply_witness(g, rw);
    const Subgraph y = apply_witness(g, nw);
    CHECK(x.graph == y.graph);
    CHECK(x.original == y.original);
  }
}

TEST_CASE("find_induced_cycle matches subset search") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 8;
    const Graph g = random_graph(n, 0.45, rng);
    for (int k = 3; k <= n; ++k) {
      const auto found = find_induced_cycle(g, k);
      REQUIRE(found.has_value() == brute_has_induced_cycle(g, k));
      if (found) {
        CHECK(found->size() == static_cast<std::size_t>(k));
        CHECK(is_induced_cycle(g, *found));
      }
    }
  }
}

TEST_CASE("pivot-minor oracle") {
  Witness w;
  CHECK(has_pivot_minor(cycle_graph(5), 3, {}, &w));
  CHECK(verify_ck_witness(cycle_graph(5), w).ok);
  CHECK_FALSE(has_pivot_minor(cycle_graph(6), 5));
  CHECK(has_pivot_minor(cycle_graph(6), 4, {}, &w));
  CHECK(verify_ck_witness(cycle_graph(6), w).ok);
  CHECK_FALSE(has_pivot_minor(cycle_graph(4), 5));

  CHECK_THROWS_AS(has_pivot_minor(cycle_graph(11), 5), CapExceeded);
  OrbitOptions tiny;
  tiny.max_orbit = 1;
  CHECK_THROWS_AS(has_pivot_minor(cycle_graph(8), 3, tiny), CapExceeded);

  for (int m = 3; m <= 8; ++m)
    for (int k = 3; k <= m; ++k)
      if ((m - k) % 2 == 0) CHECK(has_pivot_minor(cycle_graph(m), k));
}

TEST_CASE("orbit enumeration is independent of thread count") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 5; ++trial) {
    const Graph g = random_graph(8, 0.4, rng);
    OrbitOptions one;
    OrbitOptions many;
    many.threads = 4;
    OrbitIndex a(g, one);
    OrbitIndex b(g, many);
    a.enumerate();
    b.enumerate();
    REQUIRE(a.size() == b.size());
    CHECK(a.complete());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.member(i).graph == b.member(i).graph);

    // closure: pivoting any edge of any member stays inside the orbit
    std::set<std::string> keys;
    for (std::size_t i = 0; i < a.size(); ++i) keys.insert(canonical_form(a.member(i).graph));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (auto [u, v] : a.member(i).graph.edges()) CHECK(keys.count(canonical_form(pivot(a.member(i).graph, u, v))) == 1);

    // every member is reached from the seed by its recorded pivot path
    for (std::size_t i = 0; i < a.size(); i += 3) {
      Graph h = g;
      for (const Step& s : a.pivots_to(i)) h = pivot(h, s.u, s.v);
      CHECK(h == a.member(i).graph);
    }
  }
}
