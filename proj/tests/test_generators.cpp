#include <doctest.h>

#include "fixtures.hpp"
#include "pivotminor/constructions.hpp"
#include "pivotminor/generators.hpp"

using namespace pivotminor;

TEST_CASE("fixed shapes") {
  CHECK(gen::long_cycle(7) == fixtures::cycle_graph(7));
  CHECK(gen::anti_hole(9) == complement(fixtures::cycle_graph(9)));
  CHECK(gen::fan({3, 1}) == fixtures::fan_graph({3, 1}));
  const Graph f = gen::fan({3, 1});
  CHECK(classify_fan(f, 5, fixtures::iota_set(5)).strongly_k_good(5));
  CHECK_THROWS_AS(gen::long_cycle(2), PreconditionError);
  CHECK_THROWS_AS(gen::fan({}), PreconditionError);
}

TEST_CASE("seeded generators are deterministic") {
  CHECK(gen::gnp(20, 0.5, 1) == gen::gnp(20, 0.5, 1));
  CHECK_FALSE(gen::gnp(20, 0.5, 1) == gen::gnp(20, 0.5, 2));
  CHECK(gen::caterpillar(50, 3, 9) == gen::caterpillar(50, 3, 9));
  CHECK(gen::bounded_degree(50, 4, 9) == gen::bounded_degree(50, 4, 9));
  CHECK(gen::planted_path(20, 30, 3, 0.05, 8, 4) == gen::planted_path(20, 30, 3, 0.05, 8, 4));
  // Pinned so that a change in the draw sequence is noticed.
  CHECK(graph6_encode(gen::gnp(6, 0.5, 1)) == "EuyW");
  CHECK(gen::gnp(10, 0.0, 3).edge_count() == 0);
  CHECK(gen::gnp(10, 1.0, 3).edge_count() == 45);
}

TEST_CASE("generator postconditions") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 1 + static_cast<int>(seed * 13 % 200);
    const Graph t = gen::caterpillar(n, 4, seed);
    CHECK(t.n() == n);
    CHECK(t.edge_count() == static_cast<std::size_t>(n - 1));
    CHECK(is_connected(t));
    // A tree is a caterpillar iff deleting its leaves leaves a path.
    VertexSet inner;
    for (Vertex v = 0; v < n; ++v)
      if (t.degree(v) > 1) inner.push_back(v);
    if (inner.size() > 1) {
      const Graph s = induced_subgraph(t, inner).graph;
      CHECK(s.max_degree() <= 2);
      CHECK(is_connected(s));
    }

    const Graph b = gen::bounded_degree(n, 5, seed);
    CHECK(b.max_degree() <= 5);

    const int s = 5 + static_cast<int>(seed % 40);
    const Graph p = gen::planted_path(s, 3 * s, 1 + static_cast<int>(seed % 4), 0.05, 10, seed);
    CHECK(p.max_degree() <= 10);
    CHECK(is_induced_path(p, fixtures::iota_set(s)));
    for (Vertex v = s; v < p.n(); ++v) {
      bool seen = false;
      for (Vertex x = 0; x < s; ++x) seen = seen || p.adjacent(v, x);
      CHECK(seen);
    }
  }
}
