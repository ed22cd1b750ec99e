#include <doctest.h>

#include "fixtures.hpp"
#include "pivotminor/constructions.hpp"

using namespace pivotminor;
using namespace fixtures;

namespace {

std::size_t pivot_count(const Witness& w) {
  return static_cast<std::size_t>(std::count_if(w.ops.begin(), w.ops.end(), [](const Step& s) { return s.is_pivot(); }));
}

// A host where the structure sits on shuffled ids among unrelated extra vertices.
Graph embed(const Graph& core, int extra, std::mt19937_64& rng, std::vector<int>& where) {
  const int n = core.n() + extra;
  where = iota_set(n);
  std::shuffle(where.begin(), where.end(), rng);
  Graph g(n);
  for (auto [u, v] : core.edges()) g.add_edge(where[u], where[v]);
  for (int i = core.n(); i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (where[i] != where[j] && rng() % 3 == 0) g.add_edge(where[i], where[j]);
  return g;
}

}  // namespace

TEST_CASE("cycle_reduce examples") {
  const Graph c7 = cycle_graph(7);
  const Witness w75 = cycle_reduce(c7, iota_set(7), 5);
  CHECK(w75.ops.size() == 3);
  CHECK(pivot_count(w75) == 1);
  CHECK(cycle_reduce(cycle_graph(5), iota_set(5), 5).ops.empty());
  const Witness w10 = cycle_reduce(cycle_graph(10), iota_set(10), 4);
  CHECK(pivot_count(w10) == 3);
  CHECK(verify_ck_witness(cycle_graph(10), w10).ok);

  CHECK_THROWS_AS(cycle_reduce(c7, iota_set(7), 4), PreconditionError);
  CHECK_THROWS_AS(cycle_reduce(cycle_graph(5), iota_set(5), 7), PreconditionError);
  CHECK_THROWS_AS(cycle_reduce(c7, VertexSet{0, 2, 1, 3, 4, 5, 6}, 5), PreconditionError);
}

TEST_CASE("cycle_reduce on every same-parity pair and embedded hosts") {
  std::mt19937_64 rng(31);
  for (int m = 3; m <= 16; ++m) {
    for (int k = 3; k <= m; ++k) {
      if ((m - k) % 2 != 0) continue;
      const Witness w = cycle_reduce(cycle_graph(m), iota_set(m), k);
      CHECK(verify_ck_witness(cycle_graph(m), w).ok);
      CHECK(pivot_count(w) == static_cast<std::size_t>((m - k) / 2));

      std::vector<int> where;
      const Graph host = embed(cycle_graph(m), 4, rng, where);
      VertexSet order;
      for (int i = 0; i < m; ++i) order.push_back(where[i]);
      CHECK(verify_ck_witness(host, cycle_reduce(host, order, k)).ok);
    }
  }
}

TEST_CASE("cycle_reduce witnesses agree with the oracle on small hosts") {
  for (int m = 3; m <= 9; ++m)
    for (int k = 3; k <= m; ++k) {
      if ((m - k) % 2 != 0) continue;
      CHECK(has_pivot_minor(cycle_graph(m), k));
    }
}

TEST_CASE("st_cycle_reduce examples") {
  SUBCASE("(9,9) -> (7,3)") {
    const STCycleEmbedding e{st_cycle(9, 9), iota_set(9), 9};
    REQUIRE(check_st_cycle(e).ok);
    const STReduction r = st_cycle_reduce(e);
    CHECK(r.fragment == std::vector<Step>{Step::make_pivot(1, 7), Step::make_delete(1), Step::make_delete(7)});
    CHECK(r.next.order.size() == 7);
    CHECK(r.next.t == 3);
  }
  SUBCASE("(12,8) -> (10,2)") {
    const STReduction r = st_cycle_reduce({st_cycle(12, 8), iota_set(12), 8});
    CHECK(r.next.order.size() == 10);
    CHECK(r.next.t == 2);
    CHECK(check_st_cycle(r.next).ok);
  }
  SUBCASE("(6,6) -> C4") {
    const STReduction r = st_cycle_reduce({st_cycle(6, 6), iota_set(6), 6});
    CHECK(r.next.t == 0);
    CHECK(is_induced_cycle(r.next.host, r.next.order));
  }
  CHECK_THROWS_AS(st_cycle_reduce({st_cycle(9, 5), iota_set(9), 5}), PreconditionError);
  CHECK_THROWS_AS(st_cycle_reduce({cycle_graph(9), iota_set(9), 9}), PreconditionError);
}

TEST_CASE("st_cycle_reduce chains re-checked against a fresh replay") {
  for (int s = 6; s <= 16; ++s) {
    for (int t = 6; t <= s; ++t) {
      const Graph host = st_cycle(s, t);
      STCycleEmbedding e{host, iota_set(s), t};
      Replay replay(host);
      while (e.t >= 6) {
        const STReduction r = st_cycle_reduce(e);
        for (const Step& step : r.fragment) replay.apply(step);
        // independent check: the survivors, read in the claimed order, are C_{s'} ⊕ first t' vertices
        const Subgraph got = induced_subgraph(replay.graph(), r.next.order);
        REQUIRE(replay.live_count() == static_cast<int>(r.next.order.size()));
        REQUIRE(got.graph == st_cycle(static_cast<int>(r.next.order.size()), r.next.t));
        e = r.next;
      }
    }
  }
}

TEST_CASE("antihole_extract") {
  CHECK(antihole_min_length(3) == 11);
  CHECK(antihole_min_length(4) == 12);
  CHECK(antihole_min_length(5) == 14);
  CHECK(antihole_min_length(8) == 18);

  std::mt19937_64 rng(5);
  for (int k = 3; k <= 8; ++k) {
    for (int m : {antihole_min_length(k), antihole_min_length(k) + 1, antihole_min_length(k) + 4}) {
      CAPTURE(k);
      CAPTURE(m);
      const Graph anti = complement(cycle_graph(m));
      CHECK(verify_ck_witness(anti, antihole_extract(anti, iota_set(m), k)).ok);

      std::vector<int> where;
      const Graph host = embed(anti, 3, rng, where);
      VertexSet order;
      for (int i = 0; i < m; ++i) order.push_back(where[i]);
      CHECK(verify_ck_witness(host, antihole_extract(host, order, k)).ok);
    }
  }
  const Graph short_anti = complement(cycle_graph(10));
  CHECK_THROWS_AS(antihole_extract(short_anti, iota_set(10), 3), PreconditionError);
  const Graph c12 = cycle_graph(12);
  CHECK_THROWS_AS(antihole_extract(c12, iota_set(12), 4), PreconditionError);
}

TEST_CASE("classify_fan") {
  Graph full = path_graph(5);
  Graph h(6);
  for (auto [u, v] : full.edges()) h.add_edge(u, v);
  for (int i = 0; i < 5; ++i) h.add_edge(5, i);
  const FanDescriptor f = classify_fan(h, 5, iota_set(5));
  CHECK(f.intervals == std::vector<int>{1, 1, 1, 1});

  const FanDescriptor f31 = classify_fan(fan_graph({3, 1}), 5, iota_set(5));
  CHECK(f31.intervals == std::vector<int>{3, 1});
  CHECK(f31.strongly_k_good(5));

  const FanDescriptor f32 = classify_fan(fan_graph({3, 2}), 6, iota_set(6));
  CHECK(f32.k_good(5));
  CHECK_FALSE(f32.strongly_k_good(5));

  CHECK_THROWS_AS(classify_fan(path_graph(4), 3, VertexSet{0, 1, 2}), PreconditionError);
  CHECK_THROWS_AS(classify_fan(cycle_graph(6), 5, VertexSet{0, 1, 2, 3}), PreconditionError);
  Graph chord = fan_graph({3, 1});
  chord.add_edge(0, 2);
  CHECK_THROWS_AS(classify_fan(chord, 5, iota_set(5)), PreconditionError);
}

TEST_CASE("fan_extract examples") {
  auto run = [](const std::vector<int>& intervals, int k) {
    const Graph g = fan_graph(intervals);
    const int len = g.n() - 2;
    const Witness w = fan_extract(classify_fan(g, len + 1, iota_set(len + 1)), k);
    CHECK(verify_ck_witness(g, w).ok);
    if (g.n() <= 9) CHECK(has_pivot_minor(g, k));
    return w;
  };
  const Witness w51 = run({5, 1}, 5);
  CHECK(pivot_count(w51) == 1);  // delete the last path vertex, then C7 -> C5
  run({3, 1}, 5);
  run({4, 2, 1}, 6);
  run({1, 3}, 5);  // reversed orientation

  const Graph bad = fan_graph({3, 2});
  CHECK_THROWS_AS(fan_extract(classify_fan(bad, 6, iota_set(6)), 5), PreconditionError);
  const Graph small = fan_graph({3, 1});
  CHECK_THROWS_AS(fan_extract(classify_fan(small, 5, iota_set(5)), 4), PreconditionError);
}

TEST_CASE("fan_extract over the fixture grid") {
  std::mt19937_64 rng(17);
  const std::vector<std::vector<int>> middles{{}, {2}, {1}, {4}, {3}, {2, 2}, {1, 2}, {2, 5, 1}};
  for (int k = 5; k <= 8; ++k) {
    for (int a1 = k - 2; a1 <= k + 2; ++a1) {
      for (int as : {1, 3}) {
        for (const auto& middle : middles) {
          std::vector<int> intervals{a1};
          intervals.insert(intervals.end(), middle.begin(), middle.end());
          intervals.push_back(as);
          CAPTURE(k);
          CAPTURE(a1);
          CAPTURE(as);
          CAPTURE(middle.size());
          const Graph g = fan_graph(intervals);
          const int len = g.n() - 2;
          const Witness w = fan_extract(classify_fan(g, len + 1, iota_set(len + 1)), k);
          CHECK(verify_ck_witness(g, w).ok);
          if (g.n() <= 9) CHECK(has_pivot_minor(g, k));

          std::vector<int> where;
          const Graph host = embed(g, 2, rng, where);
          VertexSet path;
          for (int i = 0; i <= len; ++i) path.push_back(where[i]);
          CHECK(verify_ck_witness(host, fan_extract(classify_fan(host, where[len + 1], path), k)).ok);
        }
      }
    }
  }
}
