#include "pivotminor/constructions.hpp"

#include <algorithm>

#include "builder.hpp"

namespace pivotminor {
namespace detail {

void cycle_reduce_into(WitnessBuilder& b, VertexSet cycle, int k) {
  const int m = static_cast<int>(cycle.size());
  if (k < 3) throw PreconditionError("cycle_reduce: k must be at least 3");
  if (m < k) throw PreconditionError("cycle_reduce: cycle length " + std::to_string(m) + " is below k=" + std::to_string(k));
  if ((m - k) % 2 != 0) {
    throw PreconditionError("cycle_reduce: cycle length " + std::to_string(m) + " and k=" + std::to_string(k) +
                            " differ in parity");
  }
  if (!is_induced_cycle(b.graph(), cycle)) throw PreconditionError("cycle_reduce: order is not an induced cycle");

  b.keep_only(cycle);
  while (static_cast<int>(cycle.size()) > k) {
    const Vertex x = cycle[0];
    const Vertex y = cycle[1];
    b.pivot(x, y);
    b.remove(x);
    b.remove(y);
    cycle.erase(cycle.begin(), cycle.begin() + 2);
    if (b.state().live_count() != static_cast<int>(cycle.size()) || !is_induced_cycle(b.graph(), cycle)) {
      throw Error("cycle_reduce: round did not shorten the cycle by two");
    }
  }
}

namespace {

// Returns the descriptor oriented so that a_1 ≥ k-2 and a_s is odd when that
// orientation exists.
FanDescriptor oriented(const Graph& g, Vertex center, VertexSet path, int k) {
  FanDescriptor f = classify_fan(g, center, path);
  const int s = static_cast<int>(f.intervals.size());
  const bool forward = f.intervals.front() >= k - 2 && f.intervals.back() % 2 == 1;
  if (s >= 2 && !forward) {
    std::reverse(path.begin(), path.end());
    f = classify_fan(g, center, path);
  }
  return f;
}

}  // namespace

void fan_extract_into(WitnessBuilder& b, Vertex center, VertexSet path, int k) {
  if (k < 5) throw PreconditionError("fan_extract: k must be at least 5");
  {
    const FanDescriptor f = classify_fan(b.graph(), center, path);
    if (!f.strongly_k_good(k)) throw PreconditionError("fan_extract: fan is not strongly " + std::to_string(k) + "-good");
  }
  VertexSet keep = path;
  keep.push_back(center);
  b.keep_only(keep);

  for (;;) {
    const FanDescriptor f = oriented(b.graph(), center, path, k);
    path = f.main_path;
    const auto& a = f.intervals;
    const int s = static_cast<int>(a.size());

    // (i) the center and the first interval span an induced C_{a_1+2} of the right parity.
    if ((a[0] - k) % 2 == 0) {
      VertexSet cycle{center};
      cycle.insert(cycle.end(), path.begin(), path.begin() + a[0] + 1);
      cycle_reduce_into(b, std::move(cycle), k);
      return;
    }
    if (!f.strongly_k_good(k)) throw Error("fan_extract: recursion left the strongly k-good class");

    // Offsets of interval starts along the main path.
    std::vector<int> start(static_cast<std::size_t>(s) + 1, 0);
    for (int i = 0; i < s; ++i) start[i + 1] = start[i] + a[i];

    // (ii) an odd interior interval: keep only the first i intervals.
    int odd_interior = -1;
    for (int i = 1; i + 1 < s; ++i) {
      if (a[i] % 2 == 1) {
        odd_interior = i;
        break;
      }
    }
    if (odd_interior >= 0) {
      const int end = start[odd_interior + 1];
      for (int p = end + 1; p < static_cast<int>(path.size()); ++p) b.remove(path[p]);
      path.resize(static_cast<std::size_t>(end) + 1);
      continue;
    }

    // (iii) an interval after the first with an internal edge: pivot it away.
    int long_tail = -1;
    for (int i = 1; i < s; ++i) {
      if (a[i] >= 3) {
        long_tail = i;
        break;
      }
    }
    if (long_tail >= 0) {
      const int p = start[long_tail] + 1;
      const Vertex u = path[p];
      const Vertex v = path[p + 1];
      b.pivot(u, v);
      b.remove(u);
      b.remove(v);
      path.erase(path.begin() + p, path.begin() + p + 2);
      continue;
    }

    // (iv) shape (a_1, 2, ..., 2, 1): pivot the final edge and drop both ends.
    const int last = static_cast<int>(path.size()) - 1;
    const Vertex x = path[last - 1];
    const Vertex y = path[last];
    b.pivot(x, y);
    b.remove(x);
    b.remove(y);
    path.resize(static_cast<std::size_t>(last) - 1);
  }
}

}  // namespace detail

Witness cycle_reduce(const Graph& host, std::span<const Vertex> cycle, int k) {
  detail::WitnessBuilder b(host, k);
  detail::cycle_reduce_into(b, VertexSet(cycle.begin(), cycle.end()), k);
  Witness w = b.take();
  if (const Verdict v = verify_ck_witness(host, w); !v) throw Error("cycle_reduce produced a bad witness: " + v.diagnostic);
  return w;
}

Verdict check_st_cycle(const STCycleEmbedding& e) {
  const int s = static_cast<int>(e.order.size());
  if (s < 3) return Verdict::fail("(s,t)-cycle: need s >= 3");
  if (e.t < 0 || e.t > s) return Verdict::fail("(s,t)-cycle: need s >= t >= 0");
  try {
    (void)checked_vertex_set(e.host, e.order);
  } catch (const PreconditionError& err) {
    return Verdict::fail(err.what());
  }
  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) {
      const bool consecutive = (j == i + 1) || (i == 0 && j == s - 1);
      const bool in_x = j < e.t;  // i < j, so both are in the prefix
      const bool want = in_x ? !consecutive : consecutive;
      if (e.host.adjacent(e.order[i], e.order[j]) != want) {
        return Verdict::fail("(s,t)-cycle: pair at positions " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                             " has the wrong adjacency");
      }
    }
  }
  return Verdict::pass();
}

STReduction st_cycle_reduce(const STCycleEmbedding& e) {
  const int s = static_cast<int>(e.order.size());
  const int t = e.t;
  if (t < 6) throw PreconditionError("st_cycle_reduce: need t >= 6, got " + std::to_string(t));
  if (const Verdict v = check_st_cycle(e); !v) throw PreconditionError("st_cycle_reduce: " + v.diagnostic);

  const auto& o = e.order;  // o[i] is v_{i+1}
  STReduction out;
  out.fragment = {Step::make_pivot(o[1], o[t - 2]), Step::make_delete(o[1]), Step::make_delete(o[t - 2])};
  Replay replay(e.host);
  for (const Step& step : out.fragment) replay.apply(step);

  // New cyclic order v4..v_{t-3}, v_{t-2}, v_t..v_s, v1, v3 with X' = {v4..v_{t-3}} as prefix.
  VertexSet next;
  next.reserve(static_cast<std::size_t>(s) - 2);
  for (int i = 3; i <= t - 4; ++i) next.push_back(o[i]);
  next.push_back(o[t - 3]);
  for (int i = t - 1; i < s; ++i) next.push_back(o[i]);
  next.push_back(o[0]);
  next.push_back(o[2]);

  out.next = STCycleEmbedding{replay.graph(), std::move(next), t - 6};
  if (const Verdict v = check_st_cycle(out.next); !v) throw Error("st_cycle_reduce: result is not an (s-2,t-6)-cycle: " + v.diagnostic);
  return out;
}

int antihole_min_length(int k) { return (3 * k + 1) / 2 + 6; }

Witness antihole_extract(const Graph& host, std::span<const Vertex> antihole, int k) {
  if (k < 3) throw PreconditionError("antihole_extract: k must be at least 3");
  const int m = static_cast<int>(antihole.size());
  if (m < antihole_min_length(k)) {
    throw PreconditionError("antihole_extract: anti-hole length " + std::to_string(m) + " is below " +
                            std::to_string(antihole_min_length(k)) + " for k=" + std::to_string(k));
  }
  const VertexSet order(antihole.begin(), antihole.end());
  if (!check_st_cycle(STCycleEmbedding{host, order, m})) {
    throw PreconditionError("antihole_extract: order is not an induced anti-hole");
  }

  detail::WitnessBuilder b(host, k);
  b.keep_only(order);
  STCycleEmbedding emb{b.graph(), order, m};
  const int rounds = (k - 2 + 3) / 4;
  for (int r = 0; r < rounds; ++r) {
    STReduction red = st_cycle_reduce(emb);
    for (const Step& step : red.fragment) b.apply(step);
    emb = std::move(red.next);
  }

  // Rotate so the complemented run is a suffix: seq = (4i plain vertices) + X.
  const int tx = emb.t;
  VertexSet seq(emb.order.begin() + tx, emb.order.end());
  seq.insert(seq.end(), emb.order.begin(), emb.order.begin() + tx);
  const int plain = static_cast<int>(seq.size()) - tx;
  const Vertex y = seq[plain];
  const Vertex x = seq.back();
  VertexSet cycle(seq.begin(), seq.begin() + plain);
  cycle.push_back(y);
  cycle.push_back(x);

  if (k % 2 == 0) {
    detail::cycle_reduce_into(b, std::move(cycle), k);
  } else {
    // A common neighbour z of x and y inside X sees no other cycle vertex;
    // pivoting yz and deleting both leaves a cycle of length 4i+1.
    Vertex z = -1;
    for (int p = plain + 1; p + 1 < static_cast<int>(seq.size()); ++p) {
      const Vertex cand = seq[p];
      if (!b.graph().adjacent(cand, x) || !b.graph().adjacent(cand, y)) continue;
      const bool clean = std::none_of(cycle.begin(), cycle.end() - 2, [&](Vertex c) { return b.graph().adjacent(cand, c); });
      if (clean && (z < 0 || cand < z)) z = cand;
    }
    if (z < 0) throw Error("antihole_extract: no common neighbour of the two complemented cycle vertices");
    VertexSet keep = cycle;
    keep.push_back(z);
    b.keep_only(keep);
    b.pivot(y, z);
    b.remove(y);
    b.remove(z);
    const Subgraph rest = b.state().current();
    VertexSet odd_cycle;
    for (Vertex local : cycle_order(rest.graph)) odd_cycle.push_back(rest.original[local]);
    detail::cycle_reduce_into(b, std::move(odd_cycle), k);
  }

  Witness w = b.take();
  if (const Verdict v = verify_ck_witness(host, w); !v) throw Error("antihole_extract produced a bad witness: " + v.diagnostic);
  return w;
}

bool FanDescriptor::k_good(int k) const {
  return !intervals.empty() && (intervals.front() >= k - 2 || intervals.back() >= k - 2);
}

bool FanDescriptor::strongly_k_good(int k) const {
  if (intervals.size() < 2) return false;
  const int first = intervals.front();
  const int last = intervals.back();
  return (first >= k - 2 && last % 2 == 1) || (last >= k - 2 && first % 2 == 1);
}

FanDescriptor classify_fan(const Graph& host, Vertex center, std::span<const Vertex> main_path) {
  if (main_path.size() < 2) throw PreconditionError("classify_fan: main path needs at least one edge");
  if (center < 0 || center >= host.n()) throw PreconditionError("classify_fan: center out of range");
  if (std::find(main_path.begin(), main_path.end(), center) != main_path.end()) {
    throw PreconditionError("classify_fan: center lies on the main path");
  }
  if (!is_induced_path(host, main_path)) throw PreconditionError("classify_fan: main path is not induced");
  if (!host.adjacent(center, main_path.front()) || !host.adjacent(center, main_path.back())) {
    throw PreconditionError("classify_fan: center is not adjacent to both path ends");
  }
  FanDescriptor f{host, center, VertexSet(main_path.begin(), main_path.end()), {}};
  int prev = 0;
  for (int p = 1; p < static_cast<int>(main_path.size()); ++p) {
    if (host.adjacent(center, main_path[p])) {
      f.intervals.push_back(p - prev);
      prev = p;
    }
  }
  return f;
}

Witness fan_extract(const FanDescriptor& fan, int k) {
  detail::WitnessBuilder b(fan.host, k);
  detail::fan_extract_into(b, fan.center, fan.main_path, k);
  Witness w = b.take();
  if (const Verdict v = verify_ck_witness(fan.host, w); !v) throw Error("fan_extract produced a bad witness: " + v.diagnostic);
  return w;
}

}  // namespace pivotminor
