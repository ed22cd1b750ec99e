#pragma once

#include <span>
#include <vector>

#include "pivotminor/graph.hpp"
#include "pivotminor/pivot.hpp"

namespace pivotminor {

/// Witness reducing an induced cycle of length m to C_k, m ≥ k ≥ 3, m ≡ k (mod 2).
/// Vertices outside the cycle are deleted first; each round pivots a cycle
/// edge and deletes both ends.
Witness cycle_reduce(const Graph& host, std::span<const Vertex> cycle, int k);

/// C_s ⊕ X laid out along `order`, where X is the first `t` vertices.
/// Only host[order] is constrained; other host vertices are ignored.
struct STCycleEmbedding {
  Graph host;
  VertexSet order;
  int t = 0;
};

Verdict check_st_cycle(const STCycleEmbedding& e);

struct STReduction {
  std::vector<Step> fragment;
  STCycleEmbedding next;  // an (s-2, t-6)-cycle on the survivors, X again a prefix
};

/// One reduction step (s, t) -> (s-2, t-6), t ≥ 6: pivot v2 v_{t-1} and delete both.
STReduction st_cycle_reduce(const STCycleEmbedding& e);

/// Smallest anti-hole length from which antihole_extract reaches C_k: ⌈3k/2⌉ + 6.
int antihole_min_length(int k);

/// Witness to C_k from an induced complement-of-C_m given in cyclic order.
Witness antihole_extract(const Graph& host, std::span<const Vertex> antihole, int k);

/// A generalized fan: `center` plus an induced main path whose ends both see
/// the center. `intervals` are the lengths of the maximal center-free subpaths.
struct FanDescriptor {
  Graph host;
  Vertex center = -1;
  VertexSet main_path;
  std::vector<int> intervals;

  bool k_good(int k) const;
  bool strongly_k_good(int k) const;
};

FanDescriptor classify_fan(const Graph& host, Vertex center, std::span<const Vertex> main_path);

/// Witness to C_k from a strongly k-good fan, k ≥ 5.
Witness fan_extract(const FanDescriptor& fan, int k);

}  // namespace pivotminor
