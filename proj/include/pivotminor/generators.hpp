#pragma once

#include <cstdint>
#include <vector>

#include "pivotminor/graph.hpp"

namespace pivotminor::gen {

/// All generators are deterministic for a fixed seed on every platform: they
/// draw raw words from mt19937_64 and never use std:: distributions.

Graph gnp(int n, double p, std::uint64_t seed);

/// Random tree made of a spine with up to `max_leaf` pendant leaves per spine
/// vertex, n vertices in total, labels shuffled.
Graph caterpillar(int n, int max_leaf, std::uint64_t seed);

Graph long_cycle(int n);
Graph anti_hole(int n);

/// Main path 0..sum(intervals); the center (last vertex) sees the path
/// vertices at the interval boundaries.
Graph fan(const std::vector<int>& intervals);

/// Random graph with maximum degree at most d: n·d/2 random pair attempts,
/// each kept only if both ends still have room.
Graph bounded_degree(int n, int d, std::uint64_t seed);

/// Induced path 0..s-1 plus `extra` vertices. Each extra vertex sees between
/// 1 and `reach` path vertices in a window of width 3·reach, and extra-extra
/// pairs are joined with probability p_off. Degrees never exceed `cap`, and
/// the path stays dominating and induced.
Graph planted_path(int s, int extra, int reach, double p_off, int cap, std::uint64_t seed);

}  // namespace pivotminor::gen
