#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "pivotminor/graph.hpp"

namespace pivotminor {

/// A rooted tree on some host vertices plus an assignment of every host
/// vertex to a tree vertex. Contract checked by check_skeleton:
///  - tree edges are host edges;
///  - every root-to-node tree path is induced in the host;
///  - rmap(root) = root, and rmap(u) is a tree vertex adjacent to u otherwise;
///  - adjacent host vertices are assigned to related tree vertices.
struct Skeleton {
  Vertex root = -1;
  std::vector<Vertex> parent;  // -1 for the root and for vertices outside the tree
  std::vector<Vertex> rmap;

  bool in_tree(Vertex v) const { return v == root || parent[v] >= 0; }
  VertexSet tree_vertices() const;
  /// root, ..., v
  VertexSet root_path(Vertex v) const;
  /// Host vertices assigned to any of `nodes`.
  VertexSet preimage(std::span<const Vertex> nodes) const;
};

/// Territory recursion: each tree vertex t owns a territory C; the part of C
/// adjacent to t is assigned to t, every component of the rest is handed to
/// the lowest-index vertex of N(t)∩C touching it, and the connectors that
/// received something become children of t. Throws if g is disconnected.
Skeleton dominating_skeleton(const Graph& g, Vertex root);

Verdict check_skeleton(const Graph& g, const Skeleton& s);

/// Rooted tree with nonnegative integer weights; node v weighs weight[v] / total.
struct WeightedTree {
  std::vector<int> parent;  // -1 at the root only
  std::vector<std::int64_t> weight;
  std::int64_t total = 0;

  int root() const;
};

/// Validates shape and that the weights are nonnegative and sum to `total`.
Verdict check_weighted_tree(const WeightedTree& t);

struct RootPath {
  std::vector<int> nodes;  // root first
  std::int64_t weight = 0;
};

struct UnrelatedSets {
  std::vector<int> a;
  std::vector<int> b;
  std::int64_t weight_a = 0;
  std::int64_t weight_b = 0;
};

using TreeSplit = std::variant<RootPath, UnrelatedSets>;

/// A root path of weight ≥ total/4, or two unrelated node sets each of
/// weight ≥ total/4. Heaviest root path first; failing that, the nodes whose
/// subtree weighs ≥ 1/4 form a core: two incomparable core leaves give the
/// split directly, otherwise the fringe subtrees hanging off the core path
/// are packed greedily.
TreeSplit heavy_path_or_unrelated(const WeightedTree& t);

Verdict check_tree_split(const WeightedTree& t, const TreeSplit& split);

/// The skeleton as an abstract weighted tree; node i is host vertex
/// `vertex[i]`, weighted by the number of host vertices assigned to it.
struct SkeletonTree {
  WeightedTree tree;
  VertexSet vertex;
};

SkeletonTree skeleton_tree(const Skeleton& s);

/// A vertex set inducing a connected subgraph of size ≥ n/3, or an
/// anticomplete pair with both sides ≥ n/3.
using PieceOrPair = std::variant<VertexSet, PurePair>;

PieceOrPair connected_or_purepair(const Graph& g);

struct TrimResult {
  VertexSet kept;
  bool stable = true;  // the ε-stable precondition held
  Verdict post;        // |kept| ≥ |u|/2 and Δ(g[kept]) ≤ 4ε|kept|
};

/// Keeps the vertices of u whose degree inside g[u] is at most 2ε|u|.
TrimResult stable_trim(const Graph& g, std::span<const Vertex> u, double eps);

enum class Side { direct, complement };

struct Restriction {
  VertexSet u;
  Side side = Side::direct;
};

/// Greedy restriction to a low-degree side: on g and on its complement
/// (concurrently), drop a maximum-degree vertex until Δ ≤ alpha·|U|, and keep
/// the larger survivor set. No size guarantee.
Restriction restriction_finder(const Graph& g, double alpha);

std::string_view to_string(Side side);

}  // namespace pivotminor
