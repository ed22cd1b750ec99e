#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace pivotminor {

using Vertex = int;
using VertexSet = std::vector<Vertex>;
using Row = boost::dynamic_bitset<std::uint64_t>;
using Edge = std::pair<Vertex, Vertex>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Raised by bounded searches (isomorphism, orbit enumeration) when a cap is hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Result of a checker: `ok` plus a human-readable reason when it is not.
struct Verdict {
  bool ok = true;
  std::string diagnostic;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

/// Simple undirected graph on vertices 0..n-1 stored as dense bitset rows.
///
/// Rows are kept symmetric and loop-free by every mutator, so `row(v)` can be
/// used directly for word-level neighbourhood algebra.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);

  int n() const { return n_; }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const Row& row(Vertex v) const { return rows_[v]; }
  VertexSet neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(rows_[v].count()); }
  int max_degree() const;
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void toggle_edge(Vertex u, Vertex v);
  /// Exchanges the names of u and v (a relabelling, not an adjacency change).
  void swap_labels(Vertex u, Vertex v);
  /// Removes every edge at v.
  void isolate(Vertex v);

  bool operator==(const Graph& other) const { return n_ == other.n_ && rows_ == other.rows_; }

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<Row> rows_;
};

enum class PairKind { complete, anticomplete };

/// Two disjoint nonempty vertex sets that are complete or anticomplete to each other.
struct PurePair {
  VertexSet a;
  VertexSet b;
  PairKind kind = PairKind::anticomplete;

  bool operator==(const PurePair&) const = default;
};

/// An induced subgraph together with the host id of each of its vertices.
struct Subgraph {
  Graph graph;
  VertexSet original;
};

Graph complement(const Graph& g);
Graph partial_complement(const Graph& g, std::span<const Vertex> s);
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

bool is_induced_cycle(const Graph& g, std::span<const Vertex> order);
bool is_induced_path(const Graph& g, std::span<const Vertex> order);
/// True iff g itself is a single cycle on exactly k vertices.
bool is_cycle_graph(const Graph& g, int k);

/// Returns the vertices of a 2-regular connected graph in cyclic order,
/// starting at the smallest vertex and continuing to its smaller neighbour.
VertexSet cycle_order(const Graph& g);

/// Canonical labelling key: equal for two graphs iff they are isomorphic.
std::string canonical_form(const Graph& g);

inline constexpr int kDefaultIsoCap = 12;
bool small_isomorphic(const Graph& g, const Graph& h, int cap = kDefaultIsoCap);

std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// 64-bit FNV-1a of the graph6 encoding, as 16 hex digits.
std::string fingerprint(const Graph& g);

/// Sorted copy of `s`; throws if an id is out of range or repeated.
VertexSet checked_vertex_set(const Graph& g, std::span<const Vertex> s);

Verdict verify_pure_pair(const Graph& g, const PurePair& pair);

std::string_view to_string(PairKind kind);

}  // namespace pivotminor
