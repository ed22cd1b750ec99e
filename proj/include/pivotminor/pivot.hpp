#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "pivotminor/graph.hpp"

namespace pivotminor {

/// G∧uv: complements adjacency between the three classes N(u)∩N(v),
/// N(u)−N(v)−v and N(v)−N(u)−u, then exchanges the labels of u and v.
/// Throws PreconditionError if uv is not an edge.
Graph pivot(const Graph& g, Vertex u, Vertex v);

/// One witness step. `v` is unused for deletions.
struct Step {
  enum class Kind { pivot, remove };
  Kind kind = Kind::pivot;
  Vertex u = -1;
  Vertex v = -1;

  static Step make_pivot(Vertex a, Vertex b) { return {Kind::pivot, a, b}; }
  static Step make_delete(Vertex a) { return {Kind::remove, a, -1}; }
  bool is_pivot() const { return kind == Kind::pivot; }
  bool operator==(const Step&) const = default;
};

/// A replayable pivot/delete sequence claiming that `source` has C_k as a
/// pivot-minor. Vertex ids always refer to the source numbering.
struct Witness {
  std::string source;  // graph6 of the starting graph
  int k = 0;
  std::vector<Step> ops;

  bool operator==(const Witness&) const = default;
};

Witness empty_witness(const Graph& g, int k);

/// Failure while replaying a witness, tagged with the offending step.
class WitnessError : public Error {
 public:
  WitnessError(std::size_t step, const std::string& what)
      : Error("step " + std::to_string(step) + ": " + what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

/// Live-vertex replay state. Deleted vertices are isolated and marked dead;
/// ids never shift, so later steps keep using source numbering.
class Replay {
 public:
  explicit Replay(Graph g);

  void apply(const Step& step);
  void pivot(Vertex u, Vertex v);
  void remove(Vertex v);
  /// Deletes every live vertex not in `keep`.
  void keep_only(std::span<const Vertex> keep);

  const Graph& graph() const { return graph_; }
  bool live(Vertex v) const { return live_[v] != 0; }
  int live_count() const { return live_count_; }
  VertexSet live_vertices() const;
  Subgraph current() const;

 private:
  Graph graph_;
  std::vector<char> live_;
  int live_count_;
};

/// Replays `w` on `g`; the result is the surviving induced subgraph with the
/// source id of each survivor. Throws PreconditionError on a fingerprint
/// mismatch and WitnessError on a bad step.
Subgraph apply_witness(const Graph& g, const Witness& w);

/// True iff `w` replays on `g` and leaves a single cycle on exactly w.k vertices.
Verdict verify_ck_witness(const Graph& g, const Witness& w);

/// Moves every deletion after every pivot. Valid because (G−x)∧uv = (G∧uv)−x
/// for x ∉ {u, v}. Throws WitnessError if `w` does not replay on its source.
Witness normalize_witness(const Witness& w);

/// Returns a cyclic vertex order of an induced C_k in g, if one exists.
/// Exhaustive over k-subsets; intended for small graphs.
std::optional<VertexSet> find_induced_cycle(const Graph& g, int k);

struct OrbitOptions {
  int max_vertices = 10;
  std::size_t max_orbit = 1'000'000;
  int threads = 1;
};

/// Breadth-first enumeration of the pivot orbit of a seed graph, one labelled
/// representative per isomorphism class. Members remember the pivot that first
/// reached them so a pivot sequence from the seed can be rebuilt.
class OrbitIndex {
 public:
  struct Member {
    Graph graph;
    std::size_t parent;  // index of the member this one was reached from; self for the seed
    Step via;
  };

  OrbitIndex(const Graph& seed, const OrbitOptions& options);

  /// Expands until the orbit is closed, the cap is hit, or `stop` returns
  /// true for a newly inserted member. Returns the index of that member.
  std::optional<std::size_t> enumerate(const std::function<bool(const Graph&)>& stop = {});

  std::size_t size() const { return members_.size(); }
  bool complete() const { return complete_; }
  const Member& member(std::size_t i) const { return members_[i]; }
  std::vector<Step> pivots_to(std::size_t i) const;

 private:
  bool insert(Graph g, std::string key, std::size_t parent, Step via);

  OrbitOptions options_;
  std::vector<Member> members_;
  std::unordered_set<std::string> seen_;
  bool complete_ = false;
};

struct OracleResult {
  bool found = false;
  std::optional<Witness> witness;
  std::size_t orbit_size = 0;
  bool complete = false;  // false if the orbit cap stopped enumeration early
};

/// Exhaustive pivot-minor oracle for C_k on graphs with at most
/// options.max_vertices vertices. Searches the normal form "pivots first, then
/// one induced-subgraph pass".
OracleResult search_pivot_minor(const Graph& g, int k, const OrbitOptions& options = {});

/// Boolean form of search_pivot_minor. Throws CapExceeded when the answer is
/// not decided because the orbit cap was reached.
bool has_pivot_minor(const Graph& g, int k, const OrbitOptions& options = {}, Witness* witness = nullptr);

}  // namespace pivotminor
