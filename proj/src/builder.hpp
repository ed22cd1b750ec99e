#pragma once

#include "pivotminor/pivot.hpp"

namespace pivotminor::detail {

// Records steps while replaying them, so constructions can inspect the graph
// they are producing.
class WitnessBuilder {
 public:
  WitnessBuilder(const Graph& host, int k) : replay_(host), witness_(empty_witness(host, k)) {}

  void pivot(Vertex u, Vertex v) { apply(Step::make_pivot(u, v)); }
  void remove(Vertex v) { apply(Step::make_delete(v)); }
  void apply(const Step& s) {
    replay_.apply(s);
    witness_.ops.push_back(s);
  }
  void keep_only(std::span<const Vertex> keep) {
    std::vector<char> wanted(static_cast<std::size_t>(graph().n()), 0);
    for (Vertex v : keep) wanted.at(static_cast<std::size_t>(v)) = 1;
    for (Vertex v = 0; v < graph().n(); ++v) {
      if (replay_.live(v) && !wanted[v]) remove(v);
    }
  }

  const Graph& graph() const { return replay_.graph(); }
  const Replay& state() const { return replay_; }
  const Witness& witness() const { return witness_; }
  Witness take() { return std::move(witness_); }

 private:
  Replay replay_;
  Witness witness_;
};

void cycle_reduce_into(WitnessBuilder& b, VertexSet cycle, int k);
void fan_extract_into(WitnessBuilder& b, Vertex center, VertexSet main_path, int k);

}  // namespace pivotminor::detail
