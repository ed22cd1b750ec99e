// Canonical labelling by individualisation-refinement.
//
// The search tree is the usual one: refine to an equitable ordered partition,
// individualise each vertex of the first smallest non-singleton cell, recurse.
// The canonical form is the lexicographically least upper-triangle encoding
// over all leaves. Branches whose vertex is a twin of an already explored
// vertex of the same cell are skipped: the transposition of twins is an
// automorphism fixing the current node, so both subtrees yield the same leaves.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "pivotminor/graph.hpp"

namespace pivotminor {
namespace {

using Mask = std::uint64_t;
using Cells = std::vector<std::vector<int>>;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.n()), adj_(static_cast<std::size_t>(g.n()), 0) {
    for (int v = 0; v < n_; ++v) {
      const Row& r = g.row(v);
      for (auto w = r.find_first(); w != Row::npos; w = r.find_next(w)) adj_[v] |= Mask{1} << w;
    }
  }

  std::string run() {
    Cells start(1);
    for (int v = 0; v < n_; ++v) start[0].push_back(v);
    search(std::move(start));
    std::string out;
    out.push_back(static_cast<char>(n_));
    for (Mask w : best_) {
      for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((w >> (8 * b)) & 0xff));
    }
    return out;
  }

 private:
  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      std::vector<Mask> masks(cells.size(), 0);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        for (int v : cells[c]) masks[c] |= Mask{1} << v;
      }
      Cells next;
      next.reserve(cells.size());
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) {
          std::vector<int> key(masks.size());
          for (std::size_t c = 0; c < masks.size(); ++c) key[c] = std::popcount(adj_[v] & masks[c]);
          keyed.emplace_back(std::move(key), v);
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::size_t begin = 0;
        for (std::size_t i = 1; i <= keyed.size(); ++i) {
          if (i == keyed.size() || keyed[i].first != keyed[begin].first) {
            std::vector<int> part;
            for (std::size_t j = begin; j < i; ++j) part.push_back(keyed[j].second);
            std::sort(part.begin(), part.end());
            next.push_back(std::move(part));
            begin = i;
          }
        }
      }
      changed = next.size() != cells.size();
      cells = std::move(next);
    }
  }

  bool twins(int a, int b) const {
    const Mask ma = adj_[a] & ~(Mask{1} << b);
    const Mask mb = adj_[b] & ~(Mask{1} << a);
    return ma == mb;
  }

  void leaf(const Cells& cells) {
    std::vector<int> perm;
    perm.reserve(static_cast<std::size_t>(n_));
    for (const auto& c : cells) perm.push_back(c.front());
    const std::size_t bits = static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ > 0 ? n_ - 1 : 0) / 2;
    std::vector<Mask> code((bits + 63) / 64, 0);
    std::size_t bit = 0;
    for (int j = 1; j < n_; ++j) {
      for (int i = 0; i < j; ++i, ++bit) {
        // Most significant bits first so that vector comparison is lexicographic in bit order.
        if (adj_[perm[i]] >> perm[j] & 1) code[bit / 64] |= Mask{1} << (63 - bit % 64);
      }
    }
    if (!have_best_ || code < best_) {
      best_ = std::move(code);
      have_best_ = true;
    }
  }

  void search(Cells cells) {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size())) target = c;
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    std::vector<int> explored;
    for (int v : cells[target]) {
      const bool redundant = std::any_of(explored.begin(), explored.end(), [&](int w) { return twins(v, w); });
      if (redundant) continue;
      explored.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int w : cells[c]) {
          if (w != v) rest.push_back(w);
        }
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }

  int n_;
  std::vector<Mask> adj_;
  std::vector<Mask> best_;
  bool have_best_ = false;
};

}  // namespace

std::string canonical_form(const Graph& g) {
  if (g.n() > 64) throw CapExceeded("canonical_form: supports at most 64 vertices");
  return Canonizer(g).run();
}

}  // namespace pivotminor
