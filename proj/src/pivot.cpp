#include "pivotminor/pivot.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace pivotminor {

Graph pivot(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || u == v || !g.adjacent(u, v)) {
    throw PreconditionError("pivot: " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
  }
  Row nu = g.row(u);
  Row nv = g.row(v);
  nu.reset(v);
  nv.reset(u);
  const Row both = nu & nv;
  const Row only_u = nu - nv;
  const Row only_v = nv - nu;

  Graph out = g;
  auto toggle_against = [&](const Row& cls, const Row& others) {
    for (auto x = cls.find_first(); x != Row::npos; x = cls.find_next(x)) {
      for (auto y = others.find_first(); y != Row::npos; y = others.find_next(y)) {
        if (x < y) out.toggle_edge(static_cast<Vertex>(x), static_cast<Vertex>(y));
      }
    }
  };
  // Each unordered cross-class pair is toggled exactly once: the x < y guard
  // picks one orientation and the class pairs are disjoint.
  toggle_against(both, only_u | only_v);
  toggle_against(only_u, both | only_v);
  toggle_against(only_v, both | only_u);
  out.swap_labels(u, v);
  return out;
}

Witness empty_witness(const Graph& g, int k) { return Witness{graph6_encode(g), k, {}}; }

Replay::Replay(Graph g) : graph_(std::move(g)), live_(static_cast<std::size_t>(graph_.n()), 1), live_count_(graph_.n()) {}

void Replay::pivot(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= graph_.n() || v >= graph_.n()) throw PreconditionError("pivot: vertex out of range");
  if (!live_[u] || !live_[v]) throw PreconditionError("pivot: vertex already deleted");
  graph_ = pivotminor::pivot(graph_, u, v);
}

void Replay::remove(Vertex v) {
  if (v < 0 || v >= graph_.n()) throw PreconditionError("delete: vertex " + std::to_string(v) + " out of range");
  if (!live_[v]) throw PreconditionError("delete: vertex " + std::to_string(v) + " already deleted");
  graph_.isolate(v);
  live_[v] = 0;
  --live_count_;
}

void Replay::apply(const Step& step) {
  if (step.is_pivot()) {
    pivot(step.u, step.v);
  } else {
    remove(step.u);
  }
}

void Replay::keep_only(std::span<const Vertex> keep) {
  std::vector<char> wanted(live_.size(), 0);
  for (Vertex v : keep) wanted.at(static_cast<std::size_t>(v)) = 1;
  for (Vertex v = 0; v < graph_.n(); ++v) {
    if (live_[v] && !wanted[v]) remove(v);
  }
}

VertexSet Replay::live_vertices() const {
  VertexSet out;
  for (Vertex v = 0; v < graph_.n(); ++v) {
    if (live_[v]) out.push_back(v);
  }
  return out;
}

Subgraph Replay::current() const {
  const VertexSet alive = live_vertices();
  if (alive.empty()) return Subgraph{Graph(0), {}};
  return induced_subgraph(graph_, alive);
}

Subgraph apply_witness(const Graph& g, const Witness& w) {
  if (fingerprint(g) != fingerprint(graph6_decode(w.source))) {
    throw PreconditionError("witness fingerprint " + fingerprint(graph6_decode(w.source)) +
                            " does not match graph fingerprint " + fingerprint(g));
  }
  Replay replay(g);
  for (std::size_t i = 0; i < w.ops.size(); ++i) {
    try {
      replay.apply(w.ops[i]);
    } catch (const PreconditionError& e) {
      throw WitnessError(i, e.what());
    }
  }
  return replay.current();
}

Verdict verify_ck_witness(const Graph& g, const Witness& w) {
  Subgraph result;
  try {
    result = apply_witness(g, w);
  } catch (const Error& e) {
    return Verdict::fail(e.what());
  }
  if (result.graph.n() != w.k) {
    return Verdict::fail("replay leaves " + std::to_string(result.graph.n()) + " vertices, expected " +
                         std::to_string(w.k));
  }
  if (!is_cycle_graph(result.graph, w.k)) {
    return Verdict::fail("replay result is not a cycle on " + std::to_string(w.k) + " vertices");
  }
  return Verdict::pass();
}

Witness normalize_witness(const Witness& w) {
  const Graph source = graph6_decode(w.source);
  Replay replay(source);
  for (std::size_t i = 0; i < w.ops.size(); ++i) {
    try {
      replay.apply(w.ops[i]);
    } catch (const PreconditionError& e) {
      throw WitnessError(i, e.what());
    }
  }
  Witness out{w.source, w.k, {}};
  std::copy_if(w.ops.begin(), w.ops.end(), std::back_inserter(out.ops), [](const Step& s) { return s.is_pivot(); });
  std::copy_if(w.ops.begin(), w.ops.end(), std::back_inserter(out.ops), [](const Step& s) { return !s.is_pivot(); });
  return out;
}

std::optional<VertexSet> find_induced_cycle(const Graph& g, int k) {
  if (k < 3) throw PreconditionError("find_induced_cycle: k must be at least 3");
  const int n = g.n();
  if (k > n) return std::nullopt;
  if (n > 64) throw CapExceeded("find_induced_cycle: supports at most 64 vertices");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) adj[v] |= std::uint64_t{1} << w;
  }
  // Grow induced paths from their smallest vertex; close when the last vertex
  // sees the first one and the length is k.
  VertexSet path;
  std::optional<VertexSet> found;
  std::function<void(std::uint64_t)> extend = [&](std::uint64_t used) {
    if (found) return;
    const Vertex first = path.front();
    const Vertex last = path.back();
    const int len = static_cast<int>(path.size());
    if (len == k) {
      if (adj[last] >> first & 1) found = path;
      return;
    }
    std::uint64_t interior = used & ~(std::uint64_t{1} << last);
    if (len >= 2) interior &= ~(std::uint64_t{1} << first);
    for (Vertex next : g.neighbors(last)) {
      if (next <= first || (used >> next & 1)) continue;
      if (adj[next] & interior) continue;
      // The closing edge to `first` may only appear on the final vertex.
      if (len >= 2 && len + 1 < k && (adj[next] >> first & 1)) continue;
      path.push_back(next);
      extend(used | std::uint64_t{1} << next);
      path.pop_back();
      if (found) return;
    }
  };
  for (Vertex start = 0; start < n && !found; ++start) {
    path = {start};
    extend(std::uint64_t{1} << start);
  }
  return found;
}

OrbitIndex::OrbitIndex(const Graph& seed, const OrbitOptions& options) : options_(options) {
  if (seed.n() > options.max_vertices) {
    throw CapExceeded("pivot orbit: graph has " + std::to_string(seed.n()) + " vertices, cap is " +
                      std::to_string(options.max_vertices));
  }
  insert(seed, canonical_form(seed), 0, Step{});
}

bool OrbitIndex::insert(Graph g, std::string key, std::size_t parent, Step via) {
  if (!seen_.insert(std::move(key)).second) return false;
  members_.push_back(Member{std::move(g), parent, via});
  return true;
}

namespace {

struct Candidate {
  std::string key;
  Graph graph;
  std::size_t parent;
  Step via;
};

void expand(const std::vector<OrbitIndex::Member>& members, std::size_t begin, std::size_t end,
            std::vector<Candidate>& out) {
  for (std::size_t i = begin; i < end; ++i) {
    const Graph& g = members[i].graph;
    for (auto [u, v] : g.edges()) {
      Graph child = pivot(g, u, v);
      std::string key = canonical_form(child);
      out.push_back(Candidate{std::move(key), std::move(child), i, Step::make_pivot(u, v)});
    }
  }
}

}  // namespace

std::optional<std::size_t> OrbitIndex::enumerate(const std::function<bool(const Graph&)>& stop) {
  if (stop && stop(members_.front().graph)) return 0;
  std::size_t level_begin = 0;
  while (level_begin < members_.size()) {
    const std::size_t level_end = members_.size();
    const std::size_t width = level_end - level_begin;
    const int threads = std::max(1, std::min<int>(options_.threads, static_cast<int>(width)));
    std::vector<std::vector<Candidate>> batches(static_cast<std::size_t>(threads));
    if (threads == 1) {
      expand(members_, level_begin, level_end, batches[0]);
    } else {
      std::vector<std::jthread> pool;
      const std::size_t chunk = (width + threads - 1) / threads;
      for (int t = 0; t < threads; ++t) {
        const std::size_t b = level_begin + chunk * t;
        const std::size_t e = std::min(level_end, b + chunk);
        if (b >= e) break;
        pool.emplace_back([this, b, e, &batches, t] { expand(members_, b, e, batches[t]); });
      }
    }
    // Merging in frontier order keeps the result independent of thread count.
    for (auto& batch : batches) {
      for (auto& c : batch) {
        if (!insert(std::move(c.graph), std::move(c.key), c.parent, c.via)) continue;
        const std::size_t idx = members_.size() - 1;
        if (stop && stop(members_[idx].graph)) return idx;
        if (members_.size() >= options_.max_orbit) return std::nullopt;
      }
    }
    level_begin = level_end;
  }
  complete_ = true;
  return std::nullopt;
}

std::vector<Step> OrbitIndex::pivots_to(std::size_t i) const {
  std::vector<Step> out;
  while (i != 0) {
    out.push_back(members_[i].via);
    i = members_[i].parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

OracleResult search_pivot_minor(const Graph& g, int k, const OrbitOptions& options) {
  if (k < 3) throw PreconditionError("pivot-minor oracle: k must be at least 3");
  OrbitIndex orbit(g, options);
  OracleResult result;
  if (k > g.n()) {
    result.complete = true;
    result.orbit_size = 1;
    return result;
  }
  const auto hit = orbit.enumerate([k](const Graph& h) { return find_induced_cycle(h, k).has_value(); });
  result.orbit_size = orbit.size();
  result.complete = orbit.complete();
  if (!hit) return result;

  const Graph& member = orbit.member(*hit).graph;
  const VertexSet cycle = *find_induced_cycle(member, k);
  Witness w = empty_witness(g, k);
  w.ops = orbit.pivots_to(*hit);
  std::vector<char> keep(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : cycle) keep[v] = 1;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!keep[v]) w.ops.push_back(Step::make_delete(v));
  }
  result.found = true;
  result.witness = std::move(w);
  return result;
}

bool has_pivot_minor(const Graph& g, int k, const OrbitOptions& options, Witness* witness) {
  OracleResult r = search_pivot_minor(g, k, options);
  if (!r.found && !r.complete) {
    throw CapExceeded("pivot-minor oracle: orbit cap of " + std::to_string(options.max_orbit) +
                      " reached without a decision");
  }
  if (r.found && witness != nullptr) *witness = *r.witness;
  return r.found;
}

}  // namespace pivotminor
