#include "pivotminor/extraction.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "pivotminor/constructions.hpp"

namespace pivotminor {

Verdict verify_certificate(const Graph& g, const Certificate& c, int min_hole) {
  if (const auto* pp = std::get_if<PurePair>(&c)) return verify_pure_pair(g, *pp);
  if (const auto* w = std::get_if<Witness>(&c)) return verify_ck_witness(g, *w);
  const Hole& h = std::get<Hole>(c);
  const int need = std::max(5, min_hole);
  if (static_cast<int>(h.order.size()) < need) {
    return Verdict::fail("hole: length " + std::to_string(h.order.size()) + " is below " + std::to_string(need));
  }
  try {
    if (!is_induced_cycle(g, h.order)) return Verdict::fail("hole: order is not an induced cycle");
  } catch (const PreconditionError& e) {
    return Verdict::fail(std::string("hole: ") + e.what());
  }
  return Verdict::pass();
}

std::string_view certificate_type(const Certificate& c) {
  switch (c.index()) {
    case 0: return "pure_pair";
    case 1: return "witness";
    default: return "hole";
  }
}

Verdict check_dominating_path(const Graph& g, std::span<const Vertex> path) {
  if (path.empty()) return Verdict::fail("path: empty");
  try {
    if (!is_induced_path(g, path)) return Verdict::fail("path: not an induced path");
  } catch (const PreconditionError& e) {
    return Verdict::fail(std::string("path: ") + e.what());
  }
  Row seen(static_cast<std::size_t>(g.n()));
  for (Vertex v : path) {
    seen.set(v);
    seen |= g.row(v);
  }
  if (!seen.all()) return Verdict::fail("path: vertex " + std::to_string(static_cast<Vertex>((~seen).find_first())) + " is not dominated");
  return Verdict::pass();
}

namespace {

// Path positions (1-based) and the sorted path-neighbour positions of every
// off-path vertex, for one orientation of the path.
struct Layout {
  VertexSet path;
  int s = 0;
  std::vector<int> pos;              // 0 for off-path vertices
  std::vector<std::vector<int>> np;  // empty for path vertices

  Layout(const Graph& g, VertexSet p) : path(std::move(p)), s(static_cast<int>(path.size())) {
    pos.assign(static_cast<std::size_t>(g.n()), 0);
    np.resize(static_cast<std::size_t>(g.n()));
    for (int i = 0; i < s; ++i) pos[path[i]] = i + 1;
    for (int i = 0; i < s; ++i) {
      for (Vertex u : g.neighbors(path[i])) {
        if (pos[u] == 0) np[u].push_back(i + 1);
      }
    }
  }

  Vertex at(int position) const { return path[position - 1]; }
  bool off(Vertex v) const { return pos[v] == 0; }
  int lo(Vertex v) const { return np[v].front(); }
  int hi(Vertex v) const { return np[v].back(); }

  /// Path vertices at positions a..b, inclusive and in increasing order.
  VertexSet segment(int a, int b) const { return VertexSet(path.begin() + (a - 1), path.begin() + b); }
};

Layout reversed(const Graph& g, const Layout& f) { return Layout(g, VertexSet(f.path.rbegin(), f.path.rend())); }

VertexSet join(std::initializer_list<VertexSet> parts) {
  VertexSet out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

struct Sweep {
  const Graph& g;
  int k;  // target cycle length (pivot mode) or minimum hole length (hole mode)
  Layout fwd;
  Layout rev;
  int need;  // required pure-pair side size, ⌈eps·n⌉ and at least 1
  double eps_n;

  Sweep(const Graph& graph, std::span<const Vertex> path, int k_, double eps)
      : g(graph),
        k(k_),
        fwd(graph, VertexSet(path.begin(), path.end())),
        rev(reversed(graph, fwd)),
        need(std::max(1, static_cast<int>(std::ceil(eps * graph.n() - 1e-9)))),
        eps_n(eps * graph.n()) {}

  Witness cycle_witness(const VertexSet& cycle) const {
    const int len = static_cast<int>(cycle.size());
    if (len < k || (len - k) % 2 != 0) {
      throw Error("sweep: cycle of length " + std::to_string(len) + " handed to the reduction for k=" + std::to_string(k));
    }
    return cycle_reduce(g, cycle, k);
  }

  Witness fan_witness(Vertex center, const VertexSet& main_path) const {
    if (k < 5) throw SweepFailure("sweep: a fan clause fired but fan extraction needs k >= 5 (k=" + std::to_string(k) + ")");
    const FanDescriptor f = classify_fan(g, center, main_path);
    if (!f.strongly_k_good(k)) throw Error("sweep: constructed fan is not strongly k-good");
    return fan_extract(f, k);
  }

  std::optional<PurePair> grouped(const std::vector<VertexSet>& parts) const {
    PurePair p;
    p.kind = PairKind::anticomplete;
    for (const VertexSet& c : parts) {
      VertexSet& into = static_cast<int>(p.a.size()) >= need ? p.b : p.a;
      into.insert(into.end(), c.begin(), c.end());
    }
    if (static_cast<int>(p.a.size()) < need || static_cast<int>(p.b.size()) < need) return std::nullopt;
    std::sort(p.a.begin(), p.a.end());
    std::sort(p.b.begin(), p.b.end());
    return p;
  }

  std::vector<VertexSet> parts_of(const VertexSet& set) const {
    if (set.empty()) return {};
    const Subgraph sub = induced_subgraph(g, set);
    std::vector<VertexSet> out;
    for (const VertexSet& c : components(sub.graph)) {
      VertexSet host;
      for (Vertex v : c) host.push_back(sub.original[v]);
      std::sort(host.begin(), host.end());
      out.push_back(std::move(host));
    }
    return out;
  }

  std::optional<PurePair> path_halves() const {
    if (static_cast<double>(fwd.s) < 2 * eps_n + 2) return std::nullopt;
    const int half = (fwd.s - 1) / 2;
    if (half < need) return std::nullopt;
    return PurePair{fwd.segment(1, half), fwd.segment(fwd.s - half + 1, fwd.s), PairKind::anticomplete};
  }
};

SweepResult finish(const Sweep& sw, Certificate c, std::string clause, int min_hole = 5) {
  if (const Verdict v = verify_certificate(sw.g, c, min_hole); !v) throw Error("sweep: " + clause + " produced an invalid certificate: " + v.diagnostic);
  if (const auto* pp = std::get_if<PurePair>(&c)) {
    if (static_cast<int>(std::min(pp->a.size(), pp->b.size())) < sw.need) throw Error("sweep: " + clause + " produced an undersized pair");
  }
  return SweepResult{std::move(c), std::move(clause)};
}

void check_common(const Graph& g, std::span<const Vertex> path, double alpha, double eps) {
  if (g.n() < 2) throw PreconditionError("sweep: need at least two vertices");
  if (!(alpha > 0) || !(eps > 0)) throw PreconditionError("sweep: alpha and eps must be positive");
  if (const Verdict v = check_dominating_path(g, path); !v) throw PreconditionError("sweep: " + v.diagnostic);
  if (g.max_degree() > alpha * g.n() + 1e-9) {
    throw PreconditionError("sweep: max degree " + std::to_string(g.max_degree()) + " exceeds alpha*n = " +
                            std::to_string(alpha * g.n()));
  }
}

// Phase 1, pivot mode: the witness clauses that can fire at some window,
// checked for all windows at once.
std::optional<SweepResult> pivot_witness_scan(const Sweep& sw) {
  const Graph& g = sw.g;
  const Layout& P = sw.fwd;
  const int k = sw.k;
  const int n = g.n();

  // B-parity: a window fits strictly between consecutive neighbours a < b and b - a ≡ k.
  for (Vertex u = 0; u < n; ++u) {
    if (!P.off(u)) continue;
    const auto& np = P.np[u];
    for (std::size_t j = 0; j + 1 < np.size(); ++j) {
      const int a = np[j];
      const int b = np[j + 1];
      if (b - a >= k + 1 && (b - a - k) % 2 == 0) {
        return finish(sw, sw.cycle_witness(join({{u}, P.segment(a, b)})), "B parity cycle");
      }
    }
  }

  // Same-side parity: beyond such a gap, the first pair of consecutive
  // neighbours at odd distance closes a strongly k-good fan.
  for (Vertex u = 0; u < n; ++u) {
    if (!P.off(u)) continue;
    const auto& np = P.np[u];
    for (std::size_t j = 0; j + 1 < np.size(); ++j) {
      const int a = np[j];
      const int b = np[j + 1];
      if (b - a < k + 1) continue;
      for (std::size_t t = j + 1; t + 1 < np.size(); ++t) {
        if ((np[t + 1] - np[t]) % 2 == 1) return finish(sw, sw.fan_witness(u, P.segment(a, np[t + 1])), "same-side parity fan");
      }
      for (std::size_t t = j; t-- > 0;) {
        if ((np[t + 1] - np[t]) % 2 == 1) return finish(sw, sw.fan_witness(u, P.segment(np[t], b)), "same-side parity fan");
      }
    }
  }

  // An edge from C^j to D^j at some window: u entirely before, v entirely after.
  for (auto [x, y] : g.edges()) {
    if (!P.off(x) || !P.off(y)) continue;
    for (auto [u, v] : {Edge{x, y}, Edge{y, x}}) {
      const int gap = P.lo(v) - P.hi(u);
      if (gap >= k + 1 && (gap - k - 1) % 2 == 0) {
        return finish(sw, sw.cycle_witness(join({{u}, P.segment(P.hi(u), P.lo(v)), {v}})), "C-D edge cycle");
      }
    }
  }
  return std::nullopt;
}

// Large-B edge case in one orientation: x, y ∈ B' adjacent, mm(x).first < mm(y).first.
Certificate b_edge_certificate(const Sweep& sw, const Layout& V, Vertex x, Vertex y, std::pair<int, int> mx,
                               std::pair<int, int> my) {
  if (mx.second >= my.second) return sw.fan_witness(y, join({V.segment(my.first, mx.second), {x}}));
  return sw.cycle_witness(join({V.segment(my.first, mx.second), {x, y}}));
}

// Mixed-vertex case in one orientation: u has every path neighbour before v's and v''s.
Certificate mixed_certificate(const Sweep& sw, const Layout& V, Vertex u, Vertex v, Vertex v2) {
  const int mu = V.hi(u);
  const int mv = V.lo(v);
  const int mv2 = V.lo(v2);
  for (int ell : V.np[v]) {
    if ((ell - mv) % 2 == 1) return sw.fan_witness(v, join({{u}, V.segment(mu, ell)}));
  }
  if (mv <= mv2) return sw.fan_witness(v, join({{u}, V.segment(mu, mv2), {v2}}));
  return sw.cycle_witness(join({{u}, V.segment(mu, mv2), {v2, v}}));
}

}  // namespace

SweepState build_sweep_state(const Graph& g, std::span<const Vertex> path, int i, int width) {
  const int s = static_cast<int>(path.size());
  if (width < 1) throw PreconditionError("sweep state: width must be positive");
  if (i < 1 || i > s - width + 1) {
    throw PreconditionError("sweep state: window index " + std::to_string(i) + " outside 1.." + std::to_string(s - width + 1));
  }
  const Layout P(g, VertexSet(path.begin(), path.end()));
  SweepState st;
  st.i = i;
  st.s = s;
  st.width = width;
  st.m_minus.assign(static_cast<std::size_t>(g.n()), 0);
  st.m_plus.assign(static_cast<std::size_t>(g.n()), 0);
  const int last = i + width - 1;
  for (Vertex u = 0; u < g.n(); ++u) {
    if (!P.off(u)) continue;
    const auto& np = P.np[u];
    if (np.empty()) throw PreconditionError("sweep state: vertex " + std::to_string(u) + " is not dominated by the path");
    const auto first_in = std::lower_bound(np.begin(), np.end(), i);
    if (first_in != np.begin()) st.m_minus[u] = *(first_in - 1);
    const auto after = std::upper_bound(np.begin(), np.end(), last);
    if (after != np.end()) st.m_plus[u] = *after;
    const bool in_window = first_in != np.end() && *first_in <= last;
    if (in_window) {
      st.a.push_back(u);
    } else if (st.m_minus[u] && st.m_plus[u]) {
      st.b.push_back(u);
    } else if (st.m_minus[u]) {
      st.c[st.m_minus[u] % 2 == 1 ? 0 : 1].push_back(u);
    } else {
      st.d[(st.m_plus[u] - width) % 2 == 0 ? 0 : 1].push_back(u);
    }
  }
  std::size_t total = st.a.size() + st.b.size() + static_cast<std::size_t>(s);
  for (int j = 0; j < 2; ++j) total += st.c[j].size() + st.d[j].size();
  if (total != static_cast<std::size_t>(g.n())) throw Error("sweep state: classes do not partition the vertex set");
  return st;
}

SweepResult sweep_pivot_mode(const Graph& g, std::span<const Vertex> path, int k, double alpha, double eps,
                             const SweepOptions& options) {
  if (k < 3) throw PreconditionError("sweep_pivot_mode: k must be at least 3");
  check_common(g, path, alpha, eps);
  if (options.enforce_constants) {
    if (!(alpha < 1.0 / (2 * k))) throw PreconditionError("sweep_pivot_mode: need alpha < 1/(2k)");
    if (!(eps <= (1 - (k + 3) * alpha) / 20)) throw PreconditionError("sweep_pivot_mode: need eps <= (1-(k+3)alpha)/20");
  }
  const Sweep sw(g, path, k, eps);
  const int n = g.n();
  const Layout& P = sw.fwd;

  if (auto hit = pivot_witness_scan(sw)) return *hit;
  if (auto halves = sw.path_halves()) return finish(sw, *halves, "path halves");
  if (sw.eps_n <= 1) {
    return finish(sw, PurePair{{0}, {1}, g.adjacent(0, 1) ? PairKind::complete : PairKind::anticomplete}, "trivial pair");
  }
  const int windows = P.s - k + 1;
  if (windows < 1) throw SweepFailure("sweep_pivot_mode: path has " + std::to_string(P.s) + " vertices, fewer than k");

  // f(i) = |C_i¹| + |C_i²| counts off-path vertices whose last path neighbour is before i.
  std::vector<int> last_count(static_cast<std::size_t>(P.s) + 2, 0);
  for (Vertex u = 0; u < n; ++u) {
    if (P.off(u)) ++last_count[P.hi(u)];
  }
  int istar = -1;
  for (int i = 1, f = 0; i <= windows; ++i) {
    if (i > 1) f += last_count[i - 1];
    if (f >= 6 * sw.eps_n) {
      istar = i;
      break;
    }
  }
  if (istar < 0) throw SweepFailure("sweep_pivot_mode: f(i) never reaches 6*eps*n");
  const SweepState st = build_sweep_state(g, path, istar, k);
  auto mm = [&](Vertex v) { return std::pair{st.m_minus[v], st.m_plus[v]}; };
  auto mm_rev = [&](Vertex v) { return std::pair{P.s + 1 - st.m_plus[v], P.s + 1 - st.m_minus[v]}; };

  // A large B_i.
  if (static_cast<double>(st.b.size()) >= 2 * (alpha + 2 * eps) * n) {
    VertexSet odd;
    VertexSet even;
    for (Vertex v : st.b) (st.m_minus[v] % 2 == 1 ? odd : even).push_back(v);
    const VertexSet& bp = odd.size() >= even.size() ? odd : even;
    for (std::size_t x = 0; x < bp.size(); ++x) {
      for (std::size_t y = x + 1; y < bp.size(); ++y) {
        Vertex u = bp[x];
        Vertex v = bp[y];
        if (!g.adjacent(u, v) || mm(u) == mm(v)) continue;
        if (mm(u).first != mm(v).first) {
          if (mm(u).first > mm(v).first) std::swap(u, v);
          return finish(sw, b_edge_certificate(sw, P, u, v, mm(u), mm(v)), "B edge (forward)");
        }
        if (mm_rev(u).first > mm_rev(v).first) std::swap(u, v);
        return finish(sw, b_edge_certificate(sw, sw.rev, u, v, mm_rev(u), mm_rev(v)), "B edge (reversed)");
      }
    }
    if (auto pair = sw.grouped(sw.parts_of(bp))) return finish(sw, *pair, "B component grouping");
  }

  // Pick the parity classes.
  for (int j = 0; j < 2; ++j) {
    if (static_cast<int>(st.c[j].size()) >= sw.need && static_cast<int>(st.d[j].size()) >= sw.need) {
      return finish(sw, PurePair{st.c[j], st.d[j], PairKind::anticomplete}, "C-D same-parity pair");
    }
  }
  auto score = [&](int j) { return std::min(st.c[j].size(), st.d[1 - j].size()); };
  const int jstar = score(0) >= score(1) ? 0 : 1;
  const VertexSet& cs = st.c[jstar];
  const VertexSet& ds = st.d[1 - jstar];
  if (cs.empty() || ds.empty()) throw SweepFailure("sweep_pivot_mode: no usable C/D classes at the chosen window");

  // A vertex with mixed adjacency to a component on the other side.
  const auto cparts = sw.parts_of(cs);
  const auto dparts = sw.parts_of(ds);
  auto find_mixed = [&](const VertexSet& side, const std::vector<VertexSet>& other, const Layout& view) -> std::optional<Certificate> {
    for (Vertex u : side) {
      for (const VertexSet& comp : other) {
        for (Vertex v : comp) {
          if (!g.adjacent(u, v)) continue;
          for (Vertex v2 : comp) {
            if (g.adjacent(v, v2) && !g.adjacent(u, v2)) return mixed_certificate(sw, view, u, v, v2);
          }
        }
      }
    }
    return std::nullopt;
  };
  if (auto c = find_mixed(cs, dparts, P)) return finish(sw, *c, "mixed vertex (forward)");
  if (auto c = find_mixed(ds, cparts, sw.rev)) return finish(sw, *c, "mixed vertex (reversed)");

  // Every component pair is pure now.
  auto big = [&](const std::vector<VertexSet>& parts) -> const VertexSet* {
    for (const auto& p : parts) {
      if (static_cast<int>(p.size()) >= sw.need) return &p;
    }
    return nullptr;
  };
  const VertexSet* bc = big(cparts);
  const VertexSet* bd = big(dparts);
  if (bc && bd) {
    const PairKind kind = g.adjacent(bc->front(), bd->front()) ? PairKind::complete : PairKind::anticomplete;
    return finish(sw, PurePair{*bc, *bd, kind}, "component pair");
  }
  if (!bc) {
    if (auto pair = sw.grouped(cparts)) return finish(sw, *pair, "C component grouping");
  }
  if (!bd) {
    if (auto pair = sw.grouped(dparts)) return finish(sw, *pair, "D component grouping");
  }
  throw SweepFailure("sweep_pivot_mode: no clause produced a certificate (constants not met)");
}

double hole_mode_alpha(int L) { return 1.0 / (8.0 * (L + 2)); }

SweepResult sweep_hole_mode(const Graph& g, std::span<const Vertex> path, int L, double alpha, double eps,
                            const SweepOptions& options) {
  if (L < 5) throw PreconditionError("sweep_hole_mode: L must be at least 5");
  check_common(g, path, alpha, eps);
  if (options.enforce_constants && !((L - 1) * alpha + 6 * eps <= 0.5)) {
    throw PreconditionError("sweep_hole_mode: constants infeasible, need (L-1)*alpha + 6*eps <= 1/2");
  }
  const Sweep sw(g, path, L, eps);
  const Layout& P = sw.fwd;
  const int n = g.n();

  for (Vertex u = 0; u < n; ++u) {
    if (!P.off(u)) continue;
    const auto& np = P.np[u];
    for (std::size_t j = 0; j + 1 < np.size(); ++j) {
      if (np[j + 1] - np[j] >= L - 1) return finish(sw, Hole{join({{u}, P.segment(np[j], np[j + 1])})}, "B hole", L);
    }
  }
  for (auto [x, y] : g.edges()) {
    if (!P.off(x) || !P.off(y)) continue;
    for (auto [u, v] : {Edge{x, y}, Edge{y, x}}) {
      if (P.lo(v) - P.hi(u) >= L - 1) return finish(sw, Hole{join({{u}, P.segment(P.hi(u), P.lo(v)), {v}})}, "C-D edge hole", L);
    }
  }

  if (auto halves = sw.path_halves()) return finish(sw, *halves, "path halves", L);
  if (sw.eps_n <= 1) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!g.adjacent(u, v)) return finish(sw, PurePair{{u}, {v}, PairKind::anticomplete}, "trivial pair", L);
      }
    }
    throw SweepFailure("sweep_hole_mode: complete graph has no anticomplete pair");
  }
  const int width = L - 2;
  for (int i = 1; i <= P.s - width + 1; ++i) {
    const SweepState st = build_sweep_state(g, path, i, width);
    const VertexSet cs = join({st.c[0], st.c[1]});
    const VertexSet ds = join({st.d[0], st.d[1]});
    if (static_cast<int>(cs.size()) >= sw.need && static_cast<int>(ds.size()) >= sw.need) {
      PurePair p{cs, ds, PairKind::anticomplete};
      std::sort(p.a.begin(), p.a.end());
      std::sort(p.b.begin(), p.b.end());
      return finish(sw, p, "C-D pair", L);
    }
  }
  throw SweepFailure("sweep_hole_mode: no window separates eps*n vertices on both sides (constants not met)");
}

}  // namespace pivotminor
