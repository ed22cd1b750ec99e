#include "pivotminor/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>

#include "pivotminor/constructions.hpp"

namespace pivotminor {

Verdict ConstantsBundle::validate() const {
  if (k < 3) return Verdict::fail("constants: k < 3");
  if (L != antihole_min_length(k)) return Verdict::fail("constants: L does not match k");
  if (!(delta > 0 && delta <= 1)) return Verdict::fail("constants: delta outside (0,1]");
  if (!(4 * alpha <= alpha_hole)) return Verdict::fail("constants: 4*alpha > alpha_hole");
  if (!(alpha < 1.0 / (8 * k))) return Verdict::fail("constants: alpha >= 1/(8k)");
  if (!(eps > 0)) return Verdict::fail("constants: eps must be positive");
  if (!(eps < delta / 12)) return Verdict::fail("constants: eps >= delta/12");
  if (!(eps < (1 - 4 * (k + 3) * alpha) * delta / 240)) return Verdict::fail("constants: eps >= (1-4(k+3)alpha)*delta/240");
  if (!(eps < eps0 * delta / 12)) return Verdict::fail("constants: eps >= eps0*delta/12");
  return Verdict::pass();
}

ConstantsBundle make_constants(int k, double delta) {
  if (k < 3) throw PreconditionError("make_constants: k must be at least 3");
  if (!(delta > 0 && delta <= 1)) throw PreconditionError("make_constants: delta must lie in (0,1]");
  ConstantsBundle c;
  c.k = k;
  c.L = antihole_min_length(k);
  c.alpha_hole = hole_mode_alpha(c.L);
  c.eps0 = kHoleModeEps;
  c.delta = delta;
  c.alpha = 0.5;
  while (!(4 * c.alpha <= c.alpha_hole && c.alpha < 1.0 / (8 * k))) c.alpha /= 2;
  c.eps = 0.99 * std::min({delta / 12, (1 - 4 * (k + 3) * c.alpha) * delta / 240, c.eps0 * delta / 12});
  if (const Verdict v = c.validate(); !v) throw Error("make_constants: " + v.diagnostic);
  return c;
}

namespace {

VertexSet lift(std::span<const Vertex> local, std::span<const Vertex> to_host) {
  VertexSet out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_host[v]);
  return out;
}

PurePair lift(const PurePair& p, std::span<const Vertex> to_host, bool flip) {
  PurePair q{lift(p.a, to_host), lift(p.b, to_host), p.kind};
  std::sort(q.a.begin(), q.a.end());
  std::sort(q.b.begin(), q.b.end());
  if (flip) q.kind = q.kind == PairKind::complete ? PairKind::anticomplete : PairKind::complete;
  return q;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// Everything after the restriction, in the view G' where the restriction is
// sparse. `to_host` maps G' ids to g ids.
struct Stages {
  const Graph& g;
  int k;
  const ConstantsBundle& c;
  bool complement_side;
  RunReport& report;

  void note(std::string line) { report.trace.push_back(std::move(line)); }

  Certificate pair(const PurePair& p, std::span<const Vertex> to_host) const { return lift(p, to_host, complement_side); }

  std::optional<Certificate> run(const Graph& gp, const VertexSet& to_host) {
    const PieceOrPair split = connected_or_purepair(gp);
    if (const auto* pp = std::get_if<PurePair>(&split)) {
      note("connected_or_purepair: components give a pair");
      return pair(*pp, to_host);
    }
    const VertexSet& piece = std::get<VertexSet>(split);
    note("connected_or_purepair: piece of " + std::to_string(piece.size()) + " vertices");
    const Subgraph q = induced_subgraph(gp, piece);
    const VertexSet q_host = lift(q.original, to_host);

    const Skeleton sk = dominating_skeleton(q.graph, 0);
    if (const Verdict v = check_skeleton(q.graph, sk); !v) throw Error("pipeline: skeleton check failed: " + v.diagnostic);
    const SkeletonTree st = skeleton_tree(sk);
    const TreeSplit ts = heavy_path_or_unrelated(st.tree);
    if (const Verdict v = check_tree_split(st.tree, ts); !v) throw Error("pipeline: tree split check failed: " + v.diagnostic);

    if (const auto* un = std::get_if<UnrelatedSets>(&ts)) {
      note("tree split: unrelated sets");
      PurePair p{sk.preimage(lift(un->a, st.vertex)), sk.preimage(lift(un->b, st.vertex)), PairKind::anticomplete};
      return pair(p, q_host);
    }
    const VertexSet path = lift(std::get<RootPath>(ts).nodes, st.vertex);
    note("tree split: root path of " + std::to_string(path.size()) + " vertices");

    Row w(static_cast<std::size_t>(q.graph.n()));
    for (Vertex v : path) {
      w.set(v);
      w |= q.graph.row(v);
    }
    VertexSet wset;
    for (auto v = w.find_first(); v != Row::npos; v = w.find_next(v)) wset.push_back(static_cast<Vertex>(v));
    const Subgraph h = induced_subgraph(q.graph, wset);
    const VertexSet h_host = lift(h.original, q_host);
    VertexSet hpath;
    for (Vertex v : path) hpath.push_back(static_cast<Vertex>(std::lower_bound(wset.begin(), wset.end(), v) - wset.begin()));
    const double hn = h.graph.n();
    note("path neighbourhood: " + std::to_string(h.graph.n()) + " vertices, max degree " + std::to_string(h.graph.max_degree()));

    if (complement_side) {
      const double a = std::max(4 * c.alpha, h.graph.max_degree() / hn);
      const SweepResult r = sweep_hole_mode(h.graph, hpath, c.L, a, c.eps0, {.enforce_constants = false});
      note("hole sweep: " + r.clause);
      if (const auto* hole = std::get_if<Hole>(&r.certificate)) {
        const VertexSet order = lift(hole->order, h_host);
        note("anti-hole of length " + std::to_string(order.size()) + " in g");
        return antihole_extract(g, order, k);
      }
      return pair(std::get<PurePair>(r.certificate), h_host);
    }
    const double a = std::max(4 * c.alpha, h.graph.max_degree() / hn);
    const double e = std::min(0.5, 12 * c.eps / c.delta);
    const SweepResult r = sweep_pivot_mode(h.graph, hpath, k, a, e, {.enforce_constants = false});
    note("pivot sweep: " + r.clause);
    if (const auto* pp = std::get_if<PurePair>(&r.certificate)) return pair(*pp, h_host);
    const Witness& local = std::get<Witness>(r.certificate);
    Witness lifted = empty_witness(g, k);
    Row keep(static_cast<std::size_t>(g.n()));
    for (Vertex v : h_host) keep.set(v);
    for (Vertex v = 0; v < g.n(); ++v)
      if (!keep.test(v)) lifted.ops.push_back(Step::make_delete(v));
    for (const Step& s : local.ops) {
      lifted.ops.push_back(s.is_pivot() ? Step::make_pivot(h_host[s.u], h_host[s.v]) : Step::make_delete(h_host[s.u]));
    }
    return lifted;
  }
};

}  // namespace

RunReport strong_eh_pipeline(const Graph& g, int k, const PipelineOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (g.n() < 2) throw PreconditionError("strong_eh_pipeline: need at least two vertices");
  if (k < 3) throw PreconditionError("strong_eh_pipeline: k must be at least 3");
  RunReport report;
  report.fingerprint = fingerprint(g);
  report.n = g.n();
  report.k = k;
  if (k < 5) report.trace.push_back("k < 5: fan clauses unavailable, run is best-effort");

  const int L = antihole_min_length(k);
  const double ra = options.restriction_alpha > 0 ? options.restriction_alpha : 1.0 / L;
  const Restriction res = restriction_finder(g, ra);
  const double delta = static_cast<double>(res.u.size()) / g.n();
  report.constants = make_constants(k, delta);
  const ConstantsBundle& c = report.constants;
  const bool flip = res.side == Side::complement;
  report.trace.push_back("restriction: side " + std::string(to_string(res.side)) + ", " + std::to_string(res.u.size()) +
                         " vertices, delta " + fmt(delta));

  const Graph view = flip ? complement(g) : g;
  Subgraph gp = induced_subgraph(view, res.u);
  // restriction_finder already checks its degree bound; this only guards a future finder that does not.
  if (gp.graph.max_degree() > ra * gp.graph.n() + 1e-9) {
    VertexSet all(res.u.size());
    std::iota(all.begin(), all.end(), 0);
    const TrimResult t = stable_trim(gp.graph, all, ra / 2);
    report.trace.push_back("stable trim: kept " + std::to_string(t.kept.size()));
    const VertexSet kept_host = lift(t.kept, gp.original);
    gp = Subgraph{induced_subgraph(gp.graph, t.kept).graph, kept_host};
  }

  Stages stages{g, k, c, flip, report};
  std::optional<Certificate> cert;
  try {
    cert = stages.run(gp.graph, gp.original);
  } catch (const SweepFailure& e) {
    report.trace.push_back(std::string("sweep failed: ") + e.what());
  } catch (const PreconditionError& e) {
    report.trace.push_back(std::string("stage precondition failed: ") + e.what());
  }
  if (!cert && c.eps * g.n() <= 1) {
    report.trace.push_back("fallback: eps*n <= 1, trivial pair");
    cert = PurePair{{0}, {1}, g.adjacent(0, 1) ? PairKind::complete : PairKind::anticomplete};
  }

  if (cert) {
    if (const Verdict v = verify_certificate(g, *cert, L); !v) throw Error("strong_eh_pipeline: unverified certificate: " + v.diagnostic);
    report.ok = true;
    if (const auto* pp = std::get_if<PurePair>(&*cert)) {
      report.frac_a = static_cast<double>(pp->a.size()) / g.n();
      report.frac_b = static_cast<double>(pp->b.size()) / g.n();
    } else if (const auto* w = std::get_if<Witness>(&*cert)) {
      report.witness_ops = static_cast<int>(w->ops.size());
    }
    report.certificate = std::move(cert);
  } else {
    report.diagnostic = "no certificate: the restriction was too small or the sweep constants were not met";
  }
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace pivotminor
