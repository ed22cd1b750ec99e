#include "pivotminor/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace pivotminor {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw PreconditionError("graph: negative vertex count");
  rows_.assign(static_cast<std::size_t>(n), Row(static_cast<std::size_t>(n)));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw PreconditionError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
  }
}

VertexSet Graph::neighbors(Vertex v) const {
  VertexSet out;
  const Row& r = rows_[v];
  for (auto i = r.find_first(); i != Row::npos; i = r.find_next(i)) out.push_back(static_cast<Vertex>(i));
  return out;
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const Row& r : rows_) twice += r.count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    const Row& r = rows_[u];
    for (auto v = r.find_next(static_cast<std::size_t>(u)); v != Row::npos; v = r.find_next(v)) {
      out.emplace_back(u, static_cast<Vertex>(v));
    }
  }
  return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw PreconditionError("graph: loops are not allowed");
  rows_[u].set(v);
  rows_[v].set(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u].reset(v);
  rows_[v].reset(u);
}

void Graph::toggle_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw PreconditionError("graph: loops are not allowed");
  rows_[u].flip(v);
  rows_[v].flip(u);
}

void Graph::swap_labels(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return;
  std::swap(rows_[u], rows_[v]);
  for (Row& r : rows_) {
    const bool bu = r.test(u);
    const bool bv = r.test(v);
    r.set(u, bv);
    r.set(v, bu);
  }
}

void Graph::isolate(Vertex v) {
  check_vertex(v);
  const Row& r = rows_[v];
  for (auto w = r.find_first(); w != Row::npos; w = r.find_next(w)) rows_[w].reset(v);
  rows_[v].reset();
}

Graph complement(const Graph& g) {
  Graph out(g.n());
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

Graph partial_complement(const Graph& g, std::span<const Vertex> s) {
  const VertexSet members = checked_vertex_set(g, s);
  Graph out = g;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) out.toggle_edge(members[i], members[j]);
  }
  return out;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) throw PreconditionError("induced_subgraph: empty vertex set");
  for (Vertex v : s) {
    if (v < 0 || v >= g.n()) throw PreconditionError("induced_subgraph: vertex out of range");
  }
  Subgraph out{Graph(static_cast<int>(s.size())), VertexSet(s.begin(), s.end())};
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : s) {
    if (seen[v]) throw PreconditionError("induced_subgraph: repeated vertex " + std::to_string(v));
    seen[v] = 1;
  }
  const int m = static_cast<int>(s.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (g.adjacent(s[i], s[j])) out.graph.add_edge(i, j);
    }
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (Vertex start = 0; start < g.n(); ++start) {
    if (seen[start]) continue;
    VertexSet comp{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      const Row& r = g.row(comp[head]);
      for (auto w = r.find_first(); w != Row::npos; w = r.find_next(w)) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(static_cast<Vertex>(w));
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.n() <= 1 || components(g).size() == 1; }

namespace {

void require_distinct(const Graph& g, std::span<const Vertex> order, const char* what) {
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : order) {
    if (v < 0 || v >= g.n()) throw PreconditionError(std::string(what) + ": vertex out of range");
    if (seen[v]) throw PreconditionError(std::string(what) + ": repeated vertex " + std::to_string(v));
    seen[v] = 1;
  }
}

}  // namespace

bool is_induced_path(const Graph& g, std::span<const Vertex> order) {
  if (order.empty()) throw PreconditionError("is_induced_path: empty sequence");
  require_distinct(g, order, "is_induced_path");
  const std::size_t m = order.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (g.adjacent(order[i], order[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

bool is_induced_cycle(const Graph& g, std::span<const Vertex> order) {
  if (order.size() < 3) throw PreconditionError("is_induced_cycle: need at least 3 vertices");
  require_distinct(g, order, "is_induced_cycle");
  const std::size_t m = order.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const bool consecutive = (j == i + 1) || (i == 0 && j == m - 1);
      if (g.adjacent(order[i], order[j]) != consecutive) return false;
    }
  }
  return true;
}

bool is_cycle_graph(const Graph& g, int k) {
  if (k < 3 || g.n() != k) return false;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return is_connected(g);
}

VertexSet cycle_order(const Graph& g) {
  if (!is_cycle_graph(g, g.n())) throw PreconditionError("cycle_order: graph is not a single cycle");
  VertexSet order{0};
  const VertexSet start = g.neighbors(0);
  Vertex prev = 0;
  Vertex cur = start.front();
  while (cur != 0) {
    order.push_back(cur);
    const VertexSet nb = g.neighbors(cur);
    const Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return order;
}

bool small_isomorphic(const Graph& g, const Graph& h, int cap) {
  if (g.n() > cap || h.n() > cap) {
    throw CapExceeded("small_isomorphic: graphs larger than " + std::to_string(cap) + " vertices");
  }
  if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g) == canonical_form(h);
}

namespace {

void put_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  std::string out;
  put_size(out, static_cast<std::uint64_t>(g.n()));
  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.n(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

Graph graph6_decode(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw PreconditionError("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) {
      throw PreconditionError("graph6: character out of range (code " +
                              std::to_string(static_cast<unsigned char>(c)) + ")");
    }
  }
  std::size_t pos = 0;
  std::uint64_t n = 0;
  auto take = [&](int count) {
    if (pos + static_cast<std::size_t>(count) > text.size()) throw PreconditionError("graph6: truncated size header");
    std::uint64_t value = 0;
    for (int i = 0; i < count; ++i) value = (value << 6) | static_cast<std::uint64_t>(text[pos++] - 63);
    return value;
  };
  if (text[0] != '~') {
    n = take(1);
  } else if (text.size() > 1 && text[1] == '~') {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }
  if (n > 1'000'000) throw PreconditionError("graph6: vertex count too large");
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected) {
    throw PreconditionError("graph6: expected " + std::to_string(expected) + " data bytes, got " +
                            std::to_string(text.size() - pos));
  }
  Graph g(static_cast<int>(n));
  std::uint64_t bit = 0;
  for (Vertex j = 1; j < g.n(); ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int byte = text[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - 63;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw PreconditionError("graph6: nonzero padding bits");
  }
  return g;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw PreconditionError("edge list: missing header");
  long long n = -1;
  long long m = -1;
  {
    std::istringstream header(line);
    if (!(header >> n >> m) || n < 0 || m < 0) throw PreconditionError("edge list: malformed header '" + line + "'");
  }
  Graph g(static_cast<int>(n));
  for (long long e = 0; e < m; ++e) {
    if (!next_line()) throw PreconditionError("edge list: expected " + std::to_string(m) + " edges");
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    if (!(row >> u >> v)) throw PreconditionError("edge list: malformed edge '" + line + "'");
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw PreconditionError("edge list: invalid edge '" + line + "'");
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << g.n() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

std::string fingerprint(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : graph6_encode(g)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

VertexSet checked_vertex_set(const Graph& g, std::span<const Vertex> s) {
  VertexSet out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 0 || out[i] >= g.n()) throw PreconditionError("vertex set: id " + std::to_string(out[i]) + " out of range");
    if (i > 0 && out[i] == out[i - 1]) throw PreconditionError("vertex set: repeated id " + std::to_string(out[i]));
  }
  return out;
}

std::string_view to_string(PairKind kind) { return kind == PairKind::complete ? "complete" : "anticomplete"; }

Verdict verify_pure_pair(const Graph& g, const PurePair& pair) {
  if (pair.a.empty() || pair.b.empty()) return Verdict::fail("pure pair: a side is empty");
  std::vector<char> side(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : pair.a) {
    if (v < 0 || v >= g.n()) return Verdict::fail("pure pair: vertex " + std::to_string(v) + " out of range");
    if (side[v]) return Verdict::fail("pure pair: vertex " + std::to_string(v) + " repeated in A");
    side[v] = 1;
  }
  for (Vertex v : pair.b) {
    if (v < 0 || v >= g.n()) return Verdict::fail("pure pair: vertex " + std::to_string(v) + " out of range");
    if (side[v] == 1) return Verdict::fail("pure pair: vertex " + std::to_string(v) + " in both sides");
    if (side[v] == 2) return Verdict::fail("pure pair: vertex " + std::to_string(v) + " repeated in B");
    side[v] = 2;
  }
  const bool want = pair.kind == PairKind::complete;
  for (Vertex u : pair.a) {
    for (Vertex v : pair.b) {
      if (g.adjacent(u, v) != want) {
        return Verdict::fail(std::string("pure pair: ") + (want ? "missing edge " : "cross edge ") + std::to_string(u) +
                             "-" + std::to_string(v) + " violates kind=" + std::string(to_string(pair.kind)));
      }
    }
  }
  return Verdict::pass();
}

}  // namespace pivotminor
