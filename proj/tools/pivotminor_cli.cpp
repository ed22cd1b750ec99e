// Command-line front end. Exit codes: 0 success / verified, 1 verification
// failure, 2 pipeline failure or no witness found, 3 usage error.

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "pivotminor/constructions.hpp"
#include "pivotminor/generators.hpp"
#include "pivotminor/serialize.hpp"

using namespace pivotminor;

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kPipelineFailed = 2;
constexpr int kUsage = 3;

struct UsageError : Error {
  using Error::Error;
};

std::string slurp(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

Graph read_graph(const std::string& path, const std::string& format) {
  const std::string text = slurp(path);
  if (format == "edgelist") {
    std::istringstream in(text);
    return read_edge_list(in);
  }
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) return graph6_decode(line);
  }
  throw UsageError("'" + path + "' holds no graph6 line");
}

void write_graph(std::ostream& out, const Graph& g, const std::string& format) {
  if (format == "edgelist") write_edge_list(out, g);
  else out << graph6_encode(g) << '\n';
}

void emit(const json& j, const std::string& json_out) {
  if (json_out.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(json_out);
  if (!out) throw UsageError("cannot write '" + json_out + "'");
  out << j.dump(2) << '\n';
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

// Targeted extractors first, the exhaustive oracle only for small graphs.
std::optional<Witness> find_ck(const Graph& g, int k, const OrbitOptions& opts, std::string& how) {
  if (is_connected(g) && is_cycle_graph(g, g.n()) && g.n() >= k && (g.n() - k) % 2 == 0) {
    how = "cycle_reduce";
    return cycle_reduce(g, cycle_order(g), k);
  }
  const Graph c = complement(g);
  if (g.n() >= 5 && is_cycle_graph(c, c.n()) && g.n() >= antihole_min_length(k)) {
    how = "antihole_extract";
    return antihole_extract(g, cycle_order(c), k);
  }
  if (g.n() > opts.max_vertices) throw UsageError("no targeted extractor applies and n exceeds the oracle limit " + std::to_string(opts.max_vertices));
  how = "oracle";
  Witness w;
  if (has_pivot_minor(g, k, opts, &w)) return w;
  return std::nullopt;
}

Graph generate(const std::string& family, int n, double p, int max_leaf, int degree, const std::vector<int>& intervals,
               std::uint64_t seed) {
  if (family == "gnp") return gen::gnp(n, p, seed);
  if (family == "caterpillar") return gen::caterpillar(n, max_leaf, seed);
  if (family == "cycle") return gen::long_cycle(n);
  if (family == "antihole") return gen::anti_hole(n);
  if (family == "fan") return gen::fan(intervals);
  if (family == "bounded") return gen::bounded_degree(n, degree, seed);
  throw UsageError("unknown family '" + family + "'");
}

int verify_document(const json& doc, const Graph& g) {
  Certificate cert;
  int min_hole = 5;
  if (doc.contains("status") && doc.contains("fingerprint")) {
    const RunReport r = doc.get<RunReport>();
    if (r.fingerprint != fingerprint(g)) {
      std::cerr << "verify: report fingerprint " << r.fingerprint << " does not match graph " << fingerprint(g) << '\n';
      return kVerifyFailed;
    }
    if (!r.certificate) {
      std::cerr << "verify: report carries no certificate (status " << (r.ok ? "ok" : "failure") << ")\n";
      return kVerifyFailed;
    }
    cert = *r.certificate;
    min_hole = std::max(5, r.constants.L);
  } else if (doc.contains("witness") && doc.contains("found")) {
    cert = doc.at("witness").get<Witness>();  // find-ck output
  } else if (doc.contains("type")) {
    cert = doc.get<Certificate>();
  } else {
    cert = doc.get<Witness>();
  }
  if (const auto* w = std::get_if<Witness>(&cert); w && w->source != graph6_encode(g)) {
    std::cerr << "verify: witness source fingerprint " << fingerprint(graph6_decode(w->source)) << " does not match graph "
              << fingerprint(g) << '\n';
    return kVerifyFailed;
  }
  const Verdict v = verify_certificate(g, cert, min_hole);
  if (!v) {
    std::cerr << "verify: " << v.diagnostic << '\n';
    return kVerifyFailed;
  }
  std::cout << "verified " << certificate_type(cert) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pivot-minor and pure-pair toolkit"};
  app.require_subcommand(1);

  std::string format = "graph6";
  std::string json_out;
  int k = 5;
  std::uint64_t seed = 1;
  std::size_t max_orbit = 1'000'000;
  int threads = 1;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "graph file format")->check(CLI::IsMember({"graph6", "edgelist"}));
    sub->add_option("--json-out", json_out, "write JSON output here instead of stdout");
  };

  std::string graph_path = "-";

  auto* gen_cmd = app.add_subcommand("gen", "generate a graph");
  std::string family;
  int n = 20;
  double p = 0.5;
  int max_leaf = 3;
  int degree = 3;
  std::vector<int> intervals;
  gen_cmd->add_option("family", family, "gnp | caterpillar | cycle | antihole | fan | bounded")->required();
  gen_cmd->add_option("--n", n, "number of vertices");
  gen_cmd->add_option("--p", p, "edge probability (gnp)");
  gen_cmd->add_option("--max-leaf", max_leaf, "leaves per spine vertex (caterpillar)");
  gen_cmd->add_option("--degree", degree, "degree bound (bounded)");
  gen_cmd->add_option("--intervals", intervals, "interval lengths (fan)");
  gen_cmd->add_option("--seed", seed, "random seed");
  gen_cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"graph6", "edgelist"}));

  auto* pivot_cmd = app.add_subcommand("pivot", "pivot a graph at an edge");
  Vertex pu = -1;
  Vertex pv = -1;
  pivot_cmd->add_option("graph", graph_path, "graph file, - for stdin")->required();
  pivot_cmd->add_option("u", pu)->required();
  pivot_cmd->add_option("v", pv)->required();
  pivot_cmd->add_option("--format", format)->check(CLI::IsMember({"graph6", "edgelist"}));

  auto* orbit_cmd = app.add_subcommand("orbit", "enumerate the pivot orbit up to isomorphism");
  orbit_cmd->add_option("graph", graph_path)->required();
  orbit_cmd->add_option("--max-orbit", max_orbit);
  orbit_cmd->add_option("--threads", threads);
  add_common(orbit_cmd);

  auto* find_cmd = app.add_subcommand("find-ck", "search for a C_k pivot-minor witness");
  find_cmd->add_option("graph", graph_path)->required();
  find_cmd->add_option("--k", k)->check(CLI::PositiveNumber);
  find_cmd->add_option("--max-orbit", max_orbit);
  find_cmd->add_option("--threads", threads);
  add_common(find_cmd);

  auto* pair_cmd = app.add_subcommand("pure-pair", "run the pipeline and print a report");
  double restriction_alpha = 0;
  pair_cmd->add_option("graph", graph_path)->required();
  pair_cmd->add_option("--k", k);
  pair_cmd->add_option("--restriction-alpha", restriction_alpha, "degree fraction for the restriction step (default 1/L)");
  add_common(pair_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "check a certificate, witness or report against a graph");
  std::string doc_path;
  verify_cmd->add_option("certificate", doc_path, "JSON certificate, witness or report")->required();
  verify_cmd->add_option("graph", graph_path)->required();
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"graph6", "edgelist"}));

  auto* bench_cmd = app.add_subcommand("bench", "run the pipeline over generated graphs and print CSV");
  std::vector<int> sizes{100, 200};
  int seeds = 3;
  std::string bench_family = "gnp";
  bench_cmd->add_option("--family", bench_family);
  bench_cmd->add_option("--n", sizes);
  bench_cmd->add_option("--p", p);
  bench_cmd->add_option("--k", k);
  bench_cmd->add_option("--max-leaf", max_leaf);
  bench_cmd->add_option("--degree", degree);
  bench_cmd->add_option("--seeds", seeds, "seeds per size, starting at --seed");
  bench_cmd->add_option("--seed", seed);
  bench_cmd->add_option("--threads", threads);

  auto* inspect_cmd = app.add_subcommand("inspect", "print the dominating skeleton as JSON");
  Vertex root = 0;
  inspect_cmd->add_option("graph", graph_path)->required();
  inspect_cmd->add_option("--root", root);
  add_common(inspect_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*gen_cmd) {
      write_graph(std::cout, generate(family, n, p, max_leaf, degree, intervals, seed), format);
      return 0;
    }
    if (*pivot_cmd) {
      const Graph g = read_graph(graph_path, format);
      write_graph(std::cout, pivot(g, pu, pv), format);
      return 0;
    }
    if (*orbit_cmd) {
      const Graph g = read_graph(graph_path, format);
      OrbitIndex orbit(g, OrbitOptions{std::max(g.n(), 1), max_orbit, threads});
      orbit.enumerate();
      json members = json::array();
      for (std::size_t i = 0; i < orbit.size(); ++i) members.push_back(graph6_encode(orbit.member(i).graph));
      emit(json{{"size", orbit.size()}, {"complete", orbit.complete()}, {"members", members}}, json_out);
      return orbit.complete() ? 0 : kPipelineFailed;
    }
    if (*find_cmd) {
      const Graph g = read_graph(graph_path, format);
      std::string how;
      const auto w = find_ck(g, k, OrbitOptions{10, max_orbit, threads}, how);
      json out{{"found", w.has_value()}, {"method", how}};
      if (w) out["witness"] = *w;
      emit(out, json_out);
      return w ? 0 : kPipelineFailed;
    }
    if (*pair_cmd) {
      const Graph g = read_graph(graph_path, format);
      const RunReport r = strong_eh_pipeline(g, k, PipelineOptions{restriction_alpha});
      emit(r, json_out);
      return r.ok ? 0 : kPipelineFailed;
    }
    if (*verify_cmd) {
      const Graph g = read_graph(graph_path, format);
      json doc;
      try {
        doc = json::parse(slurp(doc_path));
      } catch (const json::exception& e) {
        throw SchemaError(std::string("certificate: ") + e.what());
      }
      return verify_document(doc, g);
    }
    if (*bench_cmd) {
      struct Job {
        int n;
        std::uint64_t seed;
        std::string row;
      };
      std::vector<Job> jobs;
      for (int size : sizes)
        for (int s = 0; s < seeds; ++s) jobs.push_back({size, seed + static_cast<std::uint64_t>(s), {}});
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t i; (i = next++) < jobs.size();) {
          Job& job = jobs[i];
          const Graph g = generate(bench_family, job.n, p, max_leaf, degree, {}, job.seed);
          const RunReport r = strong_eh_pipeline(g, k);
          std::ostringstream row;
          row << bench_family << ',' << job.n << ',' << p << ',' << k << ',' << job.seed << ',' << (r.ok ? "ok" : "failure") << ','
              << (r.certificate ? std::string(certificate_type(*r.certificate)) : std::string("none")) << ','
              << csv_field(r.trace.empty() ? "" : r.trace.back()) << ',' << r.frac_a << ',' << r.frac_b << ','
              << std::min(r.frac_a, r.frac_b) << ',' << r.witness_ops << ',' << r.wall_ms;
          job.row = row.str();
        }
      };
      {
        std::vector<std::jthread> pool;
        for (int t = 0; t < std::max(1, threads); ++t) pool.emplace_back(worker);
      }
      std::cout << "family,n,p,k,seed,status,certificate,branch,frac_a,frac_b,eps_achieved,witness_ops,wall_ms\n";
      for (const Job& job : jobs) std::cout << job.row << '\n';
      return 0;
    }
    if (*inspect_cmd) {
      const Graph g = read_graph(graph_path, format);
      const Skeleton s = dominating_skeleton(g, root);
      const Verdict v = check_skeleton(g, s);
      json out = s;
      out["check"] = v.ok ? "ok" : v.diagnostic;
      emit(out, json_out);
      return v.ok ? 0 : kVerifyFailed;
    }
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPipelineFailed;
  }
  return kUsage;
}
