#include "pivotminor/serialize.hpp"

namespace pivotminor {

namespace {

const json& field(const json& j, const char* key, const char* owner) {
  if (!j.is_object()) throw SchemaError(std::string(owner) + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string(owner) + ": missing field '" + key + "'");
  return *it;
}

template <class T>
T read(const json& j, const char* key, const char* owner) {
  try {
    return field(j, key, owner).get<T>();
  } catch (const json::exception& e) {
    throw SchemaError(std::string(owner) + ": field '" + key + "': " + e.what());
  }
}

PairKind kind_from(const std::string& s) {
  if (s == "complete") return PairKind::complete;
  if (s == "anticomplete") return PairKind::anticomplete;
  throw SchemaError("pure_pair: kind must be 'complete' or 'anticomplete', got '" + s + "'");
}

}  // namespace

void to_json(json& j, const Step& s) {
  if (s.is_pivot()) j = json{{"pivot", {s.u, s.v}}};
  else j = json{{"delete", s.u}};
}

void from_json(const json& j, Step& s) {
  if (!j.is_object() || j.size() != 1) throw SchemaError("op: expected {\"pivot\": [u, v]} or {\"delete\": v}");
  if (j.contains("pivot")) {
    const auto uv = read<std::vector<Vertex>>(j, "pivot", "op");
    if (uv.size() != 2) throw SchemaError("op: pivot needs exactly two vertices");
    s = Step::make_pivot(uv[0], uv[1]);
  } else if (j.contains("delete")) {
    s = Step::make_delete(read<Vertex>(j, "delete", "op"));
  } else {
    throw SchemaError("op: unknown operation '" + j.begin().key() + "'");
  }
}

void to_json(json& j, const Witness& w) { j = json{{"source", w.source}, {"k", w.k}, {"ops", w.ops}}; }

void from_json(const json& j, Witness& w) {
  w.source = read<std::string>(j, "source", "witness");
  w.k = read<int>(j, "k", "witness");
  const json& ops = field(j, "ops", "witness");
  if (!ops.is_array()) throw SchemaError("witness: field 'ops' must be an array");
  w.ops.clear();
  for (const json& op : ops) w.ops.push_back(op.get<Step>());
}

void to_json(json& j, const PurePair& p) { j = json{{"a", p.a}, {"b", p.b}, {"kind", std::string(to_string(p.kind))}}; }

void from_json(const json& j, PurePair& p) {
  p.a = read<VertexSet>(j, "a", "pure_pair");
  p.b = read<VertexSet>(j, "b", "pure_pair");
  p.kind = kind_from(read<std::string>(j, "kind", "pure_pair"));
}

void to_json(json& j, const Hole& h) { j = json{{"order", h.order}}; }

void from_json(const json& j, Hole& h) { h.order = read<VertexSet>(j, "order", "hole"); }

void to_json(json& j, const Certificate& c) {
  std::visit([&](const auto& x) { j = x; }, c);
  j["type"] = std::string(certificate_type(c));
}

void from_json(const json& j, Certificate& c) {
  const auto type = read<std::string>(j, "type", "certificate");
  if (type == "pure_pair") c = j.get<PurePair>();
  else if (type == "witness") c = j.get<Witness>();
  else if (type == "hole") c = j.get<Hole>();
  else throw SchemaError("certificate: unknown type '" + type + "'");
}

void to_json(json& j, const Skeleton& s) { j = json{{"root", s.root}, {"parent", s.parent}, {"rmap", s.rmap}}; }

void from_json(const json& j, Skeleton& s) {
  s.root = read<Vertex>(j, "root", "skeleton");
  s.parent = read<std::vector<Vertex>>(j, "parent", "skeleton");
  s.rmap = read<std::vector<Vertex>>(j, "rmap", "skeleton");
  if (s.parent.size() != s.rmap.size()) throw SchemaError("skeleton: 'parent' and 'rmap' differ in length");
}

void to_json(json& j, const ConstantsBundle& c) {
  j = json{{"k", c.k},         {"L", c.L},       {"alpha", c.alpha}, {"alpha_hole", c.alpha_hole},
           {"eps0", c.eps0},   {"eps", c.eps},   {"delta", c.delta}};
}

void from_json(const json& j, ConstantsBundle& c) {
  c.k = read<int>(j, "k", "constants");
  c.L = read<int>(j, "L", "constants");
  c.alpha = read<double>(j, "alpha", "constants");
  c.alpha_hole = read<double>(j, "alpha_hole", "constants");
  c.eps0 = read<double>(j, "eps0", "constants");
  c.eps = read<double>(j, "eps", "constants");
  c.delta = read<double>(j, "delta", "constants");
}

void to_json(json& j, const RunReport& r) {
  j = json{{"fingerprint", r.fingerprint},
           {"n", r.n},
           {"k", r.k},
           {"constants", r.constants},
           {"trace", r.trace},
           {"certificate", nullptr},
           {"achieved", {{"frac_a", r.frac_a}, {"frac_b", r.frac_b}, {"witness_ops", r.witness_ops}}},
           {"status", r.ok ? "ok" : "failure"},
           {"diagnostic", r.diagnostic},
           {"wall_ms", r.wall_ms}};
  if (r.certificate) j["certificate"] = *r.certificate;
}

void from_json(const json& j, RunReport& r) {
  r.fingerprint = read<std::string>(j, "fingerprint", "report");
  r.n = read<int>(j, "n", "report");
  r.k = read<int>(j, "k", "report");
  r.constants = field(j, "constants", "report").get<ConstantsBundle>();
  r.trace = read<std::vector<std::string>>(j, "trace", "report");
  const json& c = field(j, "certificate", "report");
  if (c.is_null()) r.certificate.reset();
  else r.certificate = c.get<Certificate>();
  const json& a = field(j, "achieved", "report");
  r.frac_a = read<double>(a, "frac_a", "report.achieved");
  r.frac_b = read<double>(a, "frac_b", "report.achieved");
  r.witness_ops = read<int>(a, "witness_ops", "report.achieved");
  const auto status = read<std::string>(j, "status", "report");
  if (status != "ok" && status != "failure") throw SchemaError("report: status must be 'ok' or 'failure'");
  r.ok = status == "ok";
  r.diagnostic = read<std::string>(j, "diagnostic", "report");
  r.wall_ms = read<double>(j, "wall_ms", "report");
}

}  // namespace pivotminor
