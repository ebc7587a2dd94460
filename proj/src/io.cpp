#include "helly/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "helly/error.hpp"

namespace helly::io {

namespace {

const json& require(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string(what) + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) throw Error(std::string(what) + ": expected a string");
  return j.get<std::string>();
}

Rational as_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error("expected a rational as \"p/q\" string or integer");
}

long as_integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(std::string(what) + ": expected an integer");
  return j.get<long>();
}

}  // namespace

Graph parse_graph(const json& j) {
  const json& vs = require(j, "vertices", "graph");
  if (!vs.is_array() || vs.empty()) throw Error("graph: \"vertices\" must be a nonempty array");
  std::vector<std::string> ids;
  for (const auto& v : vs) ids.push_back(as_string(v, "graph vertex"));
  std::vector<std::pair<std::string, std::string>> edges;
  if (j.contains("edges")) {
    const json& es = j.at("edges");
    if (!es.is_array()) throw Error("graph: \"edges\" must be an array");
    for (const auto& e : es) {
      if (!e.is_array() || e.size() != 2) throw Error("graph: each edge must be a pair of vertex identifiers");
      edges.emplace_back(as_string(e[0], "graph edge"), as_string(e[1], "graph edge"));
    }
  }
  return Graph(std::move(ids), edges);
}

json to_json(const Graph& g) {
  json out;
  out["vertices"] = g.ids();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.id(u), g.id(v)});
  out["edges"] = std::move(edges);
  return out;
}

json to_json(const SubdivisionGraph& s) {
  json out = to_json(s.graph);
  out["edge_length"] = to_string(s.edge_length);
  return out;
}

json vertex_set_json(const Graph& g, const VertexSet& s) {
  std::vector<std::string> ids;
  for (int v : members_of(s)) ids.push_back(g.id(v));
  std::sort(ids.begin(), ids.end());
  return ids;
}

VertexSet parse_vertex_set(const Graph& g, const json& j) {
  if (!j.is_array()) throw Error("vertex set must be an array of identifiers");
  VertexSet s = g.empty_set();
  for (const auto& v : j) s.set(g.index_of(as_string(v, "vertex set")));
  return s;
}

json to_json(const Graph& g, const Ball& b) {
  return {{"center", g.id(b.center)}, {"radius", b.radius}, {"members", vertex_set_json(g, b.members)}};
}

json to_json(const Graph& g, const CliquePoset& p) {
  json elements = json::array();
  for (const auto& c : p.elements) elements.push_back(vertex_set_json(g, c.members));
  json covers = json::array();
  for (auto [a, b] : p.covers) covers.push_back({a, b});
  return {{"elements", std::move(elements)}, {"cover_relations", std::move(covers)}};
}

json to_json(const Graph& g, const MetricFunction& f) {
  json out = json::object();
  for (int v = 0; v < f.size(); ++v) out[g.id(v)] = to_string(f[v]);
  return out;
}

MetricFunction parse_function(const Graph& g, const json& j) {
  if (!j.is_object()) throw Error("metric function must be an object {\"vertex\": \"p/q\"}");
  MetricFunction f;
  f.values.resize(g.size());
  std::vector<bool> seen(g.size(), false);
  for (const auto& [key, value] : j.items()) {
    const int v = g.index_of(key);
    f.values[v] = as_rational(value);
    seen[v] = true;
  }
  for (int v = 0; v < g.size(); ++v)
    if (!seen[v]) throw Error("metric function is missing a value for vertex '" + g.id(v) + "'");
  return f;
}

json to_json(const Graph& g, const OrthoschemePoint& p) {
  json support = json::array();
  for (const auto& [f, t] : p.support) support.push_back({{"f", to_json(g, f)}, {"t", to_string(t)}});
  return {{"level", p.level}, {"support", std::move(support)}};
}

OrthoschemePoint parse_point(const Graph& g, const json& j) {
  const int level = static_cast<int>(as_integer(require(j, "level", "orthoscheme point"), "level"));
  const json& s = require(j, "support", "orthoscheme point");
  if (!s.is_array()) throw Error("orthoscheme point: \"support\" must be an array");
  std::vector<std::pair<MetricFunction, Rational>> support;
  for (const auto& item : s)
    support.emplace_back(parse_function(g, require(item, "f", "support entry")),
                         as_rational(require(item, "t", "support entry")));
  return make_point(level, std::move(support));
}

Automorphism parse_automorphism(const Graph& g, const json& j) {
  if (!j.is_object()) throw Error("permutation must be an object {\"a\": \"b\", ...}");
  std::vector<int> image(g.size());
  for (int v = 0; v < g.size(); ++v) image[v] = v;
  for (const auto& [key, value] : j.items()) image[g.index_of(key)] = g.index_of(as_string(value, "permutation"));
  return check_automorphism(g, image);
}

json to_json(const Graph& g, const Automorphism& a) {
  json out = json::object();
  for (int v = 0; v < a.size(); ++v) out[g.id(v)] = g.id(a(v));
  return out;
}

std::vector<Automorphism> parse_generators(const Graph& g, const json& j) {
  std::vector<Automorphism> gens;
  if (j.is_object()) {
    gens.push_back(parse_automorphism(g, j));
  } else if (j.is_array()) {
    for (const auto& item : j) gens.push_back(parse_automorphism(g, item));
  } else {
    throw Error("subgroup generators must be a permutation map or a list of them");
  }
  if (gens.empty()) gens.push_back(identity_automorphism(g));
  return gens;
}

PeriodicGraph parse_periodic(const json& j) {
  const json& quotient = require(j, "quotient", "periodic graph");
  const json& vs = require(quotient, "vertices", "quotient");
  if (!vs.is_array() || vs.empty()) throw Error("quotient: \"vertices\" must be a nonempty array");
  PeriodicGraph p;
  for (const auto& v : vs) p.vertices.push_back(as_string(v, "quotient vertex"));
  auto index = [&](const json& id) {
    const std::string s = as_string(id, "periodic graph edge");
    for (int i = 0; i < p.size(); ++i)
      if (p.vertices[i] == s) return i;
    throw Error("periodic graph edge references undeclared vertex '" + s + "'");
  };
  std::vector<std::pair<int, int>> with_voltage;
  if (j.contains("voltages")) {
    for (const auto& e : j.at("voltages")) {
      if (!e.is_array() || e.size() != 3) throw Error("voltage entries must be [\"a\", \"b\", k]");
      VoltageEdge ve{index(e[0]), index(e[1]), as_integer(e[2], "voltage")};
      with_voltage.emplace_back(std::min(ve.u, ve.v), std::max(ve.u, ve.v));
      p.edges.push_back(ve);
    }
  }
  if (quotient.contains("edges")) {
    for (const auto& e : quotient.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error("quotient: each edge must be a pair of identifiers");
      const int u = index(e[0]), v = index(e[1]);
      const std::pair<int, int> key{std::min(u, v), std::max(u, v)};
      if (std::find(with_voltage.begin(), with_voltage.end(), key) == with_voltage.end())
        p.edges.push_back({u, v, 0});
    }
  }
  validate(p);
  return p;
}

AffineAutomorphism parse_affine(const json& j) {
  const json& perm = require(j, "perm", "affine automorphism");
  if (!perm.is_array()) throw Error("affine automorphism: \"perm\" must be an array");
  AffineAutomorphism a;
  for (const auto& x : perm) a.perm.push_back(static_cast<int>(as_integer(x, "perm")) - 1);
  const std::size_t n = a.perm.size();
  if (j.contains("signs"))
    for (const auto& x : j.at("signs")) a.signs.push_back(static_cast<int>(as_integer(x, "signs")));
  else
    a.signs.assign(n, 1);
  if (j.contains("shift"))
    for (const auto& x : j.at("shift")) a.shift.push_back(as_integer(x, "shift"));
  else
    a.shift.assign(n, 0);
  validate(a);
  return a;
}

json rational_json(const Rational& q) { return to_string(q); }

json rationals_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < g.size(); ++v) os << "  " << dot_quote(g.id(v)) << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << dot_quote(g.id(u)) << " -- " << dot_quote(g.id(v)) << ";\n";
  os << "}\n";
  return os.str();
}

json read_json_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("malformed JSON in '" + path + "': " + e.what());
  }
}

}  // namespace helly::io
