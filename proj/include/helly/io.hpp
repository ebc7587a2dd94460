#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "helly/automorphism.hpp"
#include "helly/cliques.hpp"
#include "helly/graph.hpp"
#include "helly/helly.hpp"
#include "helly/hull.hpp"
#include "helly/lattice.hpp"
#include "helly/periodic.hpp"

namespace helly::io {

using json = nlohmann::json;

// {"vertices": ["a", ...], "edges": [["a", "b"], ...]}; extra keys ignored.
Graph parse_graph(const json& j);
json to_json(const Graph& g);
json to_json(const SubdivisionGraph& s);

json vertex_set_json(const Graph& g, const VertexSet& s);
VertexSet parse_vertex_set(const Graph& g, const json& j);

json to_json(const Graph& g, const Ball& b);
json to_json(const Graph& g, const CliquePoset& p);

// {"vertex": "p/q", ...}
json to_json(const Graph& g, const MetricFunction& f);
MetricFunction parse_function(const Graph& g, const json& j);

// {"level": N, "support": [{"f": {...}, "t": "p/q"}, ...]}
json to_json(const Graph& g, const OrthoschemePoint& p);
OrthoschemePoint parse_point(const Graph& g, const json& j);

// {"a": "b", ...}; vertices not mentioned are fixed.
Automorphism parse_automorphism(const Graph& g, const json& j);
json to_json(const Graph& g, const Automorphism& a);
// A single map or a list of maps.
std::vector<Automorphism> parse_generators(const Graph& g, const json& j);

// {"quotient": <graph json>, "voltages": [["a", "b", 1], ...]}. Quotient
// edges without a voltage entry lift with voltage 0.
PeriodicGraph parse_periodic(const json& j);

// {"perm": [2, 3, 1], "signs": [1, 1, 1], "shift": [1, 0, 0]}, perm 1-based;
// signs default to all +1 and shift to zero.
AffineAutomorphism parse_affine(const json& j);

json rational_json(const Rational& q);
json rationals_json(const std::vector<Rational>& v);

// DOT rendering of an undirected graph, vertices labelled by id.
std::string to_dot(const Graph& g);

json read_json_file(const std::string& path);

}  // namespace helly::io
