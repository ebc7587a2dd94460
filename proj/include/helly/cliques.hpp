#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "helly/graph.hpp"
#include "helly/rational.hpp"

namespace helly {

// A nonempty clique that is an intersection of balls.
struct RoundClique {
  VertexSet members;

  friend bool operator==(const RoundClique& a, const RoundClique& b) { return a.members == b.members; }
  friend bool operator<(const RoundClique& a, const RoundClique& b) { return canonical_less(a.members, b.members); }
};

// Round cliques ordered by inclusion. Elements are canonically sorted;
// covers holds index pairs (i, j) with elements[i] covered by elements[j].
struct CliquePoset {
  std::vector<RoundClique> elements;
  std::vector<std::pair<int, int>> covers;

  int index_of(const VertexSet& members) const;  // -1 when absent
};

// Graph whose vertices are points of the injective hull at some grid level.
// The vertex ids of `graph` are canonical labels of those points.
struct SubdivisionGraph {
  Graph graph;
  Rational edge_length;
};

inline constexpr std::size_t kDefaultCliqueCap = 1'000'000;

// Inclusion-maximal cliques, canonically sorted. Bron-Kerbosch with
// pivoting over a degeneracy ordering.
std::vector<VertexSet> maximal_cliques(const Graph& g, std::size_t cap = kDefaultCliqueCap);

// The vertices together with all nonempty intersections of maximal
// cliques. Throws NotHelly (carrying the witness) when check_helly is set
// and the graph is not Helly.
CliquePoset round_cliques(const Graph& g, bool check_helly = true);

// s is an intersection of balls: s equals the intersection of all balls
// B(z, max_{y in s} d(z, y)) that contain it, and s is a clique.
bool is_round(const Graph& g, const VertexSet& s);

// Vertices are round_cliques(g).elements in order. Edge between sigma and
// tau when they meet and their union is a clique. Edge length 1/2.
SubdivisionGraph first_subdivision(const Graph& g, bool check_helly = true);

// Number of strict inclusions in a longest chain of round cliques.
int combinatorial_dimension(const Graph& g, bool check_helly = true);

// "{a,b,c}" from the vertex ids.
std::string clique_label(const Graph& g, const VertexSet& s);

}  // namespace helly

#include "helly/metric_function.hpp"

namespace helly {

// The half-integer extremal function attached to a round clique: d(x, .) for
// a singleton {x}; otherwise 1/2 on members and, for x outside with
// D = d(x, a), D when a lies in B(x, D) and D + 1/2 otherwise. The result is
// validated with is_extremal.
MetricFunction clique_to_extremal(const Graph& g, const RoundClique& a);

// Intersection of the balls B(x, ceil f(x)). f must be extremal with values
// in (1/2)N.
RoundClique extremal_to_clique(const Graph& g, const MetricFunction& f);

}  // namespace helly
