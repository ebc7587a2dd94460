#pragma once

#include <vector>

#include "helly/rational.hpp"

namespace helly {

struct Arc {
  int from = 0;
  int to = 0;
  Rational weight;
};

// Directed multigraph on nodes 0..nodes-1; self-loops allowed.
struct WeightedDigraph {
  int nodes = 0;
  std::vector<Arc> arcs;
};

struct MeanCycle {
  Rational mean;
  // Node sequence v0, v1, ..., v_{k-1}; arcs v_i -> v_{i+1} and v_{k-1} -> v0.
  std::vector<int> cycle;
  // Indices into WeightedDigraph::arcs, parallel to `cycle`.
  std::vector<int> arcs;
};

// Minimum over directed cycles of total weight / length, by Karp's
// recurrence in exact arithmetic. The realizing cycle is simple (at most
// `nodes` arcs). Throws on an acyclic digraph.
MeanCycle min_mean_cycle(const WeightedDigraph& d);

}  // namespace helly
