#pragma once

#include <optional>
#include <string>
#include <vector>

#include "helly/graph.hpp"
#include "helly/mean_cycle.hpp"
#include "helly/rational.hpp"

namespace helly {

// Lift rule: (u, t) ~ (v, t + voltage) for every t.
struct VoltageEdge {
  int u = 0;
  int v = 0;
  long voltage = 0;
};

// Finite presentation of a Z-periodic graph: a quotient multigraph (loops
// allowed) with integer voltages. The deck transformation is t -> t + 1.
struct PeriodicGraph {
  std::vector<std::string> vertices;
  std::vector<VoltageEdge> edges;

  int size() const { return static_cast<int>(vertices.size()); }
};

// Throws when a lift would be a self-loop, two edges lift to the same cover
// edge, an endpoint is out of range, or the cover is disconnected (the
// quotient is disconnected or the cycle voltages do not generate Z).
void validate(const PeriodicGraph& p);

// Cover vertex (v, t) lives at index (t - lo) * |quotient| + v and is named
// "v@t".
struct CoverWindow {
  Graph graph;
  long lo = 0;
  long hi = 0;
  std::vector<std::string> diagnostics;

  int index(int v, long layer, int quotient_size) const {
    return static_cast<int>((layer - lo) * quotient_size + v);
  }
};

// Induced lift on quotient x [lo, hi]. A disconnected window is not an
// error; it is flagged in diagnostics.
CoverWindow cover_window(const PeriodicGraph& p, long lo, long hi);
// Symmetric window quotient x [-k, k].
CoverWindow cover_window(const PeriodicGraph& p, long k);

// Exact distance in the infinite cover between (u, 0) and (v, layer).
long cover_distance(const PeriodicGraph& p, int u, int v, long layer);

// The voltage digraph: each edge gives arcs u -> v and v -> u with weights
// -voltage and +voltage. Its minimum mean is minus the best voltage gained
// per step.
WeightedDigraph voltage_digraph(const PeriodicGraph& p);

// Translation length of the deck transformation, pinned to the unique
// rational with denominator <= 2 * dim_bound inside a shrinking bracket.
Rational deck_translation_length(const PeriodicGraph& p, int dim_bound);

struct PeriodicAxis {
  std::vector<std::string> members;  // a round clique of the cover, as "v@t" ids
  int exponent = 1;
  Rational length;  // d(x, g^exponent x)
  Rational translation_length;
  long steps = 0;  // length in edges of the level-N subdivision
};

// Searches the round cliques meeting layer 0 (vertices first) for a point
// of the first Helly subdivision lying on an axis of g^a, a <= 2N,
// checking d(x, g^{a n} x) = n a tau for n = 1..3 on a measuring window of
// the given radius. Empty when the window search fails.
std::optional<PeriodicAxis> periodic_axis_vertex(const PeriodicGraph& p, int level, long window);

// is_helly on the windows quotient x [-k, k] for k = 1..radius.
std::vector<bool> window_helly_evidence(const PeriodicGraph& p, long radius);

}  // namespace helly
