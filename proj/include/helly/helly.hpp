#pragma once

#include <optional>
#include <vector>

#include "helly/error.hpp"
#include "helly/graph.hpp"

namespace helly {

// Combinatorial ball B(center, radius).
struct Ball {
  int center = 0;
  int radius = 0;
  VertexSet members;
};

Ball ball(const Graph& g, int center, int radius);

// One representative per distinct member set, radii 0..diameter. The first
// occurrence in (radius, center) order names the ball.
std::vector<Ball> distinct_balls(const Graph& g);

struct HellyResult {
  bool helly = true;
  // Pairwise-intersecting ball family with empty intersection, inclusion
  // minimal, present exactly when helly is false.
  std::optional<std::vector<Ball>> witness;
};

// Triple criterion for Helly hypergraphs applied to the hypergraph of all
// balls: for every vertex triple, the balls containing at least two of the
// three vertices must have a common vertex.
HellyResult is_helly(const Graph& g);

// Exhaustive search over pairwise-intersecting families of distinct balls,
// limited to families of at most max_family_size balls (<= 0 means no
// limit). Refuses graphs with more than size_cap vertices (hard limit 64).
bool is_helly_bruteforce(const Graph& g, int max_family_size, int size_cap = 10);

// Raised when an operation requires a Helly graph and the input is not.
class NotHelly : public Error {
 public:
  NotHelly(const Graph& g, std::vector<Ball> witness);
  const std::vector<Ball>& witness() const { return witness_; }

 private:
  std::vector<Ball> witness_;
};

// Throws NotHelly unless g is Helly.
void require_helly(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& s);

// True when the family pairwise intersects and has empty total intersection.
bool is_helly_witness(const Graph& g, const std::vector<Ball>& family);

}  // namespace helly
