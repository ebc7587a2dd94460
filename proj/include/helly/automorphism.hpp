#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "helly/cliques.hpp"
#include "helly/graph.hpp"
#include "helly/hull.hpp"
#include "helly/metric_function.hpp"

namespace helly {

// Adjacency-preserving bijection of the vertex set; image[v] is the image
// of vertex v.
class Automorphism {
 public:
  const std::vector<int>& image() const { return image_; }
  int operator()(int v) const { return image_[v]; }
  int size() const { return static_cast<int>(image_.size()); }
  Automorphism inverse() const;
  VertexSet apply(const VertexSet& s) const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  friend Automorphism check_automorphism(const Graph& g, const std::vector<int>& image);
  explicit Automorphism(std::vector<int> image) : image_(std::move(image)) {}
  std::vector<int> image_;
};

// Validates a permutation. Non-bijections and adjacency violations throw;
// the latter names an edge whose image is not an edge.
Automorphism check_automorphism(const Graph& g, const std::vector<int>& image);

Automorphism identity_automorphism(const Graph& g);

// Every automorphism, in lexicographic order of image vectors. Throws when
// more than cap are found.
std::vector<Automorphism> enumerate_automorphisms(const Graph& g, std::size_t cap = 10'000'000);

// (a . f)(x) = f(a^-1(x)).
MetricFunction act_on_function(const Automorphism& a, const MetricFunction& f);

// perm[i] is the index in p.elements of a(p.elements[i]).
std::vector<int> induced_on_round_cliques(const Automorphism& a, const CliquePoset& p);

// Partition of the vertices into orbits of the group generated by gens;
// result[x] is the least vertex in x's orbit.
std::vector<int> orbit_representatives(int n, const std::vector<Automorphism>& gens);

// The least round clique (canonical order) stabilized setwise by every
// generator. On a finite Helly graph one always exists; its absence is
// reported as an internal-consistency error.
std::optional<RoundClique> elliptic_witness(const Graph& g, const std::vector<Automorphism>& gens,
                                            bool check_helly = true);

// Level-N grid vertices fixed by every generator.
std::vector<MetricFunction> fixed_grid_vertices(const Graph& g, const std::vector<Automorphism>& gens, int level,
                                                bool check_helly = true,
                                                std::uint64_t budget = default_search_budget());

struct FixedSetDistance {
  Rational dist;
  MetricFunction witness_g;
  MetricFunction witness_h;
  long resolution = 2;
};

// Minimum sup distance between G-fixed and H-fixed extremal functions with
// values in (1/resolution)N. resolution must be a positive even integer.
FixedSetDistance fixed_set_distance(const Graph& g, const std::vector<Automorphism>& gens_g,
                                    const std::vector<Automorphism>& gens_h, long resolution,
                                    bool check_helly = true, std::uint64_t budget = default_search_budget());

}  // namespace helly
