#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "helly/cliques.hpp"
#include "helly/graph.hpp"
#include "helly/metric_function.hpp"
#include "helly/rational.hpp"

namespace helly {

// Caps the number of search nodes visited by grid enumerations. The default
// comes from the HELLY_BUDGET environment variable, else 10^8.
std::uint64_t default_search_budget();

// 2 * N!, the denominator of the level-N grid.
long grid_resolution(int level);

// x -> d(x, .), the embedding of the graph into its injective hull.
MetricFunction distance_function(const Graph& g, int x);

// 1-Lipschitz and f(x) + f(y) >= d(x, y) for all pairs.
bool is_admissible(const Graph& g, const MetricFunction& f);

// f(x) = max_y d(x, y) - f(y) at every vertex. Throws on inadmissible f.
bool is_extremal(const Graph& g, const MetricFunction& f);

// Sup metric. Throws on domain mismatch.
Rational sup_distance(const MetricFunction& f, const MetricFunction& h);

// All extremal functions with values in (1/resolution)N, canonically
// sorted. When orbit_rep is nonempty, orbit_rep[x] names a representative
// of x's orbit and only functions constant on orbits are returned.
std::vector<MetricFunction> extremal_grid_functions(const Graph& g, long resolution,
                                                    const std::vector<int>& orbit_rep = {},
                                                    std::uint64_t budget = default_search_budget());

// Vertices of the level-N Helly subdivision: extremal functions with values
// in (1/(2 N!))N. Throws BudgetExceeded when the search budget runs out.
std::vector<MetricFunction> hull_grid_vertices(const Graph& g, int level, bool check_helly = true,
                                               std::uint64_t budget = default_search_budget());

// hull_grid_vertices with edges at sup distance exactly 1/(2 N!). Vertex i
// of the result is hull_grid_vertices(g, level)[i].
SubdivisionGraph grid_graph(const Graph& g, int level, bool check_helly = true,
                            std::uint64_t budget = default_search_budget());

// "(0,1/2,1)" in vertex order.
std::string function_label(const MetricFunction& f);

// Convex combination of level-N grid vertices that span a simplex.
struct OrthoschemePoint {
  int level = 1;
  std::vector<std::pair<MetricFunction, Rational>> support;
};

// Validates weights (nonnegative, sum 1), distinct support and pairwise
// sup distance at most 1/(2 N!).
OrthoschemePoint make_point(int level, std::vector<std::pair<MetricFunction, Rational>> support);

// d(p, x) = sum_i t_i f_i(x).
Rational point_eval(const OrthoschemePoint& p, int x);

// max_x sum_{i,j} t_i t'_j |f_i(x) - f'_j(x)|.
Rational point_distance(const OrthoschemePoint& p, const OrthoschemePoint& q, const Graph& g);

}  // namespace helly
