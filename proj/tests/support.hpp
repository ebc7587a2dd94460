#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "helly/cliques.hpp"
#include "helly/graph.hpp"
#include "helly/metric_function.hpp"
#include "helly/rational.hpp"

namespace helly::testing {

inline Rational q(const char* text) { return parse_rational(text); }

inline MetricFunction fn(std::initializer_list<const char*> values) {
  MetricFunction f;
  for (const char* v : values) f.values.push_back(parse_rational(v));
  return f;
}

inline VertexSet set_of(const Graph& g, std::initializer_list<const char*> ids) {
  VertexSet s = g.empty_set();
  for (const char* id : ids) s.set(g.index_of(id));
  return s;
}

inline Graph named(std::vector<std::string> ids, std::vector<std::pair<std::string, std::string>> edges) {
  return Graph(std::move(ids), edges);
}

// Floyd-Warshall, used as an oracle for the BFS distances.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.size();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (int j = 0; j < n; ++j)
      if (g.adjacent(i, j)) d[i][j] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

}  // namespace helly::testing
