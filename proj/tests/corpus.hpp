#pragma once

#include <string>
#include <vector>

#include "helly/graph.hpp"

namespace helly::testing {

struct NamedGraph {
  std::string name;
  Graph graph;
};

Graph path_graph(int n);      // vertices "a", "b", ...
Graph cycle_graph(int n);     // vertices "0".."n-1"
Graph complete_graph(int n);  // vertices "a", "b", ...
Graph star_graph(int leaves); // centre "c", leaves "1".."leaves"
// Rows x cols window of the king grid, vertices "(i,j)".
Graph king_window(int rows, int cols);

// Every connected graph on n vertices up to isomorphism (n <= 8).
std::vector<Graph> connected_graphs(int n);
// Every tree on n vertices up to isomorphism.
std::vector<Graph> trees(int n);

// Exhaustive connected graphs on <= max_vertices vertices plus the named
// families: trees to 10 vertices, K_n to 6, C_n to 8, king windows to 4x4.
std::vector<NamedGraph> acceptance_corpus(int max_vertices = 7);

}  // namespace helly::testing
