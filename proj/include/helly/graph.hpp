#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "helly/vertex_set.hpp"

namespace helly {

// Graph metric of a connected graph, stored densely.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<int> d) : n_(n), d_(std::move(d)) {}

  int size() const { return n_; }
  int operator()(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }

 private:
  int n_ = 0;
  std::vector<int> d_;
};

// Finite simple undirected graph. Vertices are addressed by index; the
// index order is the input order and serves as the canonical total order.
// Immutable after construction. The distance matrix is computed eagerly when
// the graph is connected; metric queries on a disconnected graph throw.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() = default;
  Graph(std::vector<std::string> ids, const std::vector<std::pair<std::string, std::string>>& edges);
  static Graph from_indices(std::vector<std::string> ids, const std::vector<Edge>& edges);
  // Vertices named "0", "1", ..., "n-1".
  static Graph from_indices(int n, const std::vector<Edge>& edges);

  int size() const { return static_cast<int>(ids_.size()); }
  const std::string& id(int v) const { return ids_[v]; }
  const std::vector<std::string>& ids() const { return ids_; }
  int index_of(std::string_view id) const;

  bool adjacent(int u, int v) const { return adjacency_[u][v]; }
  // Open neighbourhood.
  const VertexSet& neighbors(int v) const { return adjacency_[v]; }
  const std::vector<int>& adjacency_list(int v) const { return lists_[v]; }
  int degree(int v) const { return static_cast<int>(lists_[v].size()); }
  // Sorted, each edge once with first < second.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const { return edge_count_; }

  bool connected() const { return distances_ != nullptr; }
  const DistanceMatrix& distances() const;
  int distance(int u, int v) const { return distances()(u, v); }
  int eccentricity(int v) const;
  int diameter() const;

  VertexSet empty_set() const { return VertexSet(static_cast<std::size_t>(size())); }
  VertexSet full_set() const { return ~empty_set(); }

 private:
  void build(const std::vector<Edge>& edges);

  std::vector<std::string> ids_;
  std::vector<VertexSet> adjacency_;
  std::vector<std::vector<int>> lists_;
  std::size_t edge_count_ = 0;
  std::shared_ptr<const DistanceMatrix> distances_;
  std::pair<int, int> unreachable_{-1, -1};
};

// The graph metric by breadth-first search from every vertex. Throws
// helly::Error("graph not connected ...") naming two unreachable vertices.
const DistanceMatrix& all_pairs_distances(const Graph& g);

// Graphs are equal when they have the same ordered ids and the same edges.
bool operator==(const Graph& a, const Graph& b);

}  // namespace helly
