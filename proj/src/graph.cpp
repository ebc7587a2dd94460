#include "helly/graph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "helly/error.hpp"

namespace helly {

Graph::Graph(std::vector<std::string> ids, const std::vector<std::pair<std::string, std::string>>& edges)
    : ids_(std::move(ids)) {
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < size(); ++i)
    if (!index.emplace(ids_[i], i).second) throw Error("duplicate vertex identifier '" + ids_[i] + "'");
  std::vector<Edge> indexed;
  indexed.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw Error("edge references undeclared vertex '" + a + "'");
    if (ib == index.end()) throw Error("edge references undeclared vertex '" + b + "'");
    indexed.emplace_back(ia->second, ib->second);
  }
  build(indexed);
}

Graph Graph::from_indices(std::vector<std::string> ids, const std::vector<Edge>& edges) {
  Graph g;
  g.ids_ = std::move(ids);
  std::unordered_map<std::string, int> seen;
  for (int i = 0; i < g.size(); ++i)
    if (!seen.emplace(g.ids_[i], i).second) throw Error("duplicate vertex identifier '" + g.ids_[i] + "'");
  g.build(edges);
  return g;
}

Graph Graph::from_indices(int n, const std::vector<Edge>& edges) {
  std::vector<std::string> ids;
  ids.reserve(n);
  for (int i = 0; i < n; ++i) ids.push_back(std::to_string(i));
  return from_indices(std::move(ids), edges);
}

void Graph::build(const std::vector<Edge>& edges) {
  const int n = size();
  adjacency_.assign(n, VertexSet(static_cast<std::size_t>(n)));
  lists_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error("edge references a vertex index out of range");
    if (u == v) throw Error("self-loop at vertex '" + ids_[u] + "'");
    if (adjacency_[u][v]) throw Error("duplicate edge {" + ids_[u] + ", " + ids_[v] + "}");
    adjacency_[u].set(v);
    adjacency_[v].set(u);
  }
  edge_count_ = edges.size();
  for (int v = 0; v < n; ++v) lists_[v] = members_of(adjacency_[v]);

  std::vector<int> d(static_cast<std::size_t>(n) * n, -1);
  for (int s = 0; s < n; ++s) {
    int* row = d.data() + static_cast<std::size_t>(s) * n;
    std::deque<int> queue{s};
    row[s] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : lists_[u])
        if (row[w] < 0) {
          row[w] = row[u] + 1;
          queue.push_back(w);
        }
    }
    for (int t = 0; t < n; ++t)
      if (row[t] < 0) {
        unreachable_ = {s, t};
        distances_.reset();
        return;
      }
  }
  distances_ = std::make_shared<const DistanceMatrix>(n, std::move(d));
}

int Graph::index_of(std::string_view id) const {
  for (int i = 0; i < size(); ++i)
    if (ids_[i] == id) return i;
  throw Error("unknown vertex '" + std::string(id) + "'");
}

std::vector<Graph::Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < size(); ++u)
    for (int v : lists_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

const DistanceMatrix& Graph::distances() const {
  if (!distances_) {
    auto [u, v] = unreachable_;
    throw Error("graph not connected: no path between '" + ids_[u] + "' and '" + ids_[v] + "'");
  }
  return *distances_;
}

int Graph::eccentricity(int v) const {
  const auto& d = distances();
  int e = 0;
  for (int u = 0; u < size(); ++u) e = std::max(e, d(v, u));
  return e;
}

int Graph::diameter() const {
  int diam = 0;
  for (int v = 0; v < size(); ++v) diam = std::max(diam, eccentricity(v));
  return diam;
}

const DistanceMatrix& all_pairs_distances(const Graph& g) { return g.distances(); }

bool operator==(const Graph& a, const Graph& b) { return a.ids() == b.ids() && a.edges() == b.edges(); }

}  // namespace helly
