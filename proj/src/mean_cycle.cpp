#include "helly/mean_cycle.hpp"

#include <optional>

#include "helly/error.hpp"

namespace helly {

MeanCycle min_mean_cycle(const WeightedDigraph& d) {
  const int n = d.nodes;
  for (const auto& a : d.arcs)
    if (a.from < 0 || a.to < 0 || a.from >= n || a.to >= n) throw Error("min_mean_cycle: arc endpoint out of range");

  // walk[k][v]: least weight of a k-arc walk ending at v, starting anywhere.
  using Cell = std::optional<Rational>;
  std::vector<std::vector<Cell>> walk(n + 1, std::vector<Cell>(n));
  for (int v = 0; v < n; ++v) walk[0][v] = Rational(0);
  for (int k = 1; k <= n; ++k)
    for (const auto& a : d.arcs) {
      if (!walk[k - 1][a.from]) continue;
      Rational w = *walk[k - 1][a.from] + a.weight;
      if (!walk[k][a.to] || w < *walk[k][a.to]) walk[k][a.to] = w;
    }

  std::optional<Rational> best;
  for (int v = 0; v < n; ++v) {
    if (!walk[n][v]) continue;
    std::optional<Rational> worst;
    for (int k = 0; k < n; ++k) {
      if (!walk[k][v]) continue;
      Rational ratio = (*walk[n][v] - *walk[k][v]) / (n - k);
      if (!worst || ratio > *worst) worst = ratio;
    }
    if (worst && (!best || *worst < *best)) best = worst;
  }
  if (!best) throw Error("min_mean_cycle: digraph has no directed cycle");

  // Reduced costs w - mean are nonnegative on every cycle; a cycle of tight
  // arcs under shortest-path potentials has mean exactly `best`.
  const Rational lambda = *best;
  std::vector<Rational> pot(n, Rational(0));
  for (int round = 0; round < n; ++round) {
    bool changed = false;
    for (const auto& a : d.arcs) {
      Rational cand = pot[a.from] + a.weight - lambda;
      if (cand < pot[a.to]) {
        pot[a.to] = cand;
        changed = true;
      }
    }
    if (!changed) break;
  }
  std::vector<std::vector<int>> tight(n);
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    const auto& a = d.arcs[i];
    if (pot[a.from] + a.weight - lambda == pot[a.to]) tight[a.from].push_back(static_cast<int>(i));
  }

  // Cycle search in the tight subgraph.
  std::vector<int> state(n, 0), via(n, -1);
  for (int root = 0; root < n; ++root) {
    if (state[root]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next == tight[u].size()) {
        state[u] = 2;
        stack.pop_back();
        continue;
      }
      const int arc = tight[u][next++];
      const int w = d.arcs[arc].to;
      if (state[w] == 1) {
        MeanCycle out{lambda, {}, {}};
        std::vector<int> rev_arcs{arc};
        for (int x = u; x != w; x = d.arcs[via[x]].from) rev_arcs.push_back(via[x]);
        for (auto it = rev_arcs.rbegin(); it != rev_arcs.rend(); ++it) {
          out.arcs.push_back(*it);
          out.cycle.push_back(d.arcs[*it].from);
        }
        return out;
      }
      if (state[w] == 0) {
        state[w] = 1;
        via[w] = arc;
        stack.emplace_back(w, 0);
      }
    }
  }
  throw Error("internal consistency error: no tight cycle at the minimum mean");
}

}  // namespace helly
