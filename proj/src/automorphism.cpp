#include "helly/automorphism.hpp"

#include <algorithm>
#include <numeric>

#include "helly/error.hpp"
#include "helly/helly.hpp"

namespace helly {

Automorphism Automorphism::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t v = 0; v < image_.size(); ++v) inv[image_[v]] = static_cast<int>(v);
  return Automorphism(std::move(inv));
}

VertexSet Automorphism::apply(const VertexSet& s) const {
  VertexSet out(s.size());
  for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) out.set(image_[v]);
  return out;
}

Automorphism check_automorphism(const Graph& g, const std::vector<int>& image) {
  const int n = g.size();
  if (static_cast<int>(image.size()) != n) throw Error("permutation does not cover every vertex");
  std::vector<bool> hit(n, false);
  for (int v : image) {
    if (v < 0 || v >= n || hit[v]) throw Error("permutation is not a bijection on the vertices");
    hit[v] = true;
  }
  for (auto [u, v] : g.edges())
    if (!g.adjacent(image[u], image[v]))
      throw Error("permutation does not preserve adjacency: edge {" + g.id(u) + "," + g.id(v) + "} maps to non-edge {" +
                  g.id(image[u]) + "," + g.id(image[v]) + "}");
  return Automorphism(image);
}

Automorphism identity_automorphism(const Graph& g) {
  std::vector<int> id(g.size());
  std::iota(id.begin(), id.end(), 0);
  return check_automorphism(g, id);
}

std::vector<Automorphism> enumerate_automorphisms(const Graph& g, std::size_t cap) {
  const int n = g.size();
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  std::vector<Automorphism> out;
  auto extend = [&](auto&& self, int v) -> void {
    if (v == n) {
      if (out.size() >= cap) throw Error("automorphism enumeration exceeded the cap of " + std::to_string(cap));
      out.push_back(check_automorphism(g, image));
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || g.degree(w) != g.degree(v)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == g.adjacent(image[u], w);
      if (!ok) continue;
      image[v] = w;
      used[w] = true;
      self(self, v + 1);
      used[w] = false;
    }
    image[v] = -1;
  };
  extend(extend, 0);
  return out;
}

MetricFunction act_on_function(const Automorphism& a, const MetricFunction& f) {
  if (f.size() != a.size()) throw Error("act_on_function: function domain does not match the automorphism");
  MetricFunction out;
  out.values.resize(f.size());
  // (a.f)(a(y)) = f(y)
  for (int y = 0; y < f.size(); ++y) out.values[a(y)] = f[y];
  return out;
}

std::vector<int> induced_on_round_cliques(const Automorphism& a, const CliquePoset& p) {
  std::vector<int> perm(p.elements.size());
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    int j = p.index_of(a.apply(p.elements[i].members));
    if (j < 0) throw Error("induced_on_round_cliques: image of a round clique is not in the poset");
    perm[i] = j;
  }
  return perm;
}

std::vector<int> orbit_representatives(int n, const std::vector<Automorphism>& gens) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : gens) {
    if (a.size() != n) throw Error("generator acts on a different vertex set");
    for (int x = 0; x < n; ++x) {
      int rx = find(x), ry = find(a(x));
      if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
    }
  }
  std::vector<int> rep(n);
  for (int x = 0; x < n; ++x) rep[x] = find(x);
  return rep;
}

std::optional<RoundClique> elliptic_witness(const Graph& g, const std::vector<Automorphism>& gens, bool check_helly) {
  const CliquePoset poset = round_cliques(g, check_helly);
  for (const auto& c : poset.elements) {
    bool stable = true;
    for (const auto& a : gens)
      if (a.apply(c.members) != c.members) {
        stable = false;
        break;
      }
    if (stable) return c;
  }
  if (check_helly)
    throw Error("internal consistency error: no stabilized round clique on a finite Helly graph");
  return std::nullopt;
}

std::vector<MetricFunction> fixed_grid_vertices(const Graph& g, const std::vector<Automorphism>& gens, int level,
                                                bool check_helly, std::uint64_t budget) {
  const long res = grid_resolution(level);
  g.distances();
  if (check_helly) require_helly(g);
  return extremal_grid_functions(g, res, orbit_representatives(g.size(), gens), budget);
}

FixedSetDistance fixed_set_distance(const Graph& g, const std::vector<Automorphism>& gens_g,
                                    const std::vector<Automorphism>& gens_h, long resolution, bool check_helly,
                                    std::uint64_t budget) {
  if (resolution < 2 || resolution % 2 != 0) throw Error("resolution must be a positive even integer");
  g.distances();
  if (check_helly) require_helly(g);
  const auto fixed_g = extremal_grid_functions(g, resolution, orbit_representatives(g.size(), gens_g), budget);
  const auto fixed_h = extremal_grid_functions(g, resolution, orbit_representatives(g.size(), gens_h), budget);
  if (fixed_g.empty() || fixed_h.empty()) throw Error("fixed_set_distance: empty fixed grid set");
  // Both lists are canonically sorted, so the first strict improvement in
  // row-major order is the least witness pair.
  FixedSetDistance best{sup_distance(fixed_g[0], fixed_h[0]), fixed_g[0], fixed_h[0], resolution};
  for (const auto& f : fixed_g)
    for (const auto& h : fixed_h) {
      Rational d = sup_distance(f, h);
      if (d < best.dist) best = {d, f, h, resolution};
    }
  return best;
}

}  // namespace helly
